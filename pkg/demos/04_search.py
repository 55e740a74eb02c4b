"""Exhaustive search for maximal green sequences on small quivers.

The A2 quiver 1 -> 2 has exactly two: the short one (1, 2) and the long
one (2, 1, 2). An oriented 3-cycle needs four steps, so a search bounded at
three comes back empty but exhausted, which proves there is none that short.
"""

from mgsquiver import IceQuiver, SearchConfig, cycle_quiver, enumerate_mgs, exists_mgs

a2 = IceQuiver.from_labels(["1", "2"], [("1", "2")])
res = enumerate_mgs(a2, SearchConfig(max_len=6))
print("A2:", [list(s) for s in res.found], "exhausted:", res.exhausted)

c3 = cycle_quiver(3)
for bound in (3, 4):
    seq, exhausted = exists_mgs(c3, SearchConfig(max_len=bound, mode="first"))
    print(f"3-cycle, max_len={bound}:", list(seq) if seq else None, "exhausted:", exhausted)

res = enumerate_mgs(cycle_quiver(4), SearchConfig(max_len=8, worker_count=2))
print(f"4-cycle up to length 8: {len(res.found)} sequences, {res.states_visited} states, "
      f"shortest={list(res.found[0])}")
