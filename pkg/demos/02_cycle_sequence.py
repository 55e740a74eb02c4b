"""Maximal green sequences on oriented cycles.

For an m-cycle c_m -> ... -> c_1 -> c_m, the sequence c_m, c_{m-1}, ..., c_1
followed by c_3, ..., c_m turns every vertex red in 2m - 2 steps. The final
mutable quiver is the same cycle with c_1 and c_2 trading places.
"""

from mgsquiver import cycle_quiver, cycle_sequence, framed, is_maximal_green

for m in range(3, 9):
    seq = cycle_sequence(m)
    report = is_maximal_green(framed(cycle_quiver(m)), seq)
    final = set(report.trace.final.mutable_part().arrow_list())
    swapped = set(cycle_quiver(m).relabel({"c_1": "c_2", "c_2": "c_1"}).arrow_list())
    print(f"m={m}: accepted={report.accepted} length={len(seq)} swapped-cycle={final == swapped}")
    print("   ", " ".join(seq))
