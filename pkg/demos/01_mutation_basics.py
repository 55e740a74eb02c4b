"""Mutating a small quiver by hand and watching vertex colors change.

Start from the linear quiver 1 -> 2 -> 3, frame it, and mutate the middle
vertex. The 2-path through 2 produces a new arrow 1 -> 3, the arrows at 2
reverse, and 2 turns red because its frozen copy now points into it.
"""

from mgsquiver import IceQuiver, colors, framed, mutate

q = IceQuiver.from_labels(["1", "2", "3"], [("1", "2"), ("2", "3")])
state = framed(q)
print("framed:", state.arrow_list())
print("colors:", {k: c.value for k, c in colors(state).items()})

state = mutate(state, "2")
print("\nafter mutating at 2:", state.arrow_list())
print("colors:", {k: c.value for k, c in colors(state).items()})

# mutation is an involution
assert mutate(state, "2") == framed(q)
print("\nmutating at 2 again restores the framed quiver")
