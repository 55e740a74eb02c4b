"""Shared test helpers: random quivers and trace invariants."""

from __future__ import annotations

import numpy as np

from mgsquiver.quiver import IceQuiver, Vertex, VertexColor, colors, mutate

# fixed seed for every numpy-driven randomized suite
SEED = 20150301


def random_quiver(
    rng: np.random.Generator,
    max_vertices: int = 12,
    max_mult: int = 3,
    density: float = 0.35,
    frozen: bool = True,
) -> IceQuiver:
    """Random valid ice quiver: no loops, 2-cycles or frozen-frozen arrows."""
    n = int(rng.integers(1, max_vertices + 1))
    n_frozen = int(rng.integers(0, n)) if frozen else 0
    verts = [Vertex(i, f"v{i}", i >= n - n_frozen) for i in range(n)]
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            if verts[i].frozen and verts[j].frozen:
                continue
            if rng.random() < density:
                m = int(rng.integers(1, max_mult + 1))
                arrows.append((i, j, m) if rng.random() < 0.5 else (j, i, m))
    return IceQuiver(verts, arrows)


def arrow_set(q: IceQuiver) -> set[tuple[str, str, int]]:
    return set(q.arrow_list())


def check_trace(trace) -> None:
    """Green flip and sign coherence at every step of a green trace."""
    prev = trace.initial
    for entry in trace.entries:
        assert mutate(prev, entry.label) == entry.quiver
        assert entry.colors == colors(entry.quiver)
        assert VertexColor.MIXED not in entry.colors.values()
        assert entry.colors[entry.label] is VertexColor.RED
        prev = entry.quiver
