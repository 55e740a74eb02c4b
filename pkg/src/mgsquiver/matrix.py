"""Skew-symmetric exchange-matrix view of ice quivers.

This is an independent route to mutation: the arrow-rewriting code in
:mod:`mgsquiver.quiver` is checked against :func:`matrix_mutate` in the
test suite.
"""

from __future__ import annotations

import numpy as np

from .quiver import Arrow, IceQuiver


def exchange_matrix(q: IceQuiver) -> np.ndarray:
    """Signed adjacency ``B[u, v] = mult(u->v) - mult(v->u)`` in vertex order."""
    pos = {v.id: i for i, v in enumerate(q.vertices)}
    B = np.zeros((len(pos), len(pos)), dtype=np.int64)
    for s, d, m in q.iter_arrows():
        B[pos[s], pos[d]] += m
        B[pos[d], pos[s]] -= m
    return B


def matrix_mutate(B: np.ndarray, k: int, frozen: np.ndarray | None = None) -> np.ndarray:
    """Mutate a skew-symmetric matrix at row/column index ``k``.

    Uses ``b'_ij = -b_ij`` if ``k in {i, j}``, otherwise
    ``b_ij + sgn(b_ik) * max(b_ik * b_kj, 0)``. Entries between two
    indices flagged in ``frozen`` are forced to zero.
    """
    B = np.asarray(B, dtype=np.int64)
    col = B[:, k][:, None]
    row = B[k, :][None, :]
    out = B + np.sign(col) * np.maximum(col * row, 0)
    out[k, :] = -B[k, :]
    out[:, k] = -B[:, k]
    if frozen is not None:
        frozen = np.asarray(frozen, dtype=bool)
        out[np.ix_(frozen, frozen)] = 0
    return out


def from_exchange_matrix(B: np.ndarray, template: IceQuiver) -> IceQuiver:
    """Rebuild a quiver on ``template``'s vertices from a signed matrix."""
    B = np.asarray(B)
    verts = template.vertices
    src, dst = np.nonzero(B > 0)
    arrows = [Arrow(verts[i].id, verts[j].id, int(B[i, j])) for i, j in zip(src, dst)]
    return IceQuiver(verts, arrows)
