"""Named mutation sequences for cycles, ladders and torus quivers.

All builders are pure: they only produce label lists and never look at a
quiver.
"""

from __future__ import annotations

from typing import Sequence

from .generators import BadParameter, g
from .quiver import MutationSequence


def gamma(tokens: Sequence[str]) -> MutationSequence:
    """Cycle sequence ``x_1 .. x_m, x_{m-2}, x_{m-3}, .., x_1``.

    For the cycle ``c_i -> c_{i-1}``, ``c_1 -> c_m`` call it with
    ``[c_m, .., c_2, c_1]``.

    >>> list(gamma(["c_4", "c_3", "c_2", "c_1"]))
    ['c_4', 'c_3', 'c_2', 'c_1', 'c_3', 'c_4']
    """
    tokens = list(tokens)
    m = len(tokens)
    if m < 3:
        raise BadParameter(f"gamma needs at least 3 tokens, got {m}")
    if len(set(tokens)) != m:
        raise BadParameter("gamma tokens must be distinct")
    return MutationSequence(tokens + tokens[m - 3 :: -1])


def _check_handle(i: int) -> None:
    if i < 1:
        raise BadParameter(f"handle index must be >= 1, got {i}")


def sigma(i: int) -> MutationSequence:
    _check_handle(i)
    return MutationSequence(f"{x}_{i}" for x in "edbcabdecab")


def tau(i: int) -> MutationSequence:
    _check_handle(i)
    return MutationSequence(f"{x}_{i}" for x in "ebacedbae")


def _descending_pairs(top: int) -> list[str]:
    # g_1^top, g_3^{top+1}, g_1^{top-1}, g_3^top, ..., g_1^1, g_3^2
    out = []
    for r in range(top, 0, -1):
        out += [g(1, r), g(3, r + 1)]
    return out


def alpha(j: int) -> MutationSequence:
    """Ladder sequence for row ``j``; ``alpha(0) .. alpha(k)`` clears a k-row ladder."""
    if j < 0:
        raise BadParameter(f"row index must be >= 0, got {j}")
    if j == 0:
        steps = ["g_0"]
    elif j == 1:
        steps = [g(3, 1), g(2, 1), g(1, 1), g(3, 1), "g_0"]
    elif j == 2:
        steps = [g(3, 2), g(2, 2), g(2, 1), g(1, 1), g(1, 2), g(3, 2), g(2, 1), g(3, 1), "g_0"]
    else:
        steps = [g(3, j), g(2, j), g(1, j - 2), g(1, j - 1), g(1, j), g(3, j)]
        steps += _descending_pairs(j - 2)
        steps += [g(2, 1), g(3, 1), "g_0"]
    return MutationSequence(steps)


def beta(j: int) -> MutationSequence:
    """Second ladder pass used by the torus sequence.

    The general case is written with a stray ``n`` for ``j`` in its source;
    every ``n`` there is read as ``j``.
    """
    if j < 0:
        raise BadParameter(f"row index must be >= 0, got {j}")
    if j == 0:
        steps: list[str] = []
    elif j == 1:
        steps = [g(1, 1), g(2, 1), g(3, 1)]
    else:
        steps = [g(1, j - 1), g(1, j), g(1, j - 1), g(3, j)]
        steps += _descending_pairs(j - 2)
        steps += [g(2, 1), g(3, 1)]
    return MutationSequence(steps)


def alpha_chain(k: int) -> MutationSequence:
    """``alpha(0) alpha(1) .. alpha(k)``, the ladder quiver's sequence."""
    if k < 0:
        raise BadParameter(f"row count must be >= 0, got {k}")
    steps: list[str] = []
    for j in range(k + 1):
        steps += alpha(j)
    return MutationSequence(steps)


def cycle_sequence(m: int) -> MutationSequence:
    """``gamma`` over the labels of ``cycle_quiver(m)`` in reverse order."""
    return gamma([f"c_{i}" for i in range(m, 0, -1)])


def main_sequence_parts(n: int, p: int) -> list[tuple[str, MutationSequence]]:
    """Named blocks of :func:`main_sequence`, in order."""
    if n < 2:
        raise BadParameter(f"n must be >= 2, got {n}")
    if p < 4:
        raise BadParameter(f"p must be >= 4, got {p}")
    f = lambda i: f"f_{i}"  # noqa: E731
    parts: list[tuple[str, MutationSequence]] = []
    parts.append(("gamma_f", gamma([f(i) for i in range(n + 2, 0, -1)])))
    parts += [(f"sigma_{i}", sigma(i)) for i in range(n, 0, -1)]
    parts += [(f"alpha_{j}", alpha(j)) for j in range(p - 2)]
    second = [f(n + 2), f(2), f(1)] + [f(i) for i in range(3, n + 1)]
    parts.append(("gamma_f2", gamma(second)))
    parts.append((f"f_{n + 1}", MutationSequence([f(n + 1)])))
    parts.append((f"beta_{p - 3}", beta(p - 3)))
    parts += [(f"tau_{i}", tau(i)) for i in range(1, n + 1)]
    return parts


def main_sequence(n: int, p: int) -> MutationSequence:
    """Maximal green sequence for ``torus_quiver(n, p)``."""
    steps: list[str] = []
    for _, part in main_sequence_parts(n, p):
        steps += part
    return MutationSequence(steps)
