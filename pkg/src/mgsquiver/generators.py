"""Constructors for the oriented cycles, ladder quivers and torus quivers.

Labels are flat ASCII: ``c_3``, ``f_5``, ``a_2``, ``g_0``, ``g_1^2``
(row index as the superscript).
"""

from __future__ import annotations

from .quiver import IceQuiver


class BadParameter(ValueError):
    pass


def g(col: int, row: int) -> str:
    """Label of the ladder vertex in column ``col`` (1..3) of row ``row``."""
    return f"g_{col}^{row}"


def cycle_quiver(m: int) -> IceQuiver:
    """Oriented m-cycle on ``c_1..c_m`` with ``c_i -> c_{i-1}`` and ``c_1 -> c_m``."""
    if m < 3:
        raise BadParameter(f"cycle length m must be >= 3, got {m}")
    labels = [f"c_{i}" for i in range(1, m + 1)]
    arrows = [(f"c_{i}", f"c_{i - 1}") for i in range(2, m + 1)]
    arrows.append(("c_1", f"c_{m}"))
    return IceQuiver.from_labels(labels, arrows)


def _ladder_labels(k: int) -> list[str]:
    labels = ["g_0"]
    for j in range(1, k + 1):
        labels += [g(1, j), g(2, j), g(3, j)]
    return labels


def _rung_arrows(k: int) -> list[tuple[str, str]]:
    # arrows joining row j to row j+1; identical in both ladder drawings
    arrows = []
    for j in range(1, k):
        arrows += [
            (g(1, j + 1), g(1, j)),
            (g(1, j), g(2, j + 1)),
            (g(2, j + 1), g(3, j)),
            (g(3, j), g(3, j + 1)),
        ]
    return arrows


def ladder_quiver(k: int, orientation: str = "standalone") -> IceQuiver:
    """Ladder quiver with apex ``g_0`` and ``k`` rows ``g_1^j, g_2^j, g_3^j``.

    ``orientation="standalone"`` follows the separate ladder drawing
    (``g_1^1 -> g_0 -> g_3^1`` and row arrows ``g_3^j -> g_2^j -> g_1^j``).
    ``orientation="embedded"`` is the ladder as drawn inside the ``n=3, p=7``
    torus picture, which reverses the two arrows at ``g_0`` and the two
    row-1 arrows. Only the standalone orientation admits ``alpha_chain(k)``
    as a maximal green sequence for ``k >= 2``.
    """
    if k < 0:
        raise BadParameter(f"ladder row count k must be >= 0, got {k}")
    if orientation not in ("standalone", "embedded"):
        raise BadParameter(f"unknown ladder orientation {orientation!r}")
    arrows: list[tuple[str, str]] = []
    if k >= 1:
        if orientation == "standalone":
            arrows += [(g(1, 1), "g_0"), ("g_0", g(3, 1))]
            arrows += [(g(2, 1), g(1, 1)), (g(3, 1), g(2, 1))]
        else:
            arrows += [("g_0", g(1, 1)), (g(3, 1), "g_0")]
            arrows += [(g(1, 1), g(2, 1)), (g(2, 1), g(3, 1))]
    for j in range(2, k + 1):
        arrows += [(g(2, j), g(1, j)), (g(3, j), g(2, j))]
    arrows += _rung_arrows(k)
    return IceQuiver.from_labels(_ladder_labels(k), arrows)


def torus_quiver(n: int, p: int, ladder_orientation: str = "standalone") -> IceQuiver:
    """Quiver of the genus-``n`` surface with ``p`` punctures.

    Vertices: ``f_1..f_{n+2}``; handle blocks ``a_i..e_i`` for ``1 <= i <= n``;
    and the ladder ``g_0, g_*^j`` for ``1 <= j <= p-3``; ``6n + 3p - 6`` in
    total. The arrow patterns generalize the drawn ``n=3, p=7`` instance.

    ``ladder_orientation`` picks the orientation of the two arrows at ``g_0``
    and the two row-1 arrows. ``"embedded"`` is the orientation drawn in the
    ``n=3, p=7`` torus picture; the main sequence is *not* green on it.
    ``"standalone"`` (default) uses the separate ladder drawing, so the
    ladder is exactly ``ladder_quiver(p - 3)`` as a full subquiver, and the
    main sequence verifies.
    """
    if n < 2:
        raise BadParameter(f"n must be >= 2, got {n}")
    if p < 4:
        raise BadParameter(f"p must be >= 4, got {p}")
    if ladder_orientation not in ("standalone", "embedded"):
        raise BadParameter(f"unknown ladder orientation {ladder_orientation!r}")
    f = lambda i: f"f_{i}"  # noqa: E731
    rows = p - 3

    labels = [f(i) for i in range(1, n + 3)]
    for i in range(1, n + 1):
        labels += [f"a_{i}", f"b_{i}", f"c_{i}", f"d_{i}", f"e_{i}"]
    labels += _ladder_labels(rows)

    arrows: list[tuple] = []
    # f-cycle: f_2->f_1, f_3->f_2, f_1->f_5, f_5->f_4, f_4->f_3 when n=3
    arrows += [(f(i + 1), f(i)) for i in range(1, n)]
    arrows += [(f(1), f(n + 2)), (f(n + 2), f(n + 1)), (f(n + 1), f(n))]
    # triangles on the f-cycle: e_i->f_i, f_i->e_{i+1}, f_{n+2}->e_1
    arrows += [(f"e_{i}", f(i)) for i in range(1, n + 1)]
    arrows += [(f(i), f"e_{i + 1}") for i in range(1, n)]
    arrows.append((f(n + 2), "e_1"))
    # handle blocks, identical for each i; c_i => b_i is a double arrow
    for i in range(1, n + 1):
        a, b, c, d, e = (f"{x}_{i}" for x in "abcde")
        arrows += [
            (d, e), (e, a), (a, d), (b, d), (d, c), (b, a), (a, c), (c, b, 2),
        ]
    # the ladder is a full subquiver; only rows 1 and g_0 depend on orientation
    arrows += ladder_quiver(rows, ladder_orientation).arrow_list()
    # last ladder row hangs off f_n, f_{n+1}, f_{n+2}
    arrows += [
        (f(n), g(1, rows)),
        (g(1, rows), f(n + 1)),
        (f(n + 1), g(3, rows)),
        (g(3, rows), f(n + 2)),
    ]
    return IceQuiver.from_labels(labels, arrows)
