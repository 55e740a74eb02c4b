"""Acceptance gate: one check per criterion, one PASS/FAIL line each.

Run under pytest (lines are printed even with output capture on) or
directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import json
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import properties  # noqa: E402
from helpers import SEED  # noqa: E402
from mgsquiver.cli import main  # noqa: E402
from mgsquiver.generators import cycle_quiver, ladder_quiver, torus_quiver  # noqa: E402
from mgsquiver.quiver import IceQuiver, framed, is_maximal_green  # noqa: E402
from mgsquiver.search import SearchConfig, enumerate_mgs  # noqa: E402
from mgsquiver.sequences import alpha, alpha_chain, beta, cycle_sequence, main_sequence  # noqa: E402

GOLDEN = Path(__file__).parent / "data" / "torus_3_7_drawn.txt"
GRID = [(n, p) for n in (2, 3, 4) for p in (4, 5, 6, 7)]


def torus_grid():
    slow, rejected = [], []
    for n, p in GRID:
        out = io.StringIO()
        t0 = time.perf_counter()
        code = main(["verify", "--family", "torus", "--n", str(n), "--p", str(p), "--paper-sequence"], out=out)
        dt = time.perf_counter() - t0
        report = json.loads(out.getvalue())
        n_mut = len(torus_quiver(n, p))
        if code != 0 or not report["accepted"] or report["final_colors"]["red"] != n_mut:
            rejected.append((n, p))
        if dt >= 1.0:
            slow.append((n, p, round(dt, 3)))
    ok = not slow and not rejected
    return ok, f"{len(GRID) - len(rejected)}/{len(GRID)} accepted, slow={slow}"


def cycle_sequences():
    bad = []
    swap = {"c_1": "c_2", "c_2": "c_1"}
    for m in range(3, 11):
        report = is_maximal_green(framed(cycle_quiver(m)), cycle_sequence(m))
        final = set(report.trace.final.mutable_part().arrow_list()) if report.trace else set()
        if not report.accepted or final != set(cycle_quiver(m).relabel(swap).arrow_list()):
            bad.append(m)
    return not bad, f"m=3..10, failing={bad}"


def _tail_accepted(k, orientation):
    return is_maximal_green(framed(ladder_quiver(k, orientation)), alpha_chain(k)).accepted


def ladder_chains():
    accepted = [_tail_accepted(k, "standalone") for k in range(7)]
    return all(accepted), f"standalone accepted for k={[k for k, a in enumerate(accepted) if a]}"


def ladder_chain_unique_variant():
    # literal reading: for every k exactly one orientation passes, always the same one
    winners = {}
    for k in range(7):
        winners[k] = [o for o in ("standalone", "embedded") if _tail_accepted(k, o)]
    ambiguous = [k for k, w in winners.items() if len(w) != 1]
    chosen = {w[0] for w in winners.values() if len(w) == 1}
    ok = not ambiguous and len(chosen) == 1
    detail = ", ".join(f"k={k}:{'+'.join(w) or 'none'}" for k, w in winners.items())
    return ok, detail


def golden_transcription():
    drawn = set()
    for line in GOLDEN.read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            s, d, m = line.split()
            drawn.add((s, d, int(m)))
    q = torus_quiver(3, 7, "embedded")
    arrows = set(q.arrow_list())
    doubles = sum(a.mult == 2 for a in q.arrows)
    ok = len(q) == 33 and len(q.arrows) == 61 and doubles == 3 and arrows == drawn
    return ok, f"vertices={len(q)} arrows={len(q.arrows)} mult2={doubles} diff={len(arrows ^ drawn)}"


def oracle_suite():
    t0 = time.perf_counter()
    cases = [
        (IceQuiver.from_labels(["1", "2"], [("1", "2")]), {("1", "2"), ("2", "1", "2")}),
        (IceQuiver.from_labels(["1"], []), {("1",)}),
        (IceQuiver.from_labels(["1", "2"], []), {("1", "2"), ("2", "1")}),
    ]
    ok = True
    for q, expected in cases:
        res = enumerate_mgs(q, SearchConfig(max_len=6))
        got = {tuple(s) for s in res.found}
        reverified = all(is_maximal_green(framed(q), s).accepted for s in res.found)
        ok &= got == expected and res.exhausted and reverified
    dt = time.perf_counter() - t0
    return ok and dt < 1.0, f"3 oracles, {dt:.3f}s"


def property_suites():
    t0 = time.perf_counter()
    runners = [
        properties.involution,
        properties.matrix_agreement,
        properties.validity_closure,
        properties.green_walks,
        properties.green_traces,
        properties.subquiver_lifting,
    ]
    counts = {}
    try:
        for run in runners:
            counts[run.__name__] = run(np.random.default_rng(SEED), cases=500)
    except AssertionError as err:
        return False, f"{run.__name__} violated: {err}"
    dt = time.perf_counter() - t0
    ok = all(c >= 500 for c in counts.values()) and dt < 30.0
    return ok, f"seed={SEED}, {sum(counts.values())} cases in {dt:.2f}s"


def sequence_lengths():
    bad = []
    for n, p in GRID:
        seq = main_sequence(n, p)
        report = is_maximal_green(framed(torus_quiver(n, p)), seq)
        closed = (
            (2 * (n + 2) - 2) + 11 * n + sum(len(alpha(j)) for j in range(p - 2))
            + (2 * (n + 1) - 2) + 1 + len(beta(p - 3)) + 9 * n
        )
        trace_len = len(report.trace) if report.trace else -1
        if not (len(seq) == trace_len == closed == report.sequence_length):
            bad.append((n, p, len(seq), trace_len, closed))
    return not bad, f"{len(GRID)} grid points, mismatches={bad}"


CRITERIA = [
    ("1 torus grid", torus_grid),
    ("2 cycle sequences", cycle_sequences),
    ("3 ladder chains (standalone)", ladder_chains),
    ("3 ladder chains (one variant per k)", ladder_chain_unique_variant),
    ("4 golden transcription", golden_transcription),
    ("5 search oracles", oracle_suite),
    ("6 property suites", property_suites),
    ("7 sequence lengths", sequence_lengths),
]


@pytest.mark.parametrize("name, check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for name, check in CRITERIA:
        ok, detail = check()
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")
    sys.exit(1 if failures else 0)
