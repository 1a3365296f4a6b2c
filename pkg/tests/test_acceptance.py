"""Acceptance criteria 1-9, each reported as one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines are printed
straight to the terminal even when output capture is on.
"""

import statistics
import subprocess
import sys
import time
from math import comb, factorial

import pytest

from permstat.bijections import big_phi, big_psi, phi1, phi2, psi, psi_fv_inv
from permstat.core import DecreasingWeightedSF, DyckPath, SubexcedentFunction, WeightedDyckPath
from permstat.enumeration import count, iterate_decreasing_sf, iterate_dwsf, iterate_wdp
from permstat.matrices import matrix
from permstat.verify import (
    check_involution,
    check_lrm,
    check_random_roundtrip,
    check_roundtrip,
    check_sylvester,
    check_transport,
)

from .conftest import TAU, TAU_PSI, U_EXAMPLE

THEOREM_SIZES = range(1, 9)
TIME_BUDGET_N8 = 60.0


def evaluate(fn):
    """Run ``fn`` -> (ok, detail); an exception counts as a failure."""
    try:
        return fn()
    except Exception as exc:  # reported, then the test fails
        return False, f"{type(exc).__name__}: {exc}"


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    assert ok, detail


def failures(results):
    bad = [r.summary() for r in results if not r.passed]
    cases = sum(r.cases for r in results)
    return bad, cases


@pytest.fixture(scope="module")
def matrices():
    """Every family for n = 1..8, plus the n = 8 build time of the two theorem sides."""
    mats, elapsed = {}, 0.0
    for n in THEOREM_SIZES:
        for family in ("sf", "perm_gc", "perm_gc0"):
            start = time.perf_counter()
            mats[n, family] = matrix(n, family)
            if n == 8 and family != "perm_gc0":
                elapsed += time.perf_counter() - start
    return mats, elapsed


def test_criterion_1_golden_chain(capsys):
    dwsf = DecreasingWeightedSF(
        SubexcedentFunction((5, 4, 0, 3, 0, 0, 2, 0, 0)), (0, 0, 2, 2, 0, 1, 0, 0, 0)
    )
    path = WeightedDyckPath(DyckPath("UUUUUUDDUDDDDDUUDD"), dwsf.weight)
    swapped = WeightedDyckPath(DyckPath("UUUUUDUUDDDDDUDDUD"), dwsf.weight)

    def chain():
        a = phi1(U_EXAMPLE)
        b = phi2(a)
        c = psi(b)
        d = psi_fv_inv(c)
        return a, b, c, d, big_phi(U_EXAMPLE), big_psi(TAU)

    def run():
        got = chain()
        want = (dwsf, path, swapped, TAU, TAU, TAU_PSI)
        if got != want:
            return False, f"chain mismatch: {got}"
        runs = []
        for _ in range(200):
            start = time.perf_counter()
            chain()
            runs.append(time.perf_counter() - start)
        median = statistics.median(runs) * 1e3
        ok = median < 1.0
        return ok, f"all six golden values exact, median {median:.3f} ms (< 1 ms)"

    report(capsys, 1, *evaluate(run))


def test_criterion_2_theorem(capsys, matrices):
    def run():
        mats, elapsed = matrices
        bad = [n for n in THEOREM_SIZES if not mats[n, "sf"].same_entries(mats[n, "perm_gc"])]
        if bad:
            cell = mats[bad[0], "sf"].first_difference(mats[bad[0], "perm_gc"])
            return False, f"sf != perm_gc at n={bad}, first cell {cell}"
        ok = elapsed <= TIME_BUDGET_N8
        return ok, f"sf == perm_gc for n=1..8; n=8 built in {elapsed:.1f} s (<= 60 s)"

    report(capsys, 2, *evaluate(run))


def test_criterion_3_corollary(capsys, matrices):
    def run():
        mats, _ = matrices
        bad = [
            n for n in THEOREM_SIZES if not mats[n, "perm_gc0"].same_entries(mats[n, "perm_gc"])
        ]
        return not bad, "perm_gc0 == perm_gc for n=1..8" if not bad else f"differs at n={bad}"

    report(capsys, 3, *evaluate(run))


def test_criterion_4_transport(capsys):
    def run():
        bad, cases = failures([check_transport(n) for n in range(1, 8)])
        return not bad, f"{cases} transport identities, n<=7" if not bad else "; ".join(bad)

    report(capsys, 4, *evaluate(run))


def test_criterion_5_roundtrips(capsys):
    def run():
        results = [check_roundtrip(n) for n in range(1, 8)]
        results.append(check_random_roundtrip(size=12, cases=1000))
        results += [check_involution(n) for n in range(1, 10)]
        bad, cases = failures(results)
        detail = f"{cases} round-trip cases (n<=7, 1000 random n=12, psi on Dyck paths n<=9)"
        return not bad, detail if not bad else "; ".join(bad)

    report(capsys, 5, *evaluate(run))


def test_criterion_6_cosylvester(capsys):
    def run():
        results = [check_sylvester(n) for n in range(1, 9)]
        bad, cases = failures(results)
        detail = f"{cases} tree comparisons: Psi for n<=8, both path modes for n<=8"
        return not bad, detail if not bad else "; ".join(bad)

    report(capsys, 6, *evaluate(run))


def test_criterion_7_ltr_maxima(capsys):
    def run():
        bad, cases = failures([check_lrm(n) for n in range(1, 8)])
        return not bad, f"{cases} maxima comparisons, n<=7" if not bad else "; ".join(bad)

    report(capsys, 7, *evaluate(run))


def test_criterion_8_counts(capsys, matrices):
    def run():
        problems = []
        for n in range(1, 13):
            oracle = comb(2 * n, n) // (n + 1)
            got = count(iterate_decreasing_sf(n))
            if got != oracle:
                problems.append(f"{got} decreasing functions at n={n}, Catalan {oracle}")
        if comb(24, 12) // 13 != 208012:
            problems.append("Catalan(12) oracle disagrees with 208012")
        for n in range(1, 9):
            for name, it in (("DWSF", iterate_dwsf(n)), ("WDP", iterate_wdp(n))):
                got = count(it)
                if got != factorial(n):
                    problems.append(f"{got} {name} at n={n}")
        mats, _ = matrices
        for (n, family), m in mats.items():
            if int(m.at_one().sum()) != factorial(n):
                problems.append(f"{family} total at n={n}")
        detail = "Catalan n<=12, DWSF and WDP = n! for n<=8, matrix totals = n!"
        return not problems, detail if not problems else "; ".join(problems)

    report(capsys, 8, *evaluate(run))


def cli_output(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "permstat", *args], capture_output=True, check=True
    )
    return proc.stdout


def test_criterion_9_determinism(capsys):
    def run():
        verify = ["verify", "--n-max", "7", "--check", "theorem", "--format", "json"]
        serial = cli_output(*verify, "--jobs", "1")
        parallel = cli_output(*verify, "--jobs", "2")
        mat = ["matrix", "--n", "7", "--family", "sf"]
        same_matrix = cli_output(*mat, "--jobs", "1") == cli_output(*mat, "--jobs", "3")
        ok = serial == parallel and same_matrix
        detail = f"verify JSON ({len(serial)} bytes) and matrix JSON identical for --jobs 1 vs >1"
        return ok, detail if ok else "parallel output differs from serial"

    report(capsys, 9, *evaluate(run))
