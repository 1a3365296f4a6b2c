"""Exhaustive verification suites over all objects of a given size.

Each check returns a ``CheckResult``; nothing is raised for a failed
identity, the first few counterexamples are recorded instead.
"""

import random
from dataclasses import dataclass, field
from math import factorial

from .bijections import (
    big_phi,
    big_phi_inv,
    big_psi,
    big_psi_inv,
    laguerre_to_wdp,
    phi1,
    phi1_inv,
    phi2,
    phi2_inv,
    psi,
    psi_fv,
    psi_fv0,
    psi_fv0_inv,
    psi_fv_inv,
    wdp_to_laguerre,
)
from .core import (
    DOWN,
    LAGUERRE,
    LARGE,
    STANDARD,
    TYPE0,
    Permutation,
    SubexcedentFunction,
    WeightedDyckPath,
    comp_maj,
    comp_mirror,
    dwsf_stats,
    perm_gc,
    perm_gc0,
    perm_ltr_maxima,
    perm_recoil_composition,
    perm_tot,
    perm_tot_vector,
    sf_alpha,
    sf_dc,
    sf_lc,
    sf_zero_positions,
    wdp_dc,
    wdp_gc,
    wdp_tw,
)
from .enumeration import (
    catalan,
    count,
    iterate_decreasing_sf,
    iterate_dwsf,
    iterate_dyck_paths,
    iterate_permutations,
    iterate_subexcedent,
    iterate_wdp,
)
from .matrices import verify_equidistribution
from .sylvester import bst_from_perm, bst_from_wdp

CHECKS = ("theorem", "roundtrip", "transport", "sylvester", "lrm", "counts")
MAX_FAILURES = 5


@dataclass
class CheckResult:
    name: str
    n: int
    cases: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    extra: dict = field(default_factory=dict, repr=False)

    @property
    def passed(self):
        return self.failed == 0

    def expect(self, ok, message):
        self.cases += 1
        if ok:
            return
        self.failed += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(message() if callable(message) else message)

    def summary(self):
        state = "pass" if self.passed else "FAIL"
        line = f"{self.name} n={self.n}: {self.cases} cases [{state}]"
        if self.failed:
            line += f", {self.failed} failed: " + "; ".join(self.failures)
        return line

    def to_json_dict(self):
        return {
            "check": self.name,
            "n": self.n,
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
        }


def check_theorem(n, jobs=1):
    result = CheckResult("theorem", n)
    report = verify_equidistribution(n, jobs)
    result.expect(report.theorem, lambda: f"sf != perm_gc: {report.first_difference}")
    result.expect(
        report.corollary, lambda: f"perm_gc0 != perm_gc: {report.first_difference}"
    )
    for family, total in report.totals.items():
        result.expect(total == factorial(n), f"{family} total {total} != {n}!")
    result.extra["matrices"] = report.matrices
    return result


def check_counts(n):
    result = CheckResult("counts", n)
    expected = factorial(n)
    for name, it in (
        ("permutations", iterate_permutations(n)),
        ("subexcedent functions", iterate_subexcedent(n)),
        ("decreasing weighted functions", iterate_dwsf(n)),
        ("weighted Dyck paths", iterate_wdp(n)),
    ):
        got = count(it)
        result.expect(got == expected, f"{got} {name}, expected {expected}")
    got = count(iterate_decreasing_sf(n))
    result.expect(got == catalan(n), f"{got} decreasing functions != Catalan {catalan(n)}")
    return result


def _roundtrip_wdp(result, x):
    result.expect(psi(psi(x)) == x, lambda: f"psi not an involution on {x}")
    result.expect(
        psi(x).path.meeting_heights() == x.path.meeting_heights(),
        lambda: f"psi moved meeting heights of {x}",
    )
    result.expect(psi_fv(psi_fv_inv(x)) == x, lambda: f"psi_fv o inverse != id on {x}")
    result.expect(phi2(phi2_inv(x)) == x, lambda: f"phi2 o inverse != id on {x}")
    lag = wdp_to_laguerre(x, LAGUERRE)
    result.expect(laguerre_to_wdp(lag) == x, lambda: f"Laguerre round trip fails on {x}")
    if x.weight[-1] == 0:
        large = wdp_to_laguerre(x, LARGE)
        result.expect(
            laguerre_to_wdp(large) == x, lambda: f"large Laguerre round trip fails on {x}"
        )
        result.expect(
            psi_fv0(psi_fv0_inv(x)) == x, lambda: f"psi_fv0 o inverse != id on {x}"
        )
        result.expect(
            wdp_to_laguerre(laguerre_to_wdp(large), LARGE) == large,
            lambda: f"large Laguerre reverse round trip fails on {large}",
        )
    result.expect(
        wdp_to_laguerre(laguerre_to_wdp(lag), LAGUERRE) == lag,
        lambda: f"Laguerre reverse round trip fails on {lag}",
    )


def _roundtrip_perm(result, sigma):
    result.expect(psi_fv_inv(psi_fv(sigma)) == sigma, lambda: f"psi_fv fails on {sigma}")
    result.expect(
        psi_fv0_inv(psi_fv0(sigma)) == sigma, lambda: f"psi_fv0 fails on {sigma}"
    )
    result.expect(big_psi_inv(big_psi(sigma)) == sigma, lambda: f"Psi fails on {sigma}")
    result.expect(big_phi(big_phi_inv(sigma)) == sigma, lambda: f"Phi fails on {sigma}")


def _roundtrip_sf(result, sf):
    result.expect(phi1_inv(phi1(sf)) == sf, lambda: f"phi1 fails on {sf}")
    result.expect(big_phi_inv(big_phi(sf)) == sf, lambda: f"Phi inverse fails on {sf}")


def check_roundtrip(n):
    """Every map composed with its inverse, both ways, on every object."""
    result = CheckResult("roundtrip", n)
    for sigma in iterate_permutations(n):
        _roundtrip_perm(result, sigma)
    images = set()
    for sf in iterate_subexcedent(n):
        _roundtrip_sf(result, sf)
        images.add(big_phi(sf).word)
    result.expect(len(images) == factorial(n), f"Phi hits {len(images)} permutations")
    for x in iterate_wdp(n):
        _roundtrip_wdp(result, x)
    for x in iterate_dwsf(n):
        result.expect(phi2_inv(phi2(x)) == x, lambda: f"phi2 fails on {x}")
        result.expect(phi1(phi1_inv(x)) == x, lambda: f"phi1 inverse fails on {x}")
    return result


def check_involution(n):
    """psi squares to the identity and keeps every meeting height."""
    result = CheckResult("involution", n)
    for path in iterate_dyck_paths(n):
        x = WeightedDyckPath(path, (0,) * n)
        y = psi(x)
        result.expect(psi(y) == x, lambda: f"psi not an involution on {path}")
        result.expect(
            y.path.meeting_heights() == path.meeting_heights(),
            lambda: f"psi moved meeting heights of {path}",
        )
    return result


def check_random_roundtrip(size=12, cases=1000, seed=0):
    rng = random.Random(seed)
    result = CheckResult("roundtrip-random", size)
    for _ in range(cases):
        word = list(range(1, size + 1))
        rng.shuffle(word)
        sigma = Permutation(word)
        _roundtrip_perm(result, sigma)
        sf = SubexcedentFunction([rng.randint(0, size - i) for i in range(1, size + 1)])
        _roundtrip_sf(result, sf)
        word = list(range(1, size + 1))
        rng.shuffle(word)
        _roundtrip_wdp(result, psi_fv(Permutation(word)))
    return result


def check_transport(n):
    """Statistic transport through each bijection of the chain."""
    result = CheckResult("transport", n)
    for sigma in iterate_permutations(n):
        x = psi_fv(sigma)
        stats = (wdp_tw(x), wdp_gc(x), wdp_dc(x))
        want = (perm_tot(sigma), perm_gc(sigma), perm_recoil_composition(sigma))
        result.expect(stats == want, lambda: f"psi_fv transport fails on {sigma}")
        x0 = psi_fv0(sigma)
        stats = (wdp_tw(x0), wdp_gc(x0, TYPE0), wdp_dc(x0, TYPE0))
        want = (perm_tot(sigma), perm_gc0(sigma), perm_recoil_composition(sigma))
        result.expect(stats == want, lambda: f"psi_fv0 transport fails on {sigma}")
    for x in iterate_wdp(n):
        y = psi(x)
        stats = (wdp_tw(y), wdp_gc(y, TYPE0), wdp_dc(y, TYPE0))
        want = (wdp_tw(x), wdp_gc(x, STANDARD), wdp_dc(x, STANDARD))
        result.expect(stats == want, lambda: f"psi transport fails on {x}")
    for sf in iterate_subexcedent(n):
        s = dwsf_stats(phi1(sf))
        want = (sf_alpha(sf), sf_dc(sf), sf_lc(sf))
        result.expect(
            (s.tw, s.dc, s.lc) == want, lambda: f"phi1 transport fails on {sf}"
        )
    for d in iterate_dwsf(n):
        s = dwsf_stats(d)
        result.expect(
            s.tw == s.inv - comp_maj(comp_mirror(s.lc)),
            lambda: f"tw != inv - maj(mirror(LC)) on {d}",
        )
        y = phi2(d)
        stats = (wdp_tw(y), wdp_gc(y, TYPE0), wdp_dc(y, TYPE0))
        result.expect(
            stats == (s.tw, s.lc, s.dc), lambda: f"phi2 transport fails on {d}"
        )
    return result


def check_sylvester(n):
    result = CheckResult("sylvester", n)
    for sigma in iterate_permutations(n):
        tree = bst_from_perm(sigma)
        result.expect(
            bst_from_perm(big_psi(sigma)) == tree,
            lambda: f"Psi leaves the co-sylvester class of {sigma}",
        )
        result.expect(
            bst_from_wdp(psi_fv(sigma), "direct") == tree,
            lambda: f"direct path tree differs for {sigma}",
        )
        result.expect(
            bst_from_wdp(psi_fv0(sigma), "shifted") == tree,
            lambda: f"shifted path tree differs for {sigma}",
        )
    return result


def check_lrm(n):
    """Zero positions of u are the left-to-right maxima of Phi(u)."""
    result = CheckResult("lrm", n)
    for sf in iterate_subexcedent(n):
        sigma = big_phi(sf)
        result.expect(
            sf_zero_positions(sf) == perm_ltr_maxima(sigma),
            lambda: f"zero positions of {sf} != maxima of {sigma}",
        )
    for sigma in iterate_permutations(n):
        x = psi_fv(sigma)
        tot = perm_tot_vector(sigma)
        # k is a maximum iff it exceeds its left neighbour and plays no 2
        from_path = {
            k for k in range(1, n + 1) if x.steps[2 * k - 1] == DOWN and tot[k - 1] == 0
        }
        result.expect(
            perm_ltr_maxima(sigma) == from_path,
            lambda: f"maxima of {sigma} disagree with its path",
        )
    return result


def run_checks(n_max, checks=CHECKS, jobs=1, theorem_max=9):
    """Run the named checks for n = 1..n_max, in a fixed order."""
    results = []
    for name in checks:
        for n in range(1, n_max + 1):
            if name == "theorem":
                if n <= theorem_max:
                    results.append(check_theorem(n, jobs))
            elif name == "roundtrip":
                results.append(check_roundtrip(n))
                results.append(check_involution(n))
            elif name == "transport":
                results.append(check_transport(n))
            elif name == "sylvester":
                results.append(check_sylvester(n))
            elif name == "lrm":
                results.append(check_lrm(n))
            elif name == "counts":
                results.append(check_counts(n))
            else:
                raise ValueError(f"unknown check {name!r}")
        if name == "roundtrip":
            results.append(check_random_roundtrip())
    return results
