"""Composition-indexed q-transition matrices and the equidistribution check.

A matrix of size n is stored as an integer array ``coeffs`` of shape
``(2**(n-1), 2**(n-1), n*(n-1)//2 + 1)``: ``coeffs[r, c, e]`` counts the
objects whose row statistic has descent mask ``r``, whose column statistic
has mask ``c`` and whose q-exponent is ``e``.

Families:

``perm_gc``
    rows GC(sigma), columns Rec(sigma), exponent tot(sigma).
``perm_gc0``
    rows GC0(sigma), columns Rec(sigma), exponent tot(sigma).
``sf``
    rows LC(u), columns DC(u), exponent inv(u) - maj(mirror(LC(u))).
"""

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .core import (
    Permutation,
    SubexcedentFunction,
    comp_maj,
    comp_mirror,
    perm_gc,
    perm_gc0,
    perm_recoil_composition,
    perm_tot,
    sf_dc,
    sf_inv,
    sf_lc,
)
from .enumeration import iterate_compositions, max_n
from .errors import InvalidInput, InvariantViolation, ResourceLimit

FAMILIES = ("perm_gc", "perm_gc0", "sf")
MATRIX_MAX_N = 9


@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in q with nonnegative integer coefficients, lowest power first."""

    coefficients: tuple = ()

    def __post_init__(self):
        c = [int(x) for x in self.coefficients]
        if any(x < 0 for x in c):
            raise InvalidInput(f"negative coefficient in {c}")
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __call__(self, q):
        out = 0
        for c in reversed(self.coefficients):
            out = out * q + c
        return out

    def __bool__(self):
        return bool(self.coefficients)

    def __str__(self):
        terms = []
        for e in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[e]
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            mono = "q" if e == 1 else f"q^{e}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"


def _matrix_limit():
    if os.environ.get("PERMSTAT_MAX_N") is not None:
        return max_n()
    return MATRIX_MAX_N


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    n: int
    family: str
    coeffs: np.ndarray = field(repr=False)

    @property
    def index(self):
        return iterate_compositions(self.n)

    def entry(self, row, col):
        """Polynomial at (row, col); compositions or integer masks both work."""
        r = row if isinstance(row, int) else row.mask
        c = col if isinstance(col, int) else col.mask
        return QPolynomial(tuple(self.coeffs[r, c].tolist()))

    def at_one(self):
        return self.coeffs.sum(axis=2)

    def total(self):
        return int(self.coeffs.sum())

    def same_entries(self, other):
        return self.n == other.n and np.array_equal(self.coeffs, other.coeffs)

    def first_difference(self, other):
        """First (row, col) in index order where the polynomials differ, or None."""
        diff = np.argwhere((self.coeffs != other.coeffs).any(axis=2))
        if not len(diff):
            return None
        r, c = (int(v) for v in diff[0])
        return r, c

    def to_json_dict(self):
        size = self.coeffs.shape[0]
        return {
            "n": self.n,
            "family": self.family,
            "index": [list(comp.parts) for comp in self.index],
            "entries": [
                [list(self.entry(r, c).coefficients) for c in range(size)]
                for r in range(size)
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict())

    def to_text(self):
        index = self.index
        size = len(index)
        lines = []
        for r in range(size):
            cells = [str(self.entry(r, c)) for c in range(size)]
            lines.append(f"{index[r]}: " + "  ".join(cells))
        return "\n".join(lines)


def _perm_cells(n, family, part, parts):
    words = itertools.islice(itertools.permutations(range(1, n + 1)), part, None, parts)
    row_stat = perm_gc if family == "perm_gc" else perm_gc0
    for word in words:
        sigma = Permutation(word)
        yield (
            row_stat(sigma).mask,
            perm_recoil_composition(sigma).mask,
            perm_tot(sigma),
        )


def _sf_cells(n, part, parts):
    entries = itertools.product(*(range(n - i) for i in range(n)))
    for u in itertools.islice(entries, part, None, parts):
        sf = SubexcedentFunction(u)
        lc = sf_lc(sf)
        yield lc.mask, sf_dc(sf).mask, sf_inv(sf) - comp_maj(comp_mirror(lc))


def _accumulate(n, family, part=0, parts=1):
    """Flattened cell counts for every ``parts``-th object starting at ``part``."""
    size = 1 << (n - 1)
    depth = n * (n - 1) // 2 + 1
    if family == "sf":
        cells = _sf_cells(n, part, parts)
    else:
        cells = _perm_cells(n, family, part, parts)
    flat = []
    for r, c, e in cells:
        if not 0 <= e < depth:
            raise InvariantViolation(f"exponent {e} outside 0..{depth - 1} at n={n}")
        flat.append((r * size + c) * depth + e)
    return np.bincount(
        np.asarray(flat, dtype=np.int64), minlength=size * size * depth
    ).astype(np.int64)


def matrix(n, family, jobs=1):
    """Transition matrix of ``family`` at size ``n``.

    With ``jobs > 1`` the enumeration is split round-robin over worker
    processes; integer addition makes the result identical to a serial run.
    """
    if family not in FAMILIES:
        raise InvalidInput(f"unknown family {family!r}, expected one of {FAMILIES}")
    limit = _matrix_limit()
    if not 1 <= n <= limit:
        raise ResourceLimit(f"matrix size must be in 1..{limit}, got {n}")
    size = 1 << (n - 1)
    depth = n * (n - 1) // 2 + 1
    if jobs <= 1:
        flat = _accumulate(n, family)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_accumulate, n, family, part, jobs) for part in range(jobs)
            ]
            flat = np.zeros(size * size * depth, dtype=np.int64)
            for fut in futures:
                flat += fut.result()
    coeffs = flat.reshape(size, size, depth)
    expected = factorial(n)
    if int(coeffs.sum()) != expected:
        raise InvariantViolation(f"matrix total {int(coeffs.sum())} != {n}! = {expected}")
    return TransitionMatrix(n, family, coeffs)


@dataclass
class EquidistributionReport:
    n: int
    theorem: bool
    corollary: bool
    totals: dict
    first_difference: dict | None = None
    matrices: dict = field(default_factory=dict, repr=False)

    @property
    def ok(self):
        return self.theorem and self.corollary and all(
            t == factorial(self.n) for t in self.totals.values()
        )

    def summary(self):
        state = "pass" if self.ok else "FAIL"
        line = (
            f"n={self.n}: sf == perm_gc {self.theorem}, "
            f"perm_gc0 == perm_gc {self.corollary}, "
            f"totals {sorted(set(self.totals.values()))} [{state}]"
        )
        if self.first_difference:
            line += f" first difference {self.first_difference}"
        return line


def _describe_difference(a, b):
    cell = a.first_difference(b)
    if cell is None:
        return None
    r, c = cell
    index = a.index
    return {
        "families": [a.family, b.family],
        "row": list(index[r].parts),
        "col": list(index[c].parts),
        a.family: str(a.entry(r, c)),
        b.family: str(b.entry(r, c)),
    }


def verify_equidistribution(n, jobs=1):
    """Compare the three families cell by cell as exact polynomials."""
    mats = {family: matrix(n, family, jobs) for family in FAMILIES}
    base = mats["perm_gc"]
    theorem = mats["sf"].same_entries(base)
    corollary = mats["perm_gc0"].same_entries(base)
    diff = _describe_difference(mats["sf"], base) or _describe_difference(
        mats["perm_gc0"], base
    )
    return EquidistributionReport(
        n=n,
        theorem=theorem,
        corollary=corollary,
        totals={family: m.total() for family, m in mats.items()},
        first_difference=diff,
        matrices=mats,
    )
