"""Exhaustive, deterministic generators for every object family.

All generators are lazy.  Sizes above the guard (12 by default, or the
``PERMSTAT_MAX_N`` environment variable) raise ``ResourceLimit``.
"""

import itertools
import os

from .core import (
    DOWN,
    UP,
    Composition,
    DecreasingWeightedSF,
    DyckPath,
    Permutation,
    SubexcedentFunction,
    WeightedDyckPath,
    dwsf_max_weight,
)
from .errors import InvalidInput, ResourceLimit

DEFAULT_MAX_N = 12


def max_n():
    raw = os.environ.get("PERMSTAT_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError as exc:
        raise InvalidInput(f"PERMSTAT_MAX_N must be an integer, got {raw!r}") from exc


def check_size(n, limit=None):
    if n < 0:
        raise InvalidInput(f"size must be nonnegative, got {n}")
    limit = max_n() if limit is None else limit
    if n > limit:
        raise ResourceLimit(
            f"size {n} exceeds the limit {limit} (set PERMSTAT_MAX_N to raise it)"
        )


def iterate_permutations(n):
    """All permutations of 1..n in lexicographic order."""
    check_size(n)
    return map(Permutation, itertools.permutations(range(1, n + 1)))


def iterate_subexcedent(n):
    """All u with u_i in 0..n-i, lexicographic."""
    check_size(n)
    return map(
        SubexcedentFunction, itertools.product(*(range(n - i) for i in range(n)))
    )


def _decreasing_words(n, i, bound, prefix):
    # position i (1-based) takes 0 or a value below the previous nonzero one
    if i > n:
        yield tuple(prefix)
        return
    prefix.append(0)
    yield from _decreasing_words(n, i + 1, bound, prefix)
    prefix.pop()
    for v in range(1, min(n - i, bound - 1) + 1):
        prefix.append(v)
        yield from _decreasing_words(n, i + 1, v, prefix)
        prefix.pop()


def iterate_decreasing_sf(n):
    check_size(n)
    return map(SubexcedentFunction, _decreasing_words(n, 1, n + 1, []))


def iterate_dwsf(n):
    """Every decreasing function paired with every weight below its maximum."""
    return _dwsf(iterate_decreasing_sf(n))


def _dwsf(functions):
    for sf in functions:
        bound = dwsf_max_weight(sf)
        for weight in itertools.product(*(range(b + 1) for b in bound)):
            yield DecreasingWeightedSF(sf, weight)


def _dyck_words(n, ups, downs, prefix):
    if ups == downs == n:
        yield "".join(prefix)
        return
    if ups < n:
        prefix.append(UP)
        yield from _dyck_words(n, ups + 1, downs, prefix)
        prefix.pop()
    if downs < ups:
        prefix.append(DOWN)
        yield from _dyck_words(n, ups, downs + 1, prefix)
        prefix.pop()


def iterate_dyck_paths(n):
    check_size(n)
    return map(DyckPath, _dyck_words(n, 0, 0, []))


def iterate_wdp(n):
    return _wdp(iterate_dyck_paths(n))


def _wdp(paths):
    for path in paths:
        bound = [(h - 1) // 2 for h in path.meeting_heights()]
        for weight in itertools.product(*(range(b + 1) for b in bound)):
            yield WeightedDyckPath(path, weight)


def iterate_compositions(n):
    """Compositions of n ordered by their descent set read as a bitmask.

    Bit ``i-1`` is set iff ``i`` is a descent, so index ``m`` in the list is
    the composition with ``mask == m``.
    """
    if n < 1:
        raise InvalidInput(f"compositions need n >= 1, got {n}")
    check_size(n, max(max_n(), 16))
    return [Composition.from_mask(n, m) for m in range(1 << (n - 1))]


def catalan(n):
    """Catalan numbers by the convolution recurrence C_{m+1} = sum C_i C_{m-i}."""
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def count(iterable):
    return sum(1 for _ in iterable)

