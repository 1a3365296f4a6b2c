"""Bijections between permutations, weighted Dyck paths, and subexcedent functions.

The chain, read from subexcedent functions to permutations::

    SF --phi1--> DWSF --phi2--> WDP --psi--> WDP --psi_fv_inv--> P

and the composite maps ``big_phi`` (the whole chain) and ``big_psi``, a
bijection on permutations through the type-0 variant of the Francon-Viennot
map.  Laguerre histories enter through ``laguerre_to_wdp``.
"""

from .core import (
    DOWN,
    HORIZ_DASHED,
    HORIZ_SOLID,
    LAGUERRE,
    LARGE,
    UP,
    DecreasingWeightedSF,
    DyckPath,
    LaguerreHistory,
    Permutation,
    SubexcedentFunction,
    WeightedDyckPath,
    perm_tot_vector,
)
from .errors import InvalidInput, InvariantViolation

_PAIR_OF_STEP = {
    UP: UP + UP,
    HORIZ_SOLID: UP + DOWN,
    HORIZ_DASHED: DOWN + UP,
    DOWN: DOWN + DOWN,
}
_STEP_OF_PAIR = {v: k for k, v in _PAIR_OF_STEP.items()}


# ---------------------------------------------------------------------------
# Laguerre histories


def laguerre_to_wdp(hist):
    """Encode each Motzkin step as a pair of Dyck steps.

    A large history of size m gains an up step in front, a down step at the
    end and a trailing zero weight, giving a path of size m + 1.
    """
    steps = "".join(_PAIR_OF_STEP[s] for s in hist.steps)
    weight = hist.weight
    if hist.kind == LARGE:
        steps = UP + steps + DOWN
        weight = weight + (0,)
    return WeightedDyckPath(DyckPath(steps), weight)


def wdp_to_laguerre(x, kind=LAGUERRE):
    steps, weight = x.steps, x.weight
    if kind == LARGE:
        if x.n < 1:
            raise InvalidInput("a large Laguerre history needs a path of size >= 1")
        if weight[-1] != 0:
            raise InvalidInput(f"last weight must be 0, got {weight[-1]}")
        steps, weight = steps[1:-1], weight[:-1]
    elif kind != LAGUERRE:
        raise InvalidInput(f"unknown Laguerre kind {kind!r}")
    motzkin = "".join(
        _STEP_OF_PAIR[steps[i : i + 2]] for i in range(0, len(steps), 2)
    )
    return LaguerreHistory(motzkin, weight, kind)


# ---------------------------------------------------------------------------
# Francon-Viennot


def _fv_steps(word, values, left_pad, right_pad):
    """Pairs of steps for the given values, with sentinels around ``word``."""
    padded = (left_pad,) + word + (right_pad,)
    pos = [0] * (len(word) + 1)
    for j, v in enumerate(word, 1):
        pos[v] = j
    out = []
    for k in values:
        j = pos[k]
        out.append(UP if padded[j] < padded[j + 1] else DOWN)
        out.append(DOWN if padded[j - 1] < padded[j] else UP)
    return "".join(out)


def psi_fv(perm):
    """Francon-Viennot map with sentinels 0 on the left and n+1 on the right.

    For the value k at position j, step 2k-1 rises iff k is smaller than its
    right neighbour and step 2k falls iff k is larger than its left
    neighbour; ``w_k`` counts the 31-2 patterns in which k plays the 2.
    """
    n = perm.n
    steps = _fv_steps(perm.word, range(1, n + 1), 0, n + 1)
    return WeightedDyckPath(DyckPath(steps), perm_tot_vector(perm))


def _insert_values(pairs, weight):
    """Place 1, 2, ... into a word of placeholders (``None``)."""
    word = [None]
    for k, (pair, w) in enumerate(zip(pairs, weight), 1):
        slot = -1
        seen = 0
        for idx, c in enumerate(word):
            if c is None:
                if seen == w:
                    slot = idx
                    break
                seen += 1
        if slot < 0:
            raise InvariantViolation(
                f"no placeholder number {w + 1} when inserting {k}"
            )
        if pair == UP + UP:
            word[slot : slot + 1] = [None, k, None]
        elif pair == UP + DOWN:
            word[slot : slot + 1] = [k, None]
        elif pair == DOWN + UP:
            word[slot : slot + 1] = [None, k]
        else:
            word[slot] = k
    return word


def _pairs(steps):
    return [steps[i : i + 2] for i in range(0, len(steps), 2)]


def psi_fv_inv(x):
    word = _insert_values(_pairs(x.steps), x.weight)
    holes = [i for i, c in enumerate(word) if c is None]
    if holes != [len(word) - 1]:
        raise InvariantViolation(
            f"placeholders left at {[i + 1 for i in holes]}, expected only the last"
        )
    return Permutation(tuple(word[:-1]))


def psi_fv0(perm):
    """Francon-Viennot variant with sentinels 0 on both sides.

    Only values 1..n-1 produce step pairs; the path is framed by an up step
    and a down step and the weight gets a trailing 0.
    """
    n = perm.n
    if n < 1:
        raise InvalidInput("psi_fv0 needs a permutation of size >= 1")
    inner = _fv_steps(perm.word, range(1, n), 0, 0)
    weight = perm_tot_vector(perm)[: n - 1] + (0,)
    return WeightedDyckPath(DyckPath(UP + inner + DOWN), weight)


def psi_fv0_inv(x):
    n = x.n
    if n < 1:
        raise InvalidInput("psi_fv0_inv needs a path of size >= 1")
    if x.weight[-1] != 0:
        raise InvalidInput(f"last weight must be 0, got {x.weight[-1]}")
    word = _insert_values(_pairs(x.steps[1:-1]), x.weight[:-1])
    holes = [i for i, c in enumerate(word) if c is None]
    if len(holes) != 1:
        raise InvariantViolation(f"{len(holes)} placeholders left, expected one")
    word[holes[0]] = n
    return Permutation(tuple(word))


# ---------------------------------------------------------------------------
# The involution on Dyck paths


def psi(x):
    """Exchange steps 2i and 2i+1 for every 1 <= i <= n-1; weight is carried.

    This swaps every interior pair ``UD``/``DU`` and leaves ``UU``/``DD``
    alone, so the heights between steps 2i-1 and 2i never move.
    """
    s = list(x.steps)
    for i in range(1, len(s) - 1, 2):
        s[i], s[i + 1] = s[i + 1], s[i]
    return WeightedDyckPath(DyckPath("".join(s)), x.weight)


# ---------------------------------------------------------------------------
# Subexcedent functions to decreasing weighted ones


def _phi1_pivot(u):
    """Return (k, i) for the next exchange, or None when ``u`` is sorted."""
    best = None
    low = None  # smallest nonzero value seen so far
    for x in u:
        if low is not None and low <= x and (best is None or x > best):
            best = x
        if x and (low is None or x < low):
            low = x
    if best is None:
        return None
    k = len(u) - 1 - u[::-1].index(best)
    i = None
    for j in range(k):
        if u[j] <= best and (i is None or u[j] >= u[i]):
            i = j
    return k, i


def phi1(sf):
    """Sort ``sf`` by repeatedly moving the pivot left, recording a weight.

    The pivot is the largest value with a nonzero value at most itself
    somewhere to its left; it is exchanged with the rightmost occurrence of
    the largest such value, which is decremented on the way.
    """
    u = list(sf.entries)
    w = [0] * len(u)
    while True:
        step = _phi1_pivot(u)
        if step is None:
            break
        k, i = step
        u[i] -= 1
        u[i], u[k] = u[k], u[i]
        w[k] += 1
    return DecreasingWeightedSF(SubexcedentFunction(tuple(u)), tuple(w))


def phi1_inv(x):
    u = list(x.sf.entries)
    w = list(x.weight)
    n = len(u)
    while any(w):
        p = None
        for cand in range(n - 2, -1, -1):
            if any(w[q] > 0 and u[q] < u[cand] for q in range(cand + 1, n)):
                p = cand
                break
        if p is None:
            raise InvariantViolation(
                f"weight {tuple(w)} on {tuple(u)} cannot be undone"
            )
        q = next(q for q in range(p + 1, n) if w[q] > 0)
        w[q] -= 1
        u[p], u[q] = u[q] + 1, u[p]
    return SubexcedentFunction(tuple(u))


# ---------------------------------------------------------------------------
# Decreasing weighted subexcedent functions to weighted Dyck paths


def phi2(x):
    """Step 2i falls iff n-i is a value of u; step 2i+1 falls iff u_i = 0."""
    u = x.sf.entries
    n = len(u)
    if n == 0:
        return WeightedDyckPath(DyckPath(""), ())
    values = set(u)
    steps = [UP]
    for i in range(1, n):
        steps.append(DOWN if (n - i) in values else UP)
        steps.append(DOWN if u[i - 1] == 0 else UP)
    steps.append(DOWN)
    return WeightedDyckPath(DyckPath("".join(steps)), x.weight)


def phi2_inv(x):
    n = x.n
    s = x.steps
    values = [n - i for i in range(1, n) if s[2 * i - 1] == DOWN]
    zeros = {i for i in range(1, n) if s[2 * i] == DOWN} | {n}
    slots = [i for i in range(1, n + 1) if i not in zeros]
    if len(values) != len(slots):
        raise InvariantViolation(
            f"{len(values)} values for {len(slots)} nonzero positions"
        )
    u = [0] * n
    for i, v in zip(slots, values):  # values are already decreasing
        u[i - 1] = v
    return DecreasingWeightedSF(SubexcedentFunction(tuple(u)), x.weight)


# ---------------------------------------------------------------------------
# Composites


def big_phi(sf):
    return psi_fv_inv(psi(phi2(phi1(sf))))


def big_phi_inv(perm):
    return phi1_inv(phi2_inv(psi(psi_fv(perm))))


def big_psi(perm):
    return psi_fv0_inv(psi(psi_fv(perm)))


def big_psi_inv(perm):
    return psi_fv_inv(psi(psi_fv0(perm)))


# ---------------------------------------------------------------------------
# Nondecreasing parking functions


def dsf_to_parking(sf):
    if not sf.is_decreasing():
        raise InvalidInput(f"subexcedent function {sf} is not decreasing")
    out = []
    last = 0
    for x in reversed(sf.entries):
        if x:
            last = x
        out.append(last + 1)
    return tuple(out)


def parking_to_dsf(pf):
    """Inverse of ``dsf_to_parking`` on nondecreasing parking functions."""
    pf = tuple(pf)
    for i, x in enumerate(pf, 1):
        if not 1 <= x <= i or (i > 1 and x < pf[i - 2]):
            raise InvalidInput(
                f"not a nondecreasing parking function: entry {x} at position {i}"
            )
    v = [x - 1 for x in pf]
    mirrored = [
        0 if x == 0 or (i and x == v[i - 1]) else x for i, x in enumerate(v)
    ]
    sf = SubexcedentFunction(tuple(reversed(mirrored)))
    if not sf.is_decreasing():
        raise InvariantViolation(f"{pf} did not decode to a decreasing function")
    return sf
