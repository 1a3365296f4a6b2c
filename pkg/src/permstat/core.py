"""Combinatorial objects and their statistics.

Every object is an immutable value validated on construction.  Sequences
are stored 0-based internally; positions and values exposed by the public
functions (descent sets, zero positions, step numbers in messages) are
1-based, as in the usual combinatorial notation.

Path steps are single characters: ``U`` (up) and ``D`` (down) for Dyck
paths, plus ``H`` (solid horizontal) and ``h`` (dashed horizontal) for
Laguerre histories.
"""

from dataclasses import dataclass

from .errors import InvalidInput

UP = "U"
DOWN = "D"
HORIZ_SOLID = "H"
HORIZ_DASHED = "h"

LAGUERRE = "laguerre"
LARGE = "large"

STANDARD = "standard"
TYPE0 = "type0"


def _int_tuple(values, what):
    try:
        out = tuple(int(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise InvalidInput(f"{what} must be a sequence of integers") from exc
    for v, orig in zip(out, values):
        if v != orig:
            raise InvalidInput(f"{what} must be a sequence of integers")
    return out


# ---------------------------------------------------------------------------
# Compositions


@dataclass(frozen=True, slots=True)
class Composition:
    """A sequence of positive integers; ``n`` is their sum."""

    parts: tuple

    def __post_init__(self):
        parts = _int_tuple(self.parts, "composition parts")
        if any(p < 1 for p in parts):
            raise InvalidInput(f"composition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self):
        return sum(self.parts)

    @property
    def descents(self):
        """Partial sums i1, i1+i2, ..., excluding the total."""
        out = []
        acc = 0
        for p in self.parts[:-1]:
            acc += p
            out.append(acc)
        return frozenset(out)

    @property
    def mask(self):
        """Descent set as an integer: bit ``i-1`` is set iff ``i`` is a descent.

        This is the canonical row/column index used by transition matrices.
        """
        m = 0
        for d in self.descents:
            m |= 1 << (d - 1)
        return m

    @classmethod
    def from_mask(cls, n, mask):
        if n < 1 or mask < 0 or mask >> (n - 1):
            raise InvalidInput(f"mask {mask} is not a descent set of {n}")
        return composition_from_descents(
            n, [i + 1 for i in range(n - 1) if mask >> i & 1]
        )

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def composition_from_descents(n, descents):
    """Return the composition of ``n`` whose descent set is ``descents``."""
    if n < 1:
        raise InvalidInput(f"compositions need n >= 1, got {n}")
    cuts = sorted(set(descents))
    for d in cuts:
        if not 1 <= d <= n - 1:
            raise InvalidInput(f"descent {d} outside 1..{n - 1}")
    parts = []
    prev = 0
    for d in cuts + [n]:
        parts.append(d - prev)
        prev = d
    return Composition(tuple(parts))


def comp_maj(comp):
    """Major index: the sum of the descent set."""
    return sum(comp.descents)


def comp_mirror(comp):
    return Composition(comp.parts[::-1])


# ---------------------------------------------------------------------------
# Permutations


@dataclass(frozen=True, slots=True)
class Permutation:
    """One-line notation ``word[0] word[1] ...`` over the values 1..n."""

    word: tuple

    def __post_init__(self):
        word = _int_tuple(self.word, "permutation")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidInput(f"not a permutation of 1..{len(word)}: {word}")
        object.__setattr__(self, "word", word)

    @property
    def n(self):
        return len(self.word)

    def positions(self):
        """``pos[v]`` is the 1-based position of value ``v`` (``pos[0]`` unused)."""
        pos = [0] * (len(self.word) + 1)
        for j, v in enumerate(self.word, 1):
            pos[v] = j
        return pos

    def __str__(self):
        return " ".join(map(str, self.word))


def perm_recoils(perm):
    """Values ``i`` such that ``i+1`` stands to the left of ``i``."""
    pos = perm.positions()
    return frozenset(i for i in range(1, perm.n) if pos[i + 1] < pos[i])


def perm_recoil_composition(perm):
    return composition_from_descents(perm.n, perm_recoils(perm))


def perm_gdes(perm):
    """Genocchi descents: values immediately followed by a smaller value."""
    w = perm.word
    return frozenset(w[j] for j in range(len(w) - 1) if w[j] > w[j + 1])


def perm_gc(perm):
    return composition_from_descents(perm.n, [d - 1 for d in perm_gdes(perm)])


def perm_gdes0(perm):
    """Genocchi descents with a trailing 0 appended to the word.

    Contains values (not positions), so the last value and ``n`` are always
    members.
    """
    w = perm.word + (0,)
    return frozenset(w[j] for j in range(len(w) - 1) if w[j] > w[j + 1])


def perm_gc0(perm):
    return composition_from_descents(perm.n, perm_gdes0(perm) - {perm.n})


def perm_tot_vector(perm):
    """``tot_k`` for k = 1..n, as a tuple indexed from 0.

    A 31-2 pattern is a pair of positions (i, j) with j > i+1 and
    ``w[i+1] < w[j] < w[i]``; ``tot_k`` counts those whose middle value
    ``w[j]`` is ``k``.
    """
    w = perm.word
    n = len(w)
    tot = [0] * n
    for i in range(n - 1):
        hi, lo = w[i], w[i + 1]
        if hi <= lo + 1:
            continue
        for j in range(i + 2, n):
            if lo < w[j] < hi:
                tot[w[j] - 1] += 1
    return tuple(tot)


def perm_tot(perm):
    return sum(perm_tot_vector(perm))


def perm_tot_k(perm, k):
    if not 1 <= k <= perm.n:
        raise InvalidInput(f"value {k} outside 1..{perm.n}")
    return perm_tot_vector(perm)[k - 1]


def perm_ltr_maxima(perm):
    out = []
    best = 0
    for v in perm.word:
        if v > best:
            out.append(v)
            best = v
    return frozenset(out)


# ---------------------------------------------------------------------------
# Subexcedent functions


@dataclass(frozen=True, slots=True)
class SubexcedentFunction:
    """A word ``u`` with ``0 <= u_i <= n - i`` (1-based ``i``)."""

    entries: tuple

    def __post_init__(self):
        u = _int_tuple(self.entries, "subexcedent function")
        n = len(u)
        for i, x in enumerate(u, 1):
            if not 0 <= x <= n - i:
                raise InvalidInput(
                    f"entry {x} at position {i} outside 0..{n - i}"
                )
        object.__setattr__(self, "entries", u)

    @property
    def n(self):
        return len(self.entries)

    def is_decreasing(self):
        nz = [x for x in self.entries if x]
        return all(a > b for a, b in zip(nz, nz[1:]))

    def __str__(self):
        return " ".join(map(str, self.entries))


def sf_lc_set(sf):
    """The set built by the right-to-left scan underlying the LC statistic."""
    n = sf.n
    chosen = set()
    free = list(range(1, n + 1))
    for k in reversed(sf.entries):
        r = k - len(chosen)
        if r > 0:
            chosen.add(free.pop(r - 1))
    return frozenset(chosen)


def sf_lc(sf):
    return comp_mirror(composition_from_descents(sf.n, sf_lc_set(sf)))


def sf_descents(sf):
    u = sf.entries
    return frozenset(i for i in range(1, len(u)) if u[i - 1] > u[i])


def sf_dc(sf):
    return composition_from_descents(sf.n, sf_descents(sf))


def sf_inv(sf):
    return sum(sf.entries)


def sf_zero_positions(sf):
    return frozenset(i for i, x in enumerate(sf.entries, 1) if x == 0)


def sf_alpha(sf):
    """``inv(u) - maj(mirror(LC(u)))``, the exponent in the SF transition matrix."""
    return sf_inv(sf) - comp_maj(comp_mirror(sf_lc(sf)))


# ---------------------------------------------------------------------------
# Paths


def path_heights(steps):
    """Heights before each step and after the last: ``len(steps) + 1`` values."""
    h = [0]
    for s in steps:
        h.append(h[-1] + (1 if s == UP else -1 if s == DOWN else 0))
    return h


@dataclass(frozen=True, slots=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        steps = "".join(self.steps)
        if len(steps) % 2:
            raise InvalidInput(f"Dyck path of odd length {len(steps)}")
        height = 0
        for i, s in enumerate(steps, 1):
            if s == UP:
                height += 1
            elif s == DOWN:
                height -= 1
            else:
                raise InvalidInput(f"step {i} is {s!r}, expected U or D")
            if height < 0:
                raise InvalidInput(f"path goes below the axis at step {i}")
        if height:
            raise InvalidInput(f"path ends at height {height}, not 0")
        object.__setattr__(self, "steps", steps)

    @property
    def n(self):
        return len(self.steps) // 2

    def meeting_heights(self):
        """Height between steps ``2i-1`` and ``2i`` for i = 1..n (always odd)."""
        h = path_heights(self.steps)
        return tuple(h[2 * i + 1] for i in range(self.n))

    def __str__(self):
        return self.steps


def max_weight_from_heights(heights):
    out = []
    for i, h in enumerate(heights, 1):
        if h % 2 != 1:
            raise InvalidInput(f"meeting height {h} at index {i} is not odd")
        out.append((h - 1) // 2)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class WeightedDyckPath:
    """A Dyck path of size n with weights ``w_i <= (h_i - 1) / 2``."""

    path: DyckPath
    weight: tuple

    def __post_init__(self):
        path = self.path
        if not isinstance(path, DyckPath):
            path = DyckPath(path)
        weight = _int_tuple(self.weight, "weight")
        if len(weight) != path.n:
            raise InvalidInput(
                f"weight has {len(weight)} entries, path has size {path.n}"
            )
        bound = max_weight_from_heights(path.meeting_heights())
        for i, (w, b) in enumerate(zip(weight, bound), 1):
            if not 0 <= w <= b:
                raise InvalidInput(f"weight {w} at index {i} outside 0..{b}")
        object.__setattr__(self, "path", path)
        object.__setattr__(self, "weight", weight)

    @property
    def n(self):
        return self.path.n

    @property
    def steps(self):
        return self.path.steps

    def max_weight(self):
        return max_weight_from_heights(self.path.meeting_heights())

    def __str__(self):
        return f"{self.path.steps};{' '.join(map(str, self.weight))}"


def wdp_tw(x):
    return sum(x.weight)


def wdp_descents(x, convention=STANDARD):
    """Descent set: ``w_i > w_{i+1}``, or a tie with an up step at ``2i``
    (``2i+1`` under the type-0 convention)."""
    offset = _convention_offset(convention)
    w, s = x.weight, x.steps
    out = set()
    for i in range(1, x.n):
        a, b = w[i - 1], w[i]
        # step number 2i (+1 for type0) is at 0-based index 2i-1 (+1)
        if a > b or (a == b and s[2 * i - 1 + offset] == UP):
            out.add(i)
    return frozenset(out)


def wdp_dc(x, convention=STANDARD):
    return composition_from_descents(x.n, wdp_descents(x, convention))


def wdp_gdes(x, convention=STANDARD):
    s = x.steps
    if _convention_offset(convention):
        return frozenset(i for i in range(1, x.n) if s[2 * i - 1] == DOWN)
    return frozenset(i for i in range(2, x.n + 1) if s[2 * i - 2] == DOWN)


def wdp_gc(x, convention=STANDARD):
    gdes = wdp_gdes(x, convention)
    if _convention_offset(convention):
        return composition_from_descents(x.n, gdes)
    return composition_from_descents(x.n, [d - 1 for d in gdes])


def _convention_offset(convention):
    if convention == STANDARD:
        return 0
    if convention == TYPE0:
        return 1
    raise InvalidInput(f"unknown convention {convention!r}")


@dataclass(frozen=True, slots=True)
class LaguerreHistory:
    """A weighted Motzkin path with solid and dashed horizontal steps.

    For ``kind="laguerre"`` the weight at a down or dashed step is bounded by
    the height minus one, otherwise by the height.  For ``kind="large"``
    every weight is bounded by the height.  Heights are taken before the step.
    """

    steps: str
    weight: tuple
    kind: str = LAGUERRE

    def __post_init__(self):
        if self.kind not in (LAGUERRE, LARGE):
            raise InvalidInput(f"unknown Laguerre kind {self.kind!r}")
        steps = "".join(self.steps)
        weight = _int_tuple(self.weight, "weight")
        if len(weight) != len(steps):
            raise InvalidInput(
                f"weight has {len(weight)} entries, path has {len(steps)} steps"
            )
        height = 0
        for i, (s, w) in enumerate(zip(steps, weight), 1):
            if s not in (UP, DOWN, HORIZ_SOLID, HORIZ_DASHED):
                raise InvalidInput(f"step {i} is {s!r}, expected one of UDHh")
            bound = height
            if self.kind == LAGUERRE and s in (DOWN, HORIZ_DASHED):
                bound -= 1
            if not 0 <= w <= bound:
                raise InvalidInput(f"weight {w} at step {i} outside 0..{bound}")
            if s == UP:
                height += 1
            elif s == DOWN:
                height -= 1
                if height < 0:
                    raise InvalidInput(f"path goes below the axis at step {i}")
        if height:
            raise InvalidInput(f"path ends at height {height}, not 0")
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "weight", weight)

    @property
    def n(self):
        return len(self.steps)

    def __str__(self):
        return f"{self.steps};{' '.join(map(str, self.weight))};{self.kind}"


# ---------------------------------------------------------------------------
# Decreasing weighted subexcedent functions


def dwsf_max_weight(sf):
    """Largest admissible weight for a decreasing subexcedent function.

    ``W_k`` counts positions ``i < k`` holding a positive value at most
    ``n - k``, i.e. the positive values to the left of ``k`` that could sit
    at position ``k``.
    """
    if not sf.is_decreasing():
        raise InvalidInput(f"subexcedent function {sf} is not decreasing")
    u = sf.entries
    n = len(u)
    return tuple(
        sum(1 for i in range(k - 1) if 0 < u[i] <= n - k) for k in range(1, n + 1)
    )


@dataclass(frozen=True, slots=True)
class DecreasingWeightedSF:
    sf: SubexcedentFunction
    weight: tuple

    def __post_init__(self):
        sf = self.sf
        if not isinstance(sf, SubexcedentFunction):
            sf = SubexcedentFunction(sf)
        weight = _int_tuple(self.weight, "weight")
        if len(weight) != sf.n:
            raise InvalidInput(
                f"weight has {len(weight)} entries, function has size {sf.n}"
            )
        bound = dwsf_max_weight(sf)
        for k, (w, b) in enumerate(zip(weight, bound), 1):
            if not 0 <= w <= b:
                raise InvalidInput(f"weight {w} at position {k} outside 0..{b}")
        object.__setattr__(self, "sf", sf)
        object.__setattr__(self, "weight", weight)

    @property
    def n(self):
        return self.sf.n

    def __str__(self):
        return f"{self.sf};{' '.join(map(str, self.weight))}"


@dataclass(frozen=True)
class DWSFStats:
    inv: int
    tw: int
    dc: Composition
    lc: Composition


def dwsf_stats(x):
    u, w = x.sf.entries, x.weight
    des = [
        i
        for i in range(1, x.n)
        if w[i - 1] > w[i] or (w[i - 1] == w[i] and u[i - 1] > u[i])
    ]
    return DWSFStats(
        inv=sum(u) + sum(w),
        tw=sum(w),
        dc=composition_from_descents(x.n, des),
        lc=sf_lc(x.sf),
    )
