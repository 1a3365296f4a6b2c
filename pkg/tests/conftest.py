import pytest
from hypothesis import strategies as st

from permstat.core import (
    DyckPath,
    Permutation,
    SubexcedentFunction,
    WeightedDyckPath,
)

TAU = Permutation((5, 2, 8, 7, 1, 3, 6, 4, 9))
TAU_PSI = Permutation((5, 2, 8, 9, 7, 1, 3, 6, 4))
U_EXAMPLE = SubexcedentFunction((3, 1, 5, 5, 0, 3, 2, 0, 0))
FIG_WEIGHT = (0, 0, 2, 2, 0, 1, 0, 0, 0)
FIG_PATH = "UUUUUDUUDDDDDUDDUD"
FIG_PSI_PATH = "UUUUUUDDUDDDDDUUDD"


@pytest.fixture
def fig_wdp():
    return WeightedDyckPath(DyckPath(FIG_PATH), FIG_WEIGHT)


@pytest.fixture
def fig_psi_wdp():
    return WeightedDyckPath(DyckPath(FIG_PSI_PATH), FIG_WEIGHT)


@st.composite
def permutations(draw, min_size=1, max_size=12):
    n = draw(st.integers(min_size, max_size))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def subexcedent_functions(draw, min_size=1, max_size=12):
    n = draw(st.integers(min_size, max_size))
    return SubexcedentFunction(
        tuple(draw(st.integers(0, n - i)) for i in range(1, n + 1))
    )
