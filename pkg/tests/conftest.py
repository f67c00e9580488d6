import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from conefourier import Cone
from conefourier.sampling import sample_cone

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=6)
nonzero_rationals = rationals.filter(lambda q: q != 0)
small_positive = st.fractions(min_value=Fraction(1, 4), max_value=6, max_denominator=4)


def vectors(dimension):
    return st.tuples(*([rationals] * dimension))


@st.composite
def random_cones(draw, dims=(2, 3), extras=(0, 1, 2)):
    """Generic pointed cones built from a drawn seed; shrinks poorly but
    guarantees validity, which matters more for exact identities."""
    d = draw(st.sampled_from(dims))
    n = d + draw(st.sampled_from(extras))
    seed = draw(st.integers(min_value=0, max_value=10**9))
    return sample_cone(random.Random(seed), d, n)


@pytest.fixture
def fan_cone():
    """First quadrant in 2D with a redundant middle ray."""
    return Cone((0, 0), ((1, 0), (1, 1), (0, 1)))


@pytest.fixture
def square_cone():
    """Cone over the unit diamond at height one; n=4, d=3, all simplex
    determinants equal 2."""
    return Cone((0, 0, 0), ((1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)))


@pytest.fixture
def unit_square_vertices():
    return [(0, 0), (1, 0), (1, 1), (0, 1)]


@pytest.fixture
def octahedron_vertices():
    return [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
