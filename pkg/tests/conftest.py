from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from spinforge.octo import Oct
from spinforge.vec6 import B1, B2, B3, SPIN4, Vec6

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

VARIANTS = [SPIN4, B1, B2, B3]

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
vec6s = st.lists(rationals, min_size=6, max_size=6).map(Vec6)
octs = st.lists(rationals, min_size=8, max_size=8).map(Oct)


@pytest.fixture(params=VARIANTS, ids=lambda v: v.value)
def variant(request):
    return request.param


def frac(*xs):
    return [Fraction(x) for x in xs]
