from __future__ import annotations

from fractions import Fraction

from hypothesis import settings, strategies as st

from bernstein_kit import Interval

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

F = Fraction

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=12)


@st.composite
def intervals(draw):
    a = draw(small_fractions)
    b = draw(small_fractions.filter(lambda v: v != a))
    return Interval(a, b)


@st.composite
def interval_and_point(draw):
    iv = draw(intervals())
    s = draw(st.fractions(min_value=0, max_value=1, max_denominator=16))
    return iv, iv.from_unit(s)
