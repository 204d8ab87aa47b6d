"""Shared hypothesis strategies for the property tests."""

import hypothesis.strategies as st

from bihermite import BiPoly, Coeff, GL2, WeylOp

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=6)

coeffs = st.builds(Coeff, small_fractions, small_fractions)

nonzero_coeffs = coeffs.filter(bool)

bipolys = st.dictionaries(
    keys=st.tuples(st.integers(0, 3), st.integers(0, 3)),
    values=coeffs,
    max_size=4,
).map(BiPoly)

weylops = st.dictionaries(
    keys=st.tuples(
        st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)
    ),
    values=coeffs,
    max_size=3,
).map(WeylOp)


def _gl2_or_none(entries):
    try:
        return GL2(*entries)
    except ValueError:
        return None


invertible_gl2 = (
    st.tuples(coeffs, coeffs, coeffs, coeffs).map(_gl2_or_none).filter(lambda g: g is not None)
)
