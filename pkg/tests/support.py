"""Shared hypothesis strategies for randomised algebra tests."""

from hypothesis import strategies as st

from knotpoly import BiPoly, LaurentPoly

coefficients = st.integers(min_value=-99, max_value=99)
half_numerators = st.integers(min_value=-20, max_value=20)


def laurent_polys(max_terms=12, nonzero=False):
    base = st.lists(
        st.tuples(half_numerators, coefficients),
        min_size=1 if nonzero else 0,
        max_size=max_terms,
    ).map(LaurentPoly)
    if nonzero:
        return base.filter(lambda p: not p.is_zero)
    return base


def laurent_polys_integral(max_degree=5, max_terms=6):
    """Ordinary polynomials: nonnegative integer exponents only."""
    nums = st.integers(min_value=0, max_value=max_degree).map(lambda k: 2 * k)
    return st.lists(
        st.tuples(nums, coefficients), min_size=0, max_size=max_terms
    ).map(LaurentPoly)


def bi_polys(max_terms=10, nonzero=False):
    keys = st.tuples(
        st.integers(min_value=-10, max_value=10),
        st.integers(min_value=-10, max_value=10),
    )
    base = st.lists(
        st.tuples(keys, coefficients),
        min_size=1 if nonzero else 0,
        max_size=max_terms,
    ).map(BiPoly)
    if nonzero:
        return base.filter(lambda p: not p.is_zero)
    return base


def bi_polys_integral(max_degree=3, max_terms=6, max_coeff=9):
    """Bivariate polynomials with nonnegative integer exponents."""
    nums = st.integers(min_value=0, max_value=max_degree).map(lambda k: 2 * k)
    keys = st.tuples(nums, nums)
    small = st.integers(min_value=-max_coeff, max_value=max_coeff)
    return st.lists(st.tuples(keys, small), min_size=0, max_size=max_terms).map(BiPoly)
