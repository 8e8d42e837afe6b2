"""Shared hypothesis strategies for small exact polynomials."""

import hypothesis.strategies as st

from nagata import Poly, RING2, RING3

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4)
nonzero_rationals = rationals.filter(bool)


def polys(ring, max_exp=3, max_terms=4):
    nvars = len(ring)
    exponents = st.tuples(*([st.integers(0, max_exp)] * nvars))
    return st.lists(
        st.tuples(exponents, nonzero_rationals), max_size=max_terms
    ).map(lambda terms: Poly(ring, terms))


poly3s = polys(RING3)
poly2s = polys(RING2)
nonzero_poly2s = poly2s.filter(lambda p: not p.is_zero())
nonzero_poly3s = poly3s.filter(lambda p: not p.is_zero())
points3 = st.tuples(rationals, rationals, rationals)
