import random
from fractions import Fraction

import pytest
from hypothesis import given

from nagata import (
    NEG_INFINITY,
    Poly,
    RING2,
    RING3,
    T1,
    T2,
    X,
    Y,
    Z,
    expand_bivariate,
)
from _strategies import nonzero_poly2s, points3, poly3s

PHI = X * Z + Y ** 2
EXWW = T1 ** 2 - T2 ** 3 + T1 * T2 ** 2


class TestArithmetic:
    def test_additive_inverse(self):
        assert X + (-X) == 0

    def test_square_of_invariant_generator(self):
        # hand expansion, cross-checked by evaluation at 5 random points
        expected = X ** 2 * Z ** 2 + 2 * X * Y ** 2 * Z + Y ** 4
        product = PHI * PHI
        assert product == expected
        rng = random.Random(7)
        for _ in range(5):
            pt = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3))
            assert product.evaluate(*pt) == PHI.evaluate(*pt) ** 2

    def test_pow_zero_is_one(self):
        for p in (PHI, Poly.zero(RING3), -3 * X * Y):
            assert p ** 0 == 1

    def test_pow_matches_repeated_multiplication(self):
        assert PHI ** 3 == PHI * PHI * PHI

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            PHI ** -1

    def test_mixed_rings_rejected(self):
        with pytest.raises(ValueError, match="mixed polynomial rings"):
            X + T1

    def test_float_coefficients_rejected(self):
        with pytest.raises(TypeError):
            Poly(RING3, {(1, 0, 0): 0.5})
        with pytest.raises(TypeError):
            X.evaluate(0.5, 0, 0)

    @given(poly3s, poly3s, poly3s)
    def test_ring_axioms(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r


class TestCalculus:
    def test_partial_examples(self):
        assert PHI.partial("y") == 2 * Y
        assert Poly.constant(RING3, 5).partial("x") == 0
        assert (X ** 2 * Z).partial("x") == 2 * X * Z

    def test_partial_unknown_variable(self):
        with pytest.raises(ValueError):
            PHI.partial("t1")

    @given(poly3s)
    def test_partials_commute(self, p):
        assert p.partial("x").partial("y") == p.partial("y").partial("x")

    @given(poly3s, poly3s)
    def test_leibniz_rule(self, p, q):
        lhs = (p * q).partial("x")
        rhs = p.partial("x") * q + p * q.partial("x")
        assert lhs == rhs


class TestSubstituteEvaluate:
    def test_swap_symmetry(self):
        assert (X + Y).substitute(Y, X, Z) == X + Y

    def test_substitute_to_zero(self):
        zero = Poly.zero(RING3)
        assert X.substitute(zero, zero, zero) == 0

    def test_inverse_substitution_fixes_invariant(self):
        # (x + 2y*phi - z*phi^2)z + (y - z*phi)^2 = xz + y^2 for any phi
        for phi in (PHI, X, Y ** 3 - Z, expand_bivariate(EXWW)):
            image = PHI.substitute(
                X + 2 * Y * phi - Z * phi ** 2, Y - Z * phi, Z
            )
            assert image == PHI

    def test_evaluate_examples(self):
        assert PHI.evaluate(0, 0, 1) == 0
        assert Z.evaluate(Fraction(1, 2), 7, Fraction(-3, 4)) == Fraction(-3, 4)

    @given(poly3s, poly3s)
    def test_substitute_is_ring_homomorphism(self, p, q):
        values = (Y + Z, X * Z, X - Y)
        assert (p * q).substitute(*values) == p.substitute(*values) * q.substitute(*values)
        assert (p + q).substitute(*values) == p.substitute(*values) + q.substitute(*values)

    @given(poly3s, points3)
    def test_evaluate_commutes_with_substitute(self, p, pt):
        values = (X + 2 * Y, Y * Z, Z ** 2 - X)
        direct = p.substitute(*values).evaluate(*pt)
        via_images = p.evaluate(*(v.evaluate(*pt) for v in values))
        assert direct == via_images


class TestDegreesAndForms:
    def test_weighted_degree_examples(self):
        assert EXWW.weighted_degree((2, 1)) == 4
        assert Poly.zero(RING2).weighted_degree((2, 1)) is NEG_INFINITY
        assert PHI.weighted_degree((1, 1, 1)) == 2

    def test_neg_infinity_fails_loudly_in_comparisons(self):
        with pytest.raises(TypeError):
            NEG_INFINITY < 3  # noqa: B015 - the comparison itself is the test

    def test_bad_weight_vectors_rejected(self):
        with pytest.raises(ValueError):
            PHI.weighted_degree((2, 1))
        with pytest.raises(ValueError):
            EXWW.weighted_degree((0, 1))

    def test_weighted_leading_form_examples(self):
        assert EXWW.weighted_leading_form((2, 1)) == T1 ** 2 + T1 * T2 ** 2
        assert EXWW.weighted_leading_form((1, 1)) == -T2 ** 3 + T1 * T2 ** 2
        homogeneous = X * Z + Y ** 2
        assert homogeneous.weighted_leading_form((1, 1, 1)) == homogeneous

    def test_leading_form_of_zero_rejected(self):
        with pytest.raises(ValueError, match="zero polynomial has no leading form"):
            Poly.zero(RING2).weighted_leading_form((2, 1))

    def test_homogeneous_components_examples(self):
        assert (PHI + Z).homogeneous_components() == [(1, Z), (2, PHI)]
        assert Poly.zero(RING3).homogeneous_components() == []
        assert (Y ** 4).homogeneous_components() == [(4, Y ** 4)]

    @given(poly3s)
    def test_homogeneous_components_partition(self, p):
        comps = p.homogeneous_components()
        total = Poly.zero(RING3)
        seen = set()
        for degree, comp in comps:
            assert not comp.is_zero()
            assert all(sum(e) == degree for e, _ in comp.terms())
            assert not (comp.support() & seen)
            seen |= comp.support()
            total = total + comp
        assert total == p
        assert seen == p.support()


class TestExpandBivariate:
    def test_generator_and_powers(self):
        assert expand_bivariate(T1) == PHI
        for k in range(4):
            assert expand_bivariate(T2 ** k) == Z ** k

    def test_expansion_of_mixed_polynomial(self):
        expected = PHI ** 2 + PHI * Z ** 2 - Z ** 3
        assert expand_bivariate(EXWW) == expected

    def test_wrong_ring_rejected(self):
        with pytest.raises(ValueError):
            expand_bivariate(X)

    @given(nonzero_poly2s)
    def test_degree_equals_weighted_degree(self, p):
        # total degree of the expansion equals the (2,1)-weighted degree of p
        phi = expand_bivariate(p)
        assert phi.total_degree() == p.weighted_degree((2, 1))

    @given(nonzero_poly2s)
    def test_leading_form_commutes_with_expansion(self, p):
        phi = expand_bivariate(p)
        lhs = phi.leading_form()
        rhs = expand_bivariate(p.weighted_leading_form((2, 1)))
        assert lhs == rhs
