"""Lojasiewicz exponents at infinity for Nagata-type automorphisms.

For a polynomial automorphism F the exponent equals 1/deg(F^-1).  Here
the inverse is explicit, so the exponent is computed from the measured
degree of the constructed inverse and then cross-checked against the
closed form 2*deg(phi) + 1 (1 for constant phi).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .maps import inverse_nagata
from .poly import Poly, RING2, expand_bivariate


@dataclass(frozen=True)
class LojReport:
    phi_degree: int
    inverse_degree: int
    exponent: Fraction


@dataclass(frozen=True)
class DeformationReport:
    base: LojReport
    deformed: LojReport

    @property
    def ordering(self) -> str:
        return "=" if self.deformed.exponent == self.base.exponent else "<"

    @property
    def monotone(self) -> bool:
        return self.deformed.exponent <= self.base.exponent


def loj_exponent(p: Poly) -> LojReport:
    """Exponent 1/deg(inverse) of the automorphism built from
    phi = p(x*z + y^2, z), with the inverse degree measured, not assumed."""
    if p.vars != RING2:
        raise ValueError("loj_exponent expects a bivariate representative in t1, t2")
    phi = expand_bivariate(p)
    inverse = inverse_nagata(p)
    inverse_degree = max(component.total_degree() for component in inverse)
    expected = 1 if p.is_constant() else 2 * phi.total_degree() + 1
    if inverse_degree != expected:
        raise RuntimeError("inverse degree formula violated; arithmetic bug")
    phi_degree = 0 if phi.is_zero() else phi.total_degree()
    return LojReport(
        phi_degree=phi_degree,
        inverse_degree=inverse_degree,
        exponent=Fraction(1, inverse_degree),
    )


def deformation_compare(p: Poly, p_s: Poly) -> DeformationReport:
    """Exponents of a polynomial and of a support-extending deformation.

    Requires supp(p) to be contained in supp(p_s); the exponent can then
    only drop, which is confirmed before returning.
    """
    missing = sorted(p.support() - p_s.support())
    if missing:
        monomial = str(Poly(RING2, {missing[0]: 1}))
        raise ValueError(
            f"support containment violated: monomial {monomial} of the base "
            "polynomial is missing from the deformation"
        )
    report = DeformationReport(base=loj_exponent(p), deformed=loj_exponent(p_s))
    if not report.monotone:
        raise RuntimeError("deformation monotonicity violated; arithmetic bug")
    return report
