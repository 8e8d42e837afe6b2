"""Nagata-type endomorphisms of Q[x,y,z]: construction, Jacobians, inverses.

For a polynomial phi, the associated map is the triple

    f = x - 2*y*phi - z*phi^2
    g = y + z*phi
    h = z

It is the identity for phi = 0 and the classical Nagata automorphism for
phi = x*z + y^2.  The map is an automorphism exactly when the residual
-2*y*phi_x + z*phi_y vanishes, equivalently when phi = p(x*z + y^2, z)
for a bivariate p; in that case the inverse is (x + 2*y*phi - z*phi^2,
y - z*phi, z).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, RING2, RING3, Scalar, X, Y, Z, expand_bivariate


@dataclass(frozen=True)
class PolyEndo:
    """An endomorphism of Q[x,y,z], given by the images of x, y, z."""

    f: Poly
    g: Poly
    h: Poly

    def __post_init__(self):
        for c in (self.f, self.g, self.h):
            if c.vars != RING3:
                raise ValueError("endomorphism components must live in Q[x,y,z]")

    def __iter__(self):
        return iter((self.f, self.g, self.h))

    @classmethod
    def identity(cls) -> "PolyEndo":
        return cls(X, Y, Z)

    def evaluate(self, *point: Scalar) -> tuple[Fraction, Fraction, Fraction]:
        """Image of a rational point under the induced map of Q^3."""
        return (self.f.evaluate(*point),
                self.g.evaluate(*point),
                self.h.evaluate(*point))


@dataclass(frozen=True)
class NagataMap:
    """A polynomial phi together with its map and, when phi lies in the
    invariant subalgebra Q[x*z + y^2, z], the bivariate representative."""

    phi: Poly
    endo: PolyEndo
    representative: Poly | None


@dataclass(frozen=True)
class JacobianReport:
    matrix: tuple[tuple[Poly, ...], ...]
    determinant: Poly
    residual: Poly
    is_constant_nonzero: bool


@dataclass(frozen=True)
class AutomorphyResult:
    """Outcome of the automorphy decision, with an explicit witness:
    the representative and inverse when true, the nonzero residual when
    false."""

    is_automorphism: bool
    residual: Poly
    representative: Poly | None
    inverse: PolyEndo | None

    def __bool__(self) -> bool:
        return self.is_automorphism


@dataclass(frozen=True)
class MilnorCertificate:
    """Coefficient triples (A,B,C) and (A',B',C') with A*f + B*g + C*h = x
    and A'*f + B'*g + C'*h = y, proving <f,g,h> = <x,y,z> and hence that
    the map has Milnor number 1."""

    x_combination: tuple[Poly, Poly, Poly]
    y_combination: tuple[Poly, Poly, Poly]


def _require_ring3(phi: Poly) -> None:
    if phi.vars != RING3:
        raise ValueError("phi must be a polynomial in x, y, z")


def build_nagata(phi: Poly) -> NagataMap:
    """Construct the map (x - 2*y*phi - z*phi^2, y + z*phi, z)."""
    _require_ring3(phi)
    endo = PolyEndo(X - 2 * Y * phi - Z * phi ** 2, Y + Z * phi, Z)
    return NagataMap(phi=phi, endo=endo, representative=decompose(phi))


def jacobian(e: PolyEndo) -> tuple[tuple[Poly, ...], ...]:
    """3x3 matrix of partials; entry (i, j) is d(component i)/d(variable j)."""
    return tuple(
        tuple(component.partial(v) for v in RING3)
        for component in (e.f, e.g, e.h)
    )


def jacobian_det(e: PolyEndo) -> Poly:
    """Exact determinant of the Jacobian matrix, by cofactor expansion."""
    m = jacobian(e)
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def pde_residual(phi: Poly) -> Poly:
    """The polynomial -2*y*phi_x + z*phi_y, whose vanishing characterizes
    automorphy of the associated map."""
    _require_ring3(phi)
    return -2 * Y * phi.partial("x") + Z * phi.partial("y")


def jacobian_report(phi: Poly) -> JacobianReport:
    """Jacobian matrix, determinant and residual of the map built from phi."""
    endo = PolyEndo(X - 2 * Y * phi - Z * phi ** 2, Y + Z * phi, Z)
    det = jacobian_det(endo)
    residual = pde_residual(phi)
    return JacobianReport(
        matrix=jacobian(endo),
        determinant=det,
        residual=residual,
        is_constant_nonzero=det.is_constant() and not det.is_zero(),
    )


def decompose(phi: Poly) -> Poly | None:
    """Recover p with phi = p(x*z + y^2, z), or None if no such p exists.

    The y = 0 section of phi determines the only possible candidate: a
    monomial x^a * z^b can arise only from t1^a * t2^(b-a), so b >= a is
    required.  The candidate is then verified by recomposition, which
    makes the recovery self-checking.
    """
    _require_ring3(phi)
    candidate: dict[tuple[int, int], Fraction] = {}
    for (a, b, c), coeff in phi.terms():
        if b:
            continue
        if c < a:
            return None
        candidate[(a, c - a)] = coeff
    p = Poly(RING2, candidate)
    return p if expand_bivariate(p) == phi else None


def inverse_nagata(p: Poly) -> PolyEndo:
    """Explicit inverse (x + 2*y*phi - z*phi^2, y - z*phi, z) of the map
    built from phi = p(x*z + y^2, z)."""
    phi = expand_bivariate(p)
    return PolyEndo(X + 2 * Y * phi - Z * phi ** 2, Y - Z * phi, Z)


def compose(outer: PolyEndo, inner: PolyEndo) -> PolyEndo:
    """Componentwise substitution of inner into outer, fully expanded."""
    values = (inner.f, inner.g, inner.h)
    return PolyEndo(
        outer.f.substitute(*values),
        outer.g.substitute(*values),
        outer.h.substitute(*values),
    )


def is_automorphism(phi: Poly) -> AutomorphyResult:
    """Decide automorphy of the map built from phi via the residual test."""
    residual = pde_residual(phi)
    if not residual.is_zero():
        return AutomorphyResult(False, residual, None, None)
    p = decompose(phi)
    if p is None:
        raise RuntimeError(
            "zero residual but no bivariate representative; arithmetic bug"
        )
    return AutomorphyResult(True, residual, p, inverse_nagata(p))


def milnor_certificate(phi: Poly) -> MilnorCertificate:
    """Certificate that <f,g,h> = <x,y,z>:

        x = 1*f + 2*phi*g - phi^2*h
        y = 0*f + 1*g    - phi*h

    Both identities are verified by expansion before returning; failure
    indicates an arithmetic bug, not a property of phi.
    """
    _require_ring3(phi)
    nag = build_nagata(phi)
    f, g, h = nag.endo
    one = Poly.constant(RING3, 1)
    zero = Poly.zero(RING3)
    x_comb = (one, 2 * phi, -phi ** 2)
    y_comb = (zero, one, -phi)
    if x_comb[0] * f + x_comb[1] * g + x_comb[2] * h != X:
        raise RuntimeError("certificate for x failed verification; arithmetic bug")
    if y_comb[0] * f + y_comb[1] * g + y_comb[2] * h != Y:
        raise RuntimeError("certificate for y failed verification; arithmetic bug")
    return MilnorCertificate(x_combination=x_comb, y_combination=y_comb)
