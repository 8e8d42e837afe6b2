"""Wild/tame classification of Nagata-type maps.

Verdicts:

* NotAutomorphism — the residual -2*y*phi_x + z*phi_y is nonzero.
* WildAutomorphism — phi = p(x*z + y^2, z) and the (2,1)-weighted leading
  form of p has nonzero t1-derivative; the leading forms of the map are
  then (-z*lf^2, z*lf, z), which cannot come from a tame map.
* TameAutomorphism — p depends only on t2, so the map factors into two
  elementary automorphisms (verified by composition before returning).
* AutomorphismTamenessUnknown — an automorphism the leading-form test
  does not decide; the criterion is sufficient, not necessary, and we do
  not guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .maps import PolyEndo, build_nagata, compose, decompose, pde_residual
from .poly import Poly, X, Y, Z, expand_bivariate

WEIGHTS = (2, 1)  # grading under which t1 matches x*z + y^2 and t2 matches z


class Verdict(Enum):
    NOT_AUTOMORPHISM = "NotAutomorphism"
    WILD_AUTOMORPHISM = "WildAutomorphism"
    TAME_AUTOMORPHISM = "TameAutomorphism"
    AUTOMORPHISM_TAMENESS_UNKNOWN = "AutomorphismTamenessUnknown"


@dataclass(frozen=True)
class Classification:
    """Verdict plus the evidence that justifies it."""

    verdict: Verdict
    residual: Poly | None = None
    representative: Poly | None = None
    leading_form: Poly | None = None
    leading_form_t1_derivative: Poly | None = None
    tame_factors: tuple[PolyEndo, PolyEndo] | None = None


def wild_by_leading_form(p: Poly) -> bool:
    """Sufficient wildness test: the t1-derivative of the (2,1)-weighted
    leading form of p is nonzero.  False for p = 0 (the identity map)."""
    if p.is_zero():
        return False
    return not p.weighted_leading_form(WEIGHTS).partial("t1").is_zero()


def _tame_factorization(phi: Poly, p: Poly) -> tuple[PolyEndo, PolyEndo]:
    """For p in Q[t2] the map splits into two elementary automorphisms:
    first shift x by -2*y*q - z*q^2, then shift y by z*q, with q = p(z).
    Verified by composition before returning."""
    q = expand_bivariate(p)  # p depends only on t2, so this is p(z)
    first = PolyEndo(X - 2 * Y * q - Z * q ** 2, Y, Z)
    second = PolyEndo(X, Y + Z * q, Z)
    target = PolyEndo(X - 2 * Y * phi - Z * phi ** 2, Y + Z * phi, Z)
    if compose(second, first) != target:
        raise RuntimeError("tame factorization failed verification; arithmetic bug")
    return (first, second)


def classify(phi: Poly) -> Classification:
    residual = pde_residual(phi)
    if not residual.is_zero():
        return Classification(Verdict.NOT_AUTOMORPHISM, residual=residual)
    p = decompose(phi)
    if p is None:
        raise RuntimeError(
            "zero residual but no bivariate representative; arithmetic bug"
        )
    if p.is_zero():
        return Classification(
            Verdict.TAME_AUTOMORPHISM,
            representative=p,
            tame_factors=_tame_factorization(phi, p),
        )
    lead = p.weighted_leading_form(WEIGHTS)
    lead_t1 = lead.partial("t1")
    if not lead_t1.is_zero():
        return Classification(
            Verdict.WILD_AUTOMORPHISM,
            representative=p,
            leading_form=lead,
            leading_form_t1_derivative=lead_t1,
        )
    if all(exp[0] == 0 for exp, _ in p.terms()):
        return Classification(
            Verdict.TAME_AUTOMORPHISM,
            representative=p,
            leading_form=lead,
            tame_factors=_tame_factorization(phi, p),
        )
    return Classification(
        Verdict.AUTOMORPHISM_TAMENESS_UNKNOWN,
        representative=p,
        leading_form=lead,
        leading_form_t1_derivative=lead_t1,
    )


MINOR_NAMES = (
    "fg_xy", "fg_yz", "fg_xz",
    "gh_xy", "gh_yz", "gh_xz",
    "fh_xy", "fh_yz", "fh_xz",
)


def leading_minors(phi: Poly) -> dict[str, Poly]:
    """All nine 2x2 Jacobian minors of the leading forms of the map.

    Key "fg_yz" means fbar_y * gbar_z - fbar_z * gbar_y, and so on.
    Constant phi is rejected: the map is then affine and its leading
    forms carry no information.
    """
    if phi.is_constant():
        raise ValueError("leading forms degenerate")
    endo = build_nagata(phi).endo
    bars = {"f": endo.f.leading_form(), "g": endo.g.leading_form(), "h": endo.h.leading_form()}
    axes = {"xy": ("x", "y"), "yz": ("y", "z"), "xz": ("x", "z")}
    minors: dict[str, Poly] = {}
    for pair in ("fg", "gh", "fh"):
        p, q = bars[pair[0]], bars[pair[1]]
        for name, (u, v) in axes.items():
            minors[f"{pair}_{name}"] = p.partial(u) * q.partial(v) - p.partial(v) * q.partial(u)
    return minors


def leading_minor_closed_forms(phi: Poly) -> dict[str, Poly]:
    """Predicted minors from the leading forms (-z*lf^2, z*lf, z) of the
    map components, where lf is the leading form of phi.  Exact for any
    nonconstant phi."""
    if phi.is_constant():
        raise ValueError("leading forms degenerate")
    lf = phi.leading_form()
    lf_x = lf.partial("x")
    lf_y = lf.partial("y")
    zero = Poly.zero(phi.vars)
    return {
        "fg_xy": zero,
        "fg_yz": -Z * lf ** 2 * lf_y,
        "fg_xz": -Z * lf ** 2 * lf_x,
        "gh_xy": zero,
        "gh_yz": Z * lf_y,
        "gh_xz": Z * lf_x,
        "fh_xy": zero,
        "fh_yz": -2 * Z * lf * lf_y,
        "fh_xz": -2 * Z * lf * lf_x,
    }
