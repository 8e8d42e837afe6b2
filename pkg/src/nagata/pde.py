"""Homogeneous polynomial solutions of -2*y*phi_x + z*phi_y = 0.

Two independent routes to the degree-d solution space:

* ``solution_basis`` enumerates the closed-form basis
  (x*z + y^2)^k1 * z^k2 over 2*k1 + k2 = d, which spans the space because
  every solution is a polynomial in x*z + y^2 and z.
* ``kernel_oracle`` knows nothing about that structure: it assembles the
  exact linear map taking the coefficient vector of a generic homogeneous
  degree-d polynomial to the coefficient vector of its residual and
  computes a kernel basis by fraction-free Gaussian elimination.

``verify_basis_against_oracle`` checks that the two spans agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .maps import pde_residual
from .poly import Exponent, Poly, RING3, T1, T2, expand_bivariate

DEFAULT_DEGREE_BOUND = 12


@dataclass(frozen=True)
class SolutionBasis:
    degree: int
    elements: tuple[Poly, ...]


@dataclass(frozen=True)
class ComponentResidual:
    """Residual of one homogeneous component of a polynomial."""

    degree: int
    component: Poly
    residual: Poly

    @property
    def is_solution(self) -> bool:
        return self.residual.is_zero()


@dataclass(frozen=True)
class KernelOracleResult:
    """Exact kernel of the residual map on homogeneous degree-d polynomials.

    ``monomials`` fixes the coordinate order (exponent tuples ascending
    lexicographically, x-exponent first); each kernel vector lists one
    coefficient per monomial, normalized to coprime integers with a
    positive leading entry.
    """

    degree: int
    dimension: int
    monomials: tuple[Exponent, ...]
    kernel_basis: tuple[tuple[Fraction, ...], ...]

    def polynomials(self) -> list[Poly]:
        return [
            Poly(RING3, dict(zip(self.monomials, vector)))
            for vector in self.kernel_basis
        ]


def invariant_monomials(d: int) -> list[tuple[int, int]]:
    """Exponent pairs (k1, k2) with 2*k1 + k2 = d, k1 descending."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return [(k1, d - 2 * k1) for k1 in range(d // 2, -1, -1)]


def solution_basis(d: int) -> SolutionBasis:
    """The floor(d/2)+1 expansions (x*z + y^2)^k1 * z^k2 with 2*k1 + k2 = d."""
    elements = tuple(
        expand_bivariate(T1 ** k1 * T2 ** k2) for k1, k2 in invariant_monomials(d)
    )
    return SolutionBasis(degree=d, elements=elements)


def check_homogeneous_split(
    phi: Poly,
    residual_op: Callable[[Poly], Poly] = pde_residual,
) -> tuple[ComponentResidual, ...]:
    """Residual of each homogeneous component of phi.

    Because the residual operator has homogeneous coefficients of one
    degree, phi solves the equation iff every component does; the same
    holds for any operator of that shape passed as ``residual_op``.
    """
    return tuple(
        ComponentResidual(degree=d, component=comp, residual=residual_op(comp))
        for d, comp in phi.homogeneous_components()
    )


def degree_monomials(d: int) -> list[Exponent]:
    """Exponents (a, b, c) with a + b + c = d, ascending lexicographically."""
    return [
        (a, b, d - a - b)
        for a in range(d + 1)
        for b in range(d - a + 1)
    ]


def _residual_matrix(d: int) -> tuple[list[Exponent], list[list[int]]]:
    """Integer matrix of the residual map in the degree_monomials basis.

    Column j holds the residual of monomial j: x^a*y^b*z^c contributes
    -2a to x^(a-1)*y^(b+1)*z^c and b to x^a*y^(b-1)*z^(c+1).
    """
    monomials = degree_monomials(d)
    index = {m: i for i, m in enumerate(monomials)}
    n = len(monomials)
    rows = [[0] * n for _ in range(n)]
    for j, (a, b, c) in enumerate(monomials):
        if a:
            rows[index[(a - 1, b + 1, c)]][j] -= 2 * a
        if b:
            rows[index[(a, b - 1, c + 1)]][j] += b
    return monomials, rows


def _strip_content(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = math.gcd(g, v)
    return [v // g for v in row] if g > 1 else row


def _row_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form (in place); returns pivot columns.

    Elimination uses integer cross-multiplication followed by content
    stripping, so entries stay integral and small.
    """
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][col]
        for i in range(r + 1, len(rows)):
            val = rows[i][col]
            if val:
                rows[i] = _strip_content(
                    [piv * a - val * b for a, b in zip(rows[i], rows[r])]
                )
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _rank(rows: Sequence[Sequence[int]]) -> int:
    _, pivots = _row_echelon([list(row) for row in rows])
    return len(pivots)


def _normalize_vector(v: list[Fraction]) -> tuple[Fraction, ...]:
    denom = math.lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * denom) for x in v]
    g = 0
    for value in ints:
        g = math.gcd(g, value)
    if g:
        ints = [value // g for value in ints]
    lead = next((value for value in ints if value), 0)
    if lead < 0:
        ints = [-value for value in ints]
    return tuple(Fraction(value) for value in ints)


def _kernel_vectors(rows: list[list[int]]) -> list[tuple[Fraction, ...]]:
    ncols = len(rows[0]) if rows else 0
    echelon, pivots = _row_echelon([row[:] for row in rows])
    pivot_set = set(pivots)
    basis = []
    for free_col in (c for c in range(ncols) if c not in pivot_set):
        v = [Fraction(0)] * ncols
        v[free_col] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = sum(
                (Fraction(echelon[r][c]) * v[c] for c in range(pc + 1, ncols)),
                Fraction(0),
            )
            v[pc] = -s / echelon[r][pc]
        basis.append(_normalize_vector(v))
    return basis


def kernel_oracle(d: int, max_degree: int = DEFAULT_DEGREE_BOUND) -> KernelOracleResult:
    """Brute-force exact kernel of the residual map in degree d.

    The system has (d+1)(d+2)/2 unknowns, so ``d`` is capped by
    ``max_degree`` (default 12).
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d > max_degree:
        raise ValueError(f"degree {d} exceeds the kernel oracle bound {max_degree}")
    monomials, rows = _residual_matrix(d)
    vectors = _kernel_vectors(rows)
    return KernelOracleResult(
        degree=d,
        dimension=len(vectors),
        monomials=tuple(monomials),
        kernel_basis=tuple(vectors),
    )


def _coefficient_row(p: Poly, monomials: Sequence[Exponent]) -> list[int]:
    coeffs = [p.coefficient(m) for m in monomials]
    denom = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [int(c * denom) for c in coeffs]


def verify_basis_against_oracle(d: int, max_degree: int = DEFAULT_DEGREE_BOUND) -> bool:
    """True iff the closed-form basis and the oracle kernel span the same
    subspace over Q (checked by exact rank computations)."""
    oracle = kernel_oracle(d, max_degree)
    basis = solution_basis(d)
    a_rows = [_coefficient_row(p, oracle.monomials) for p in basis.elements]
    b_rows = [[int(x) for x in vec] for vec in oracle.kernel_basis]
    rank_a = _rank(a_rows)
    rank_b = _rank(b_rows)
    rank_ab = _rank(a_rows + b_rows)
    return rank_a == rank_b == rank_ab
