"""The numerator of d/dx_N (s_lambda / s_rho) as an exact polynomial.

Writing both Schur polynomials through their last-variable decomposition
turns the quotient-rule numerator into the double sum of terms
(e - d) x_N^(d+e-1) s_{rho/d} s_{lambda/e}; the sign claims of the
monotonicity theorems are then coefficient checks on that polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, SkewShape, one_box_chain, partition_contains
from .polynomial import SparsePolynomial
from .schur import SchurContext, default_context


@dataclass(frozen=True)
class DerivativeReport:
    rho: Partition
    lam: Partition
    nvars: int
    numerator: SparsePolynomial
    max_coefficient: int
    term_count: int

    @property
    def all_nonpositive(self) -> bool:
        return self.max_coefficient <= 0


def p_term(
    d: int,
    e: int,
    rho: Partition,
    lam: Partition,
    nvars: int,
    ctx: SchurContext | None = None,
) -> SparsePolynomial:
    """(e - d) x_N^(d+e-1) s_{rho/d}(x_1..x_{N-1}) s_{lambda/e}(x_1..x_{N-1})."""
    if not (0 <= d <= rho.part(1)):
        raise ValueError(f"d={d} out of range for rho={rho}")
    if not (0 <= e <= lam.part(1)):
        raise ValueError(f"e={e} out of range for lambda={lam}")
    if d == e:
        return SparsePolynomial.zero(nvars)
    ctx = ctx or default_context()
    left = ctx.schur_poly(SkewShape.row_strip(rho, d), nvars - 1)
    right = ctx.schur_poly(SkewShape.row_strip(lam, e), nvars - 1)
    shift = (0,) * (nvars - 1) + (d + e - 1,)
    return (left * right).lift(nvars, shift).scale(e - d)


def derivative_numerator(
    rho: Partition,
    lam: Partition,
    nvars: int,
    ctx: SchurContext | None = None,
) -> DerivativeReport:
    """Exact numerator of d/dx_N (s_lambda / s_rho) over s_rho^2."""
    if nvars < max(rho.nrows, lam.nrows):
        raise ValueError("nvars must cover every nonzero row")
    ctx = ctx or default_context()
    total = SparsePolynomial.zero(nvars)
    for d in range(rho.part(1) + 1):
        for e in range(lam.part(1) + 1):
            total = total + p_term(d, e, rho, lam, nvars, ctx)
    return DerivativeReport(
        rho=rho,
        lam=lam,
        nvars=nvars,
        numerator=total,
        max_coefficient=total.max_coefficient(),
        term_count=len(total),
    )


def numerator_for_variable(
    rho: Partition,
    lam: Partition,
    nvars: int,
    var: int,
    ctx: SchurContext | None = None,
) -> SparsePolynomial:
    """Numerator of d/dx_var via the x_var <-> x_N symmetry swap."""
    if not (1 <= var <= nvars):
        raise ValueError(f"variable {var} out of range")
    base = derivative_numerator(rho, lam, nvars, ctx).numerator
    if var == nvars:
        return base
    return base.swap_variables(var, nvars)


def quotient_rule_numerator(
    rho: Partition,
    lam: Partition,
    nvars: int,
    var: int | None = None,
    ctx: SchurContext | None = None,
) -> SparsePolynomial:
    """s_rho * d(s_lambda)/dx_var - s_lambda * d(s_rho)/dx_var, expanded directly.

    Independent of the skew decomposition; serves as the oracle for
    `derivative_numerator`.
    """
    ctx = ctx or default_context()
    var = nvars if var is None else var
    p_rho = ctx.schur_poly(rho, nvars)
    p_lam = ctx.schur_poly(lam, nvars)
    return p_rho * p_lam.partial(var) - p_lam * p_rho.partial(var)


def verify_quotient_rule(
    rho: Partition, lam: Partition, nvars: int, ctx: SchurContext | None = None
) -> bool:
    report = derivative_numerator(rho, lam, nvars, ctx)
    return report.numerator == quotient_rule_numerator(rho, lam, nvars, ctx=ctx)


def verify_pair_cancellation(
    rho: Partition,
    lam: Partition,
    nvars: int,
    d: int,
    e: int,
    ctx: SchurContext | None = None,
) -> bool:
    """True iff every coefficient of P(d,e) + P(e,d) is nonpositive."""
    _require_one_box(rho, lam)
    if not (0 <= d <= e <= lam.part(1)):
        raise ValueError(f"need 0 <= d <= e <= lambda_1, got d={d}, e={e}")
    total = p_term(d, e, rho, lam, nvars, ctx) + p_term(e, d, rho, lam, nvars, ctx)
    return total.max_coefficient() <= 0


def verify_general_case(
    rho: Partition, lam: Partition, nvars: int, ctx: SchurContext | None = None
) -> bool:
    """Direct coefficient check of the sign theorem on (rho, lambda)."""
    if not partition_contains(lam, rho):
        raise ValueError(f"{lam} not contained in {rho}")
    return derivative_numerator(rho, lam, nvars, ctx).max_coefficient <= 0


def verify_general_case_via_chain(
    rho: Partition, lam: Partition, nvars: int, ctx: SchurContext | None = None
) -> bool:
    """Sign theorem through the one-box chain: every step's numerator is
    nonpositive, which is what the product-rule reduction needs."""
    chain = one_box_chain(rho, lam)
    return all(
        verify_general_case(upper, lower, nvars, ctx)
        for upper, lower in zip(chain, chain[1:])
    )


def _require_one_box(rho: Partition, lam: Partition):
    if rho.size != lam.size + 1 or not partition_contains(lam, rho):
        raise ValueError(f"{lam} must be {rho} minus exactly one box")
