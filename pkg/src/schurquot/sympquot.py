"""First Laurent coefficients of symplectic-quotient Hilbert series.

For a faithful circle representation with nonzero weights of both signs
the coefficient is a ratio of two Schur polynomials of near-staircase
shape evaluated at the absolute weights; for SU(2) representations it is
a similar three-shape expression in the doubled positive weights.  All
arithmetic is exact rationals, and the coincidence search between the two
families relies on strict monotonicity in the weights for pruning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterator, Sequence

from .partitions import Partition
from .schur import SchurContext, default_context

EXCEPTIONAL_SU2 = {(1,), (2,), (3,), (4,), (1, 1)}
# Values and quotient dimensions known for the excluded low-dimensional
# representations; everything else in the exceptional set fails loudly.
SU2_OVERRIDES = {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2), (3,): Fraction(1, 4)}
SU2_OVERRIDE_DIMENSIONS = {(1, 1): 2, (2,): 2, (3,): 2}


@dataclass(frozen=True)
class CircleWeights:
    weights: tuple[int, ...]

    def __post_init__(self):
        w = self.weights
        if not w:
            raise ValueError("weight vector must be nonempty")
        if any(a == 0 for a in w):
            raise ValueError("zero weights are not allowed")
        if all(a > 0 for a in w) or all(a < 0 for a in w):
            raise ValueError("weights of one sign give a trivial quotient")
        if gcd(*[abs(a) for a in w]) != 1:
            raise ValueError("weights must have gcd 1 (faithful representation)")

    @classmethod
    def from_abs(cls, alphas: Sequence[int]) -> "CircleWeights":
        """Canonical signed vector for a multiset of absolute weights."""
        alphas = sorted(alphas)
        signed = list(alphas)
        signed[1] = -signed[1]
        return cls(tuple(signed))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def abs_weights(self) -> tuple[int, ...]:
        return tuple(sorted(abs(a) for a in self.weights))

    @property
    def quotient_dimension(self) -> int:
        return 2 * self.n - 2


@dataclass(frozen=True)
class SU2Rep:
    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.degrees or any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be positive integers")

    @classmethod
    def of(cls, *degrees: int) -> "SU2Rep":
        return cls(tuple(sorted(degrees)))

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees))

    @property
    def complex_dimension(self) -> int:
        return len(self.degrees) + sum(self.degrees)

    @property
    def even_count(self) -> int:
        return sum(1 for d in self.degrees if d % 2 == 0)

    @property
    def positive_weight_count(self) -> int:
        return (self.complex_dimension - self.even_count) // 2

    @property
    def sigma(self) -> int:
        return 2 if all(d % 2 == 0 for d in self.degrees) else 1

    @property
    def doubled_positive_weights(self) -> tuple[int, ...]:
        weights: list[int] = []
        for d in self.degrees:
            for w in range(d, 0, -2):
                weights.extend((w, w))
        weights.sort()
        assert len(weights) == 2 * self.positive_weight_count
        return tuple(weights)

    @property
    def is_exceptional(self) -> bool:
        return self.key in EXCEPTIONAL_SU2

    @property
    def quotient_dimension(self) -> int:
        if self.is_exceptional:
            try:
                return SU2_OVERRIDE_DIMENSIONS[self.key]
            except KeyError:
                raise ValueError(f"no recorded quotient dimension for {self.key}")
        return 2 * self.complex_dimension - 6


@dataclass(frozen=True)
class Gamma0Value:
    value: Fraction
    source: str  # "formula" | "override-table"
    group: str  # "S1" | "SU2"
    dimension: int


def s1_shapes(n: int) -> tuple[Partition, Partition]:
    """Numerator and denominator shapes for an n-weight circle quotient."""
    if n < 2:
        raise ValueError("need at least two weights")
    num = Partition((n - 2,) + tuple(range(n - 2, -1, -1)))
    den = Partition(tuple(range(n - 1, -1, -1)))
    return num, den


def gamma0_s1(
    w: CircleWeights, ctx: SchurContext | None = None, term_budget: int = 10**6
) -> Gamma0Value:
    ctx = ctx or default_context()
    alphas = w.abs_weights
    num_shape, den_shape = s1_shapes(w.n)
    value = ctx.eval_schur(num_shape, alphas, term_budget) / ctx.eval_schur(
        den_shape, alphas, term_budget
    )
    return Gamma0Value(value, "formula", "S1", w.quotient_dimension)


def su2_shapes(c: int) -> tuple[Partition, Partition, Partition]:
    """The three shapes entering the SU(2) formula, for 2c positive weights."""
    if c < 2:
        raise ValueError("formula needs at least four doubled weights")
    delta = Partition(tuple(range(2 * c - 1, -1, -1)))
    rho_hat = Partition((2 * c - 3, 2 * c - 3) + tuple(range(2 * c - 3, -1, -1)))
    rho_hat_prime = Partition(
        (2 * c - 3, 2 * c - 4, 2 * c - 4) + tuple(range(2 * c - 4, -1, -1))
    )
    return rho_hat, rho_hat_prime, delta


def gamma0_su2(
    rep: SU2Rep, ctx: SchurContext | None = None, term_budget: int = 10**6
) -> Gamma0Value:
    if rep.is_exceptional:
        try:
            value = SU2_OVERRIDES[rep.key]
        except KeyError:
            raise ValueError(
                f"representation {rep.key} is excluded from the formula and has "
                "no recorded value"
            )
        return Gamma0Value(value, "override-table", "SU2", rep.quotient_dimension)
    ctx = ctx or default_context()
    a = rep.doubled_positive_weights
    rho_hat, rho_hat_prime, delta = su2_shapes(rep.positive_weight_count)
    value = (
        8
        * rep.sigma
        * (ctx.eval_schur(rho_hat, a, term_budget) + ctx.eval_schur(rho_hat_prime, a, term_budget))
        / ctx.eval_schur(delta, a, term_budget)
    )
    return Gamma0Value(value, "formula", "SU2", rep.quotient_dimension)


@dataclass(frozen=True)
class ComparisonResult:
    left: Fraction
    right: Fraction
    hypotheses_met: bool

    @property
    def strictly_greater(self) -> bool:
        return self.left > self.right


def s1_compare(a: CircleWeights, b: CircleWeights, ctx: SchurContext | None = None) -> ComparisonResult:
    """Monotonicity comparison: componentwise larger weights give a
    strictly smaller coefficient."""
    ctx = ctx or default_context()
    aa, bb = a.abs_weights, b.abs_weights
    hypotheses = (
        len(aa) == len(bb)
        and all(x <= y for x, y in zip(aa, bb))
        and any(x < y for x, y in zip(aa, bb))
    )
    return ComparisonResult(
        gamma0_s1(a, ctx).value, gamma0_s1(b, ctx).value, hypotheses
    )


def s1_upper_bound(w: CircleWeights) -> Fraction:
    """1 over the sum of the two largest absolute weights."""
    alphas = sorted(w.abs_weights)
    return Fraction(1, alphas[-1] + alphas[-2])


def su2_lower_bound(rep: SU2Rep) -> Fraction:
    if rep.is_exceptional:
        raise ValueError(f"bound does not apply to the excluded {rep.key}")
    big_d = rep.complex_dimension
    if big_d <= 2:
        raise ValueError("bound needs complex dimension at least 3")
    return Fraction(
        24 * rep.sigma, big_d * (big_d - 2) * (big_d + 1) * (big_d - 1) ** 3
    )


def su2_reps_for_dimension(m: int) -> list[SU2Rep]:
    """All SU(2) representations whose symplectic quotient has dimension m.

    Non-exceptional representations have quotient dimension 2D - 6; the
    excluded ones contribute through the recorded override dimensions.
    The two exceptional representations without recorded values (degree 1
    and degree 4) are omitted: nothing can be compared against them.
    """
    if m < 0 or m % 2:
        raise ValueError("quotient dimension must be even and nonnegative")
    reps = [
        SU2Rep(key)
        for key, dim in SU2_OVERRIDE_DIMENSIONS.items()
        if dim == m
    ]
    big_d = (m + 6) // 2

    def degree_tuples(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
        # remaining = D - (number of parts already fixed) bookkeeping is done
        # by the caller; here: all decreasing tuples with sum+len == remaining.
        for first in range(min(remaining - 1, max_part), 0, -1):
            rest_budget = remaining - first - 1
            if rest_budget == 0:
                yield (first,)
            for rest in degree_tuples(rest_budget, first):
                yield (first,) + rest

    for degrees in degree_tuples(big_d, big_d):
        rep = SU2Rep(tuple(sorted(degrees)))
        if not rep.is_exceptional:
            reps.append(rep)
    return sorted(reps, key=lambda r: r.key)


def _int_det(m: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix; destroys m."""
    size = len(m)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
        prev = pivot
    return sign * m[size - 1][size - 1]


@dataclass
class SearchReport:
    dimension: int
    su2_table: list[tuple[SU2Rep, Fraction]]
    matches: list[tuple[CircleWeights, SU2Rep]]
    examined: int = 0
    pruned: int = 0

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "su2_table": [
                {"degrees": list(rep.key), "gamma0": str(v)} for rep, v in self.su2_table
            ],
            "matches": [
                {"weights": list(w.weights), "degrees": list(rep.key)}
                for w, rep in self.matches
            ],
            "examined": self.examined,
            "pruned_count": self.pruned,
        }


def coincidence_search(
    dimension: int,
    ctx: SchurContext | None = None,
    checkpoint: str | None = None,
    term_budget: int = 10**6,
) -> SearchReport:
    """All circle weight vectors whose coefficient equals some SU(2) value
    of the same quotient dimension.

    Enumerates sorted absolute-weight vectors depth first.  Because the
    coefficient strictly decreases when any weight grows, a prefix whose
    most optimistic completion already falls below the smallest SU(2)
    value prunes its whole subtree.
    """
    if dimension < 2 or dimension % 2:
        raise ValueError("dimension must be an even integer >= 2")
    ctx = ctx or default_context()
    table = [(rep, gamma0_su2(rep, ctx, term_budget).value) for rep in su2_reps_for_dimension(dimension)]
    report = SearchReport(dimension, table, [])
    if not table:
        return report
    values = {v for _, v in table}
    vmin = min(values)
    n = dimension // 2 + 1
    # Hard cap from the two-largest-weights bound.
    cap = int(1 / vmin)

    p_min, q_min = vmin.numerator, vmin.denominator
    # Hot loop: the ratio as two confluent bialternants over integers.
    # Their exponent lists agree except in the leading column (2n-3 for the
    # numerator shape, 2n-2 for the staircase), so rows are built once.
    exps_shared = [2 * (n - 1 - j) for j in range(1, n)]
    e_num, e_den = 2 * n - 3, 2 * n - 2

    def gamma_raw(point: Sequence[int]) -> tuple[int, int]:
        num_rows: list[list[int]] = []
        den_rows: list[list[int]] = []
        i = 0
        while i < n:
            v = point[i]
            mult = 1
            while i + mult < n and point[i + mult] == v:
                mult += 1
            tail = [v**e for e in exps_shared]
            num_rows.append([v**e_num] + tail)
            den_rows.append([v**e_den] + list(tail))
            for k in range(1, mult):
                tail = [comb(e, k) * v ** (e - k) if e >= k else 0 for e in exps_shared]
                num_rows.append([comb(e_num, k) * v ** (e_num - k)] + tail)
                den_rows.append([comb(e_den, k) * v ** (e_den - k)] + list(tail))
            i += mult
        num = _int_det(num_rows)
        den = _int_det(den_rows)
        if den < 0:
            num, den = -num, -den
        return num, den

    def visit(prefix: list[int]):
        last = prefix[-1] if prefix else 1
        for v in range(last, cap + 1):
            candidate = prefix + [v]
            filled = candidate + [v] * (n - len(candidate))
            if filled[-1] + filled[-2] > cap:
                break
            num, den = gamma_raw(filled)
            # Most optimistic completion already below every SU(2) value.
            if num * q_min < p_min * den:
                report.pruned += 1
                break
            if len(candidate) == n:
                report.examined += 1
                if gcd(*candidate) == 1:
                    for rep, val in table:
                        if num * val.denominator == val.numerator * den:
                            report.matches.append((CircleWeights.from_abs(candidate), rep))
            else:
                visit(candidate)

    visit([])
    report.matches.sort(key=lambda m: (m[0].abs_weights, m[1].key))
    if checkpoint:
        with open(checkpoint, "w") as fh:
            json.dump(report.to_dict(), fh, indent=2)
    return report
