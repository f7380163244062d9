"""Schur and skew Schur polynomials.

Two independent routes are provided: the combinatorial sum over tableaux
(the definition) and the ratio-of-alternants determinant, which doubles as
an evaluation oracle and, in its confluent form, as a fast exact evaluator
for points with repeated coordinates.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Sequence

from .partitions import Partition, SkewShape, partition_contains
from .polynomial import SparsePolynomial
from .tableaux import enumerate_ssyt, monomial


class DegeneratePointError(ValueError):
    """Raised when the plain bialternant is asked about a point with ties."""


def staircase(n: int) -> Partition:
    """The partition (n-1, n-2, ..., 1, 0)."""
    return Partition(tuple(range(n - 1, -1, -1)))


def weyl_dimension(lam: Partition, nvars: int) -> int:
    """Number of SSYTs of straight shape lam with nvars labels.

    Product formula over index pairs; used as an independent counting
    oracle for the tableau enumerator.
    """
    if lam.nrows > nvars:
        return 0
    parts = lam.padded(nvars)
    num = 1
    den = 1
    for i in range(nvars):
        for j in range(i + 1, nvars):
            num *= parts[i] - parts[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


class SchurContext:
    """Memo cache for skew Schur polynomials, safe for concurrent use."""

    def __init__(self):
        self._cache: dict[tuple[SkewShape, int], SparsePolynomial] = {}
        self._lock = threading.Lock()

    def schur_poly(self, shape: SkewShape | Partition, nvars: int) -> SparsePolynomial:
        if isinstance(shape, Partition):
            shape = SkewShape.straight(shape)
        key = (shape, nvars)
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None:
            return cached
        terms: dict[tuple[int, ...], int] = {}
        for t in enumerate_ssyt(shape, nvars):
            exps = monomial(t)
            terms[exps] = terms.get(exps, 0) + 1
        poly = SparsePolynomial(nvars, terms)
        with self._lock:
            self._cache[key] = poly
        return poly

    def eval_schur(
        self,
        lam: Partition,
        point: Sequence[Fraction | int],
        term_budget: int = 10**6,
    ) -> Fraction:
        """Exact evaluation of a straight-shape Schur polynomial.

        Uses the expanded polynomial while the tableau count stays within
        `term_budget`, otherwise the confluent determinant route, which
        copes with repeated coordinates without any perturbation.
        """
        nvars = len(point)
        if lam.nrows > nvars:
            return Fraction(0)
        if lam == staircase(nvars):
            total = Fraction(1)
            for i in range(nvars):
                for j in range(i + 1, nvars):
                    total *= Fraction(point[i]) + Fraction(point[j])
            return total
        if weyl_dimension(lam, nvars) <= term_budget:
            return self.schur_poly(lam, nvars).evaluate(point)
        return schur_confluent(lam, point)


_DEFAULT_CONTEXT = SchurContext()


def default_context() -> SchurContext:
    return _DEFAULT_CONTEXT


def schur_poly(shape: SkewShape | Partition, nvars: int, ctx: SchurContext | None = None) -> SparsePolynomial:
    return (ctx or _DEFAULT_CONTEXT).schur_poly(shape, nvars)


def _det(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def schur_bialternant(lam: Partition, point: Sequence[Fraction | int]) -> Fraction:
    """Ratio of alternants det(x_i^(lam_j + N - j)) / det(x_i^(N - j)).

    Requires pairwise-distinct coordinates; the denominator is the
    Vandermonde determinant and vanishes on ties.
    """
    nvars = len(point)
    point = [Fraction(x) for x in point]
    if len(set(point)) != nvars:
        raise DegeneratePointError(f"repeated coordinate in {point}")
    if lam.nrows > nvars:
        return Fraction(0)
    parts = lam.padded(nvars)
    exps = [parts[j] + nvars - 1 - j for j in range(nvars)]
    num = _det([[x**e for e in exps] for x in point])
    den = _det([[x ** (nvars - 1 - j) for j in range(nvars)] for x in point])
    return num / den


def schur_confluent(lam: Partition, point: Sequence[Fraction | int]) -> Fraction:
    """Bialternant evaluation that groups equal coordinates.

    A value repeated m times contributes m determinant rows, the k-th being
    the k-th derivative of x -> x^e divided by k!.  Both alternants are
    transformed the same way, so their ratio is the limit of the generic
    ratio and equals the Schur value exactly.
    """
    nvars = len(point)
    if lam.nrows > nvars:
        return Fraction(0)
    parts = lam.padded(nvars)
    groups: dict[Fraction, int] = {}
    for x in point:
        x = Fraction(x)
        groups[x] = groups.get(x, 0) + 1

    def confluent_det(exps: list[int]) -> Fraction:
        rows = []
        for v, mult in groups.items():
            for k in range(mult):
                rows.append([Fraction(math.comb(e, k)) * v ** (e - k) if e >= k else Fraction(0) for e in exps])
        return _det(rows)

    num_exps = [parts[j] + nvars - 1 - j for j in range(nvars)]
    den_exps = [nvars - 1 - j for j in range(nvars)]
    den = confluent_det(den_exps)
    assert den != 0
    return confluent_det(num_exps) / den


def horizontal_strips(rho: Partition, d: int) -> list[Partition]:
    """All mu ⊆ rho with |rho| - |mu| = d and rho/mu a horizontal strip.

    A strip has no two cells in a column, equivalently mu interlaces rho:
    rho_{i+1} <= mu_i <= rho_i.
    """
    if d < 0 or d > rho.size:
        raise ValueError(f"strip length {d} out of range for {rho}")
    parts = rho.normalized_parts()
    n = len(parts)
    results: list[Partition] = []

    def build(i: int, prefix: list[int], remaining: int):
        if i == n:
            if remaining == 0:
                results.append(Partition(tuple(prefix)))
            return
        hi = parts[i]
        lo = parts[i + 1] if i + 1 < n else 0
        for mu_i in range(hi, lo - 1, -1):
            removed = hi - mu_i
            if removed > remaining:
                continue
            if prefix and mu_i > prefix[-1]:
                continue
            prefix.append(mu_i)
            build(i + 1, prefix, remaining - removed)
            prefix.pop()

    build(0, [], d)
    return results


def skew_decomposition(
    rho: Partition, nvars: int, ctx: SchurContext | None = None
) -> list[tuple[int, SparsePolynomial]]:
    """Pairs (d, s_{rho/d} in nvars-1 variables) for d = 0..rho_1.

    Reassembling sum_d x_N^d * s_{rho/d} reproduces s_rho on nvars
    variables exactly.
    """
    ctx = ctx or _DEFAULT_CONTEXT
    return [
        (d, ctx.schur_poly(SkewShape.row_strip(rho, d), nvars - 1))
        for d in range(rho.part(1) + 1)
    ]


def reassemble_decomposition(
    decomposition: list[tuple[int, SparsePolynomial]], nvars: int
) -> SparsePolynomial:
    total = SparsePolynomial.zero(nvars)
    for d, poly in decomposition:
        shift = (0,) * (nvars - 1) + (d,)
        total = total + poly.lift(nvars, shift)
    return total
