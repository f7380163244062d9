"""Sparse multivariate polynomials with exact integer coefficients.

Terms map exponent tuples to nonzero Python ints, so coefficients never
overflow.  Rational numbers (fractions.Fraction) only appear when a
polynomial is evaluated at a point.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

ExponentVector = tuple[int, ...]


def _grlex_key(exps: ExponentVector):
    return (sum(exps), exps)


class SparsePolynomial:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[ExponentVector, int] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean: dict[ExponentVector, int] = {}
        if terms:
            for exps, coef in terms.items():
                if coef == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for nvars={nvars}")
                clean[exps] = coef
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SparsePolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coef: int = 1) -> "SparsePolynomial":
        return cls(nvars, {tuple(exps): coef})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePolynomial":
        """The polynomial x_index, 1-based."""
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[ExponentVector, int]]:
        """Terms in canonical (descending graded lexicographic) order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def coefficients(self) -> Iterable[int]:
        return self._terms.values()

    def max_coefficient(self) -> int:
        """Largest coefficient; 0 for the zero polynomial."""
        return max(self._terms.values(), default=0)

    def min_coefficient(self) -> int:
        return min(self._terms.values(), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    # -- arithmetic ---------------------------------------------------

    def _check_compatible(self, other: "SparsePolynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"mismatched nvars: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_compatible(other)
        terms = dict(self._terms)
        for exps, coef in other._terms.items():
            new = terms.get(exps, 0) + coef
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return SparsePolynomial(self.nvars, terms)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_compatible(other)
        terms: dict[ExponentVector, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exps, 0) + c1 * c2
                if new:
                    terms[exps] = new
                else:
                    terms.pop(exps, None)
        return SparsePolynomial(self.nvars, terms)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int) -> "SparsePolynomial":
        if c == 0:
            return SparsePolynomial.zero(self.nvars)
        return SparsePolynomial(self.nvars, {e: c * k for e, k in self._terms.items()})

    def evaluate(self, point: Sequence[Fraction | int]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"point length {len(point)} != nvars {self.nvars}")
        total = Fraction(0)
        for exps, coef in self._terms.items():
            val = Fraction(coef)
            for x, e in zip(point, exps):
                if e:
                    val *= Fraction(x) ** e
            total += val
        return total

    def partial(self, index: int) -> "SparsePolynomial":
        """Formal partial derivative with respect to x_index (1-based)."""
        k = index - 1
        if not (0 <= k < self.nvars):
            raise ValueError(f"variable index {index} out of range")
        terms: dict[ExponentVector, int] = {}
        for exps, coef in self._terms.items():
            if exps[k] == 0:
                continue
            lowered = exps[:k] + (exps[k] - 1,) + exps[k + 1 :]
            terms[lowered] = terms.get(lowered, 0) + coef * exps[k]
        return SparsePolynomial(self.nvars, terms)

    def swap_variables(self, i: int, j: int) -> "SparsePolynomial":
        """Exchange x_i and x_j (1-based)."""
        a, b = i - 1, j - 1
        terms: dict[ExponentVector, int] = {}
        for exps, coef in self._terms.items():
            e = list(exps)
            e[a], e[b] = e[b], e[a]
            terms[tuple(e)] = coef
        return SparsePolynomial(self.nvars, terms)

    def lift(self, nvars: int, shift: Sequence[int] | None = None) -> "SparsePolynomial":
        """Embed into a larger variable set, optionally multiplying by a monomial.

        Existing variables keep their positions; `shift` (length `nvars`)
        adds to every exponent vector.
        """
        if nvars < self.nvars:
            raise ValueError("cannot lift to fewer variables")
        extra = (0,) * (nvars - self.nvars)
        shift = tuple(shift) if shift is not None else (0,) * nvars
        if len(shift) != nvars:
            raise ValueError("shift length must equal the new nvars")
        terms = {
            tuple(a + b for a, b in zip(exps + extra, shift)): coef
            for exps, coef in self._terms.items()
        }
        return SparsePolynomial(nvars, terms)

    # -- serialization ------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exp": list(exps), "coef": str(coef)} for exps, coef in self.terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SparsePolynomial":
        terms = {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]}
        return cls(data["nvars"], terms)

    @classmethod
    def from_json(cls, text: str) -> "SparsePolynomial":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        if self.is_zero():
            return "0"
        bits = []
        for exps, coef in self.terms():
            factors = [f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(exps) if e]
            body = "*".join(factors)
            if not body:
                bits.append(str(coef))
            elif coef == 1:
                bits.append(body)
            elif coef == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{coef}*{body}")
        return " + ".join(bits).replace("+ -", "- ")
