"""Semistandard fillings of (skew) Young diagrams.

Convention: rows weakly increase left to right, columns strictly increase
top to bottom.  Disconnected skew shapes are fine; their components are
enumerated jointly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .partitions import Partition, SkewShape


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape, entries stored in row-major cell order."""

    shape: SkewShape
    entries: tuple[int, ...]
    nlabels: int

    def __post_init__(self):
        cells = self.shape.cells()
        if len(self.entries) != len(cells):
            raise ValueError(
                f"{len(self.entries)} entries for {len(cells)} cells of {self.shape}"
            )
        for v in self.entries:
            if not (1 <= v <= self.nlabels):
                raise ValueError(f"entry {v} outside 1..{self.nlabels}")

    @classmethod
    def from_rows(cls, shape: SkewShape, rows, nlabels: int) -> "SkewTableau":
        """Rows list the entries of each row's present cells, left to right."""
        flat = [v for row in rows for v in row]
        return cls(shape, tuple(flat), nlabels)

    @classmethod
    def from_entries(cls, shape: SkewShape, entries: Mapping[tuple[int, int], int], nlabels: int) -> "SkewTableau":
        return cls(shape, tuple(entries[c] for c in shape.cells()), nlabels)

    def entry_map(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.shape.cells(), self.entries))

    def entry(self, i: int, j: int) -> int | None:
        try:
            return self.entry_map()[(i, j)]
        except KeyError:
            return None

    def rows(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.shape.outer.nrows)]
        for (i, _), v in zip(self.shape.cells(), self.entries):
            out[i - 1].append(v)
        return out

    def ascii(self) -> str:
        """One line per row; `.` marks removed inner cells."""
        lines = []
        emap = self.entry_map()
        for i in range(1, self.shape.outer.nrows + 1):
            cells = []
            for j in range(1, self.shape.outer.part(i) + 1):
                cells.append("." if j <= self.shape.inner.part(i) else str(emap[(i, j)]))
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "outer": list(self.shape.outer.parts),
            "inner": list(self.shape.inner.parts),
            "rows": self.rows(),
        }


def validate(t: SkewTableau) -> bool:
    """Row-weak / column-strict check."""
    emap = t.entry_map()
    for (i, j), v in emap.items():
        right = emap.get((i, j + 1))
        if right is not None and v > right:
            return False
        below = emap.get((i + 1, j))
        if below is not None and v >= below:
            return False
    return True


def enumerate_ssyt(shape: SkewShape, nlabels: int) -> Iterator[SkewTableau]:
    """All skew SSYTs of `shape` with labels in 1..nlabels.

    Cells are filled in row-major order with the smallest feasible label
    first, so the stream is lexicographic on the reading word.
    """
    if nlabels < 0:
        raise ValueError("nlabels must be nonnegative")
    cells = shape.cells()
    if not cells:
        yield SkewTableau(shape, (), nlabels)
        return
    if nlabels == 0:
        return
    index = {c: k for k, c in enumerate(cells)}
    entries = [0] * len(cells)

    def fill(k: int) -> Iterator[SkewTableau]:
        if k == len(cells):
            yield SkewTableau(shape, tuple(entries), nlabels)
            return
        i, j = cells[k]
        lo = 1
        left = index.get((i, j - 1))
        if left is not None:
            lo = max(lo, entries[left])
        above = index.get((i - 1, j))
        if above is not None:
            lo = max(lo, entries[above] + 1)
        for v in range(lo, nlabels + 1):
            entries[k] = v
            yield from fill(k + 1)
        entries[k] = 0

    yield from fill(0)


def count_ssyt(shape: SkewShape, nlabels: int) -> int:
    return sum(1 for _ in enumerate_ssyt(shape, nlabels))


def monomial(t: SkewTableau) -> tuple[int, ...]:
    """Exponent vector over labels 1..nlabels: multiplicity of each label."""
    exps = [0] * t.nlabels
    for v in t.entries:
        exps[v - 1] += 1
    return tuple(exps)


def straight(outer, nlabels: int) -> Iterator[SkewTableau]:
    """Shorthand for enumerating a non-skew shape."""
    return enumerate_ssyt(SkewShape.straight(Partition(outer)), nlabels)
