"""Square matrices of Laurent polynomials indexed by multipartitions."""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import LaurentPoly


@dataclass(frozen=True)
class GradedMatrix:
    """A square matrix with Laurent-polynomial entries.

    `kind` is one of "kostka", "cdelta", "ddelta", "cl"; rows and columns
    are multipartitions in the deterministic enumeration order.
    """

    kind: str
    ell: int
    n: int
    rows: tuple
    cols: tuple
    entries: tuple

    def entry(self, row, col) -> LaurentPoly:
        return self.entries[self.rows.index(tuple(row))][self.cols.index(tuple(col))]

    def specialize(self, value):
        """Evaluate every entry at t = value; returns nested tuples."""
        return tuple(tuple(e.evaluate(value) for e in row) for row in self.entries)

    def is_identity_at(self, value) -> bool:
        spec = self.specialize(value)
        return all(
            v.is_one() if i == j else v.is_zero()
            for i, row in enumerate(spec)
            for j, v in enumerate(row)
        )
