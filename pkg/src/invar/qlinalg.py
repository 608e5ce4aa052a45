"""Exact rational matrices: rank, reduced row echelon form, nullspace.

Scalars are `fractions.Fraction`, so all arithmetic is arbitrary-precision
and nothing ever rounds.  Matrices are dense and immutable; every operation
returns a fresh value.  Desk-scale sizes only (a few hundred rows).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import InputError

Rat = Fraction

# Entries larger than this trigger a gcd content reduction during integer
# elimination; keeps bit growth polynomial without dividing every step.
_REDUCE_THRESHOLD = 1 << 128


def parse_rational(value) -> Fraction:
    """Turn an int or a "p/q" / "p" string into an exact Fraction.

    Floats are rejected: they have already lost exactness upstream.
    """
    if isinstance(value, bool):
        raise InputError(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational literal: {value!r}") from exc
    raise InputError(f"not a rational literal: {value!r} (floats are not accepted)")


def format_rational(x: Fraction):
    """Serialize a Fraction as a bare int or a "p/q" string."""
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


class QMatrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("entries", "nrows", "ncols")

    def __init__(self, entries: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(parse_rational(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise InputError("ragged rows in matrix")
            if ncols is not None and ncols != width:
                raise InputError(f"expected {ncols} columns, got {width}")
        else:
            if ncols is None:
                ncols = 0
            width = ncols
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "QMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, QMatrix)
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ncols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"QMatrix({self.nrows}x{self.ncols}: {body})"

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def transpose(self) -> "QMatrix":
        return QMatrix(
            [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def stack(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != other.ncols:
            raise InputError("cannot stack matrices with different column counts")
        return QMatrix(self.entries + other.entries, ncols=self.ncols)

    def scale_rows_to_int(self) -> list[list[int]]:
        """Clear denominators row by row (rank-preserving)."""
        out = []
        for row in self.entries:
            m = lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * m) for x in row])
        return out

    def rank(self) -> int:
        return _rank_int(self.scale_rows_to_int(), self.ncols)

    def nullspace_dim(self) -> int:
        return self.ncols - self.rank()

    def rref(self) -> "QMatrix":
        """The unique reduced row echelon form (pivots 1, pivot columns cleared)."""
        rows = [list(r) for r in self.entries]
        nr, nc = self.nrows, self.ncols
        r = 0
        for c in range(nc):
            # first nonzero entry in column order
            piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = rows[r][c]
            rows[r] = [x / inv for x in rows[r]]
            for i in range(nr):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            r += 1
            if r == nr:
                break
        return QMatrix(rows, ncols=nc)

    def pivot_columns(self) -> tuple[int, ...]:
        red = self.rref()
        pivots = []
        for row in red.entries:
            for j, x in enumerate(row):
                if x != 0:
                    pivots.append(j)
                    break
        return tuple(pivots)

    def nullspace_basis(self) -> list[tuple[Fraction, ...]]:
        """Basis of the right nullspace, in the canonical rref parameterization."""
        red = self.rref()
        pivots = list(red.pivot_columns())
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.ncols
            vec[f] = Fraction(1)
            for i, p in enumerate(pivots):
                vec[p] = -red.entries[i][f]
            basis.append(tuple(vec))
        return basis


def rank(m: QMatrix) -> int:
    """Dimension of the row space."""
    return m.rank()


def rref(m: QMatrix) -> QMatrix:
    """Reduced row echelon form; canonical form for subspace comparisons."""
    return m.rref()


def nullspace_dim(m: QMatrix) -> int:
    """cols - rank."""
    return m.nullspace_dim()


def _rank_int(rows: list[list[int]], ncols: int) -> int:
    """Rank of an integer matrix by exact division-free elimination.

    Rows with a zero leading entry are left untouched, which keeps the
    elimination cheap on sparse incidence-style matrices.  Pivot rows with a
    unit entry are preferred so that cross-multiplication does not grow
    entries; a gcd content reduction bounds growth in the remaining cases.
    """
    work = [r for r in rows if any(r)]
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            v = work[i][c]
            if v == 1 or v == -1:
                piv = i
                break
            if v != 0 and piv is None:
                piv = i
        if piv is None or work[piv][c] == 0:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        pv = prow[c]
        for i in range(r + 1, len(work)):
            row = work[i]
            lead = row[c]
            if lead == 0:
                continue
            if pv == 1:
                work[i] = [a - lead * b for a, b in zip(row, prow)]
            elif pv == -1:
                work[i] = [a + lead * b for a, b in zip(row, prow)]
            else:
                new = [a * pv - lead * b for a, b in zip(row, prow)]
                if max(map(abs, new)) > _REDUCE_THRESHOLD:
                    g = 0
                    for x in new:
                        g = gcd(g, x)
                        if g == 1:
                            break
                    if g > 1:
                        new = [x // g for x in new]
                work[i] = new
        r += 1
        if r == len(work):
            break
    return r
