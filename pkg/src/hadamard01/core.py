"""Shared domain types, errors, and elementary predicates.

Everything in this package is exact integer arithmetic: matrices over
{0,1} or {-1,+1}, scalar products, and small linear systems.  No floats
anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class HadamardError(Exception):
    """Base class for all errors raised by this package."""


class InvalidOrder(HadamardError):
    """The requested order m is not admissible (m >= 3 and m = 3 mod 4)."""


class LengthMismatch(HadamardError):
    """Two vectors passed to a scalar product differ in length."""


class NotHadamard(HadamardError):
    """A sign matrix expected to be Hadamard fails the orthogonality check."""


class NotNormalized(HadamardError):
    """A sign matrix whose first row/column should be all ones is not."""


class NonCanonicalRow(HadamardError):
    """A bit row is not ones-first within the spans of its parent groups.

    Carries ``row_index`` (1-based) when raised while encoding a whole
    matrix, else None.
    """

    def __init__(self, message: str, row_index: int | None = None):
        super().__init__(message)
        self.row_index = row_index


class OrderTooLarge(HadamardError):
    """A brute-force enumeration was requested beyond its cost cap."""


class InternalInvariantViolation(HadamardError):
    """The generator emitted a matrix that failed verification (a bug)."""


class FormatError(HadamardError):
    """A text record could not be parsed.  Carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class BitMatrix:
    """Square matrix over {0,1}: a candidate or confirmed Hadamard matrix
    in {0,1} form (side m)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = len(self.rows)
        for row in self.rows:
            if len(row) != m:
                raise ValueError(f"matrix is not square: side {m}, row of length {len(row)}")
            for e in row:
                if e != 0 and e != 1:
                    raise ValueError(f"entry {e!r} is not a bit")

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def m(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "BitMatrix":
        return BitMatrix(tuple(zip(*self.rows))) if self.rows else self


@dataclass(frozen=True)
class SignMatrix:
    """Square matrix over {-1,+1}: a classical Hadamard matrix candidate
    (side n)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: side {n}, row of length {len(row)}")
            for e in row:
                if e != 1 and e != -1:
                    raise ValueError(f"entry {e!r} is not a sign")

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "SignMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class SearchParams:
    """Derived search constants for an admissible order m.

    q = (m+1)/4 is the quarter, a = q the pairwise row overlap, b = 2q the
    row weight, and n = m+1 the side of the corresponding +-1 matrix.
    """

    m: int
    q: int
    a: int
    b: int
    n: int

    def __post_init__(self):
        assert self.m % 4 == 3 and self.m >= 3
        assert self.q == (self.m + 1) // 4
        assert self.a == self.q and self.b == 2 * self.q and self.n == self.m + 1


def validate_order(m: int) -> SearchParams:
    """Check that m is an admissible order and derive the search constants.

    Raises InvalidOrder unless m is an integer >= 3 with m = 3 mod 4.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 3 or m % 4 != 3:
        raise InvalidOrder(f"m={m} is incorrect size for Hadamard matrices")
    q = (m + 1) // 4
    return SearchParams(m=m, q=q, a=q, b=2 * q, n=m + 1)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    """Standard scalar product of two equal-length integer vectors."""
    if len(u) != len(v):
        raise LengthMismatch(f"vector lengths differ: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def pack_row(bits: Sequence[int]) -> int:
    """Pack a bit row into an int mask, leftmost bit most significant.

    With this convention dot(u, v) == (pack_row(u) & pack_row(v)).bit_count()
    for bit rows, which the hot verification paths rely on.
    """
    mask = 0
    for b in bits:
        mask = (mask << 1) | b
    return mask
