"""Transforms between classical +-1 Hadamard matrices and their {0,1} form.

A Hadamard matrix whose first row and first column are all ones maps to an
(n-1) x (n-1) bit matrix by dropping the border, subtracting the all-ones
row and dividing by -2: interior -1 becomes 1 and +1 becomes 0.  The map
is invertible, and orthogonality on one side corresponds to the Gram
pattern on the other.
"""

from __future__ import annotations

from .core import BitMatrix, NotHadamard, NotNormalized, SignMatrix


def verify_sign_hadamard(h: SignMatrix) -> bool:
    """True iff the rows of h are pairwise orthogonal with |row|^2 = n.

    Row orthogonality alone is checked; the column condition follows for
    square matrices and is deliberately not re-tested here.
    """
    n = h.n
    for i in range(n):
        for j in range(i, n):
            s = sum(h.rows[i][k] * h.rows[j][k] for k in range(n))
            if s != (n if i == j else 0):
                return False
    return True


def normalize(h: SignMatrix) -> SignMatrix:
    """Negate rows, then columns, so the first row and column are all +1.

    The input must be a Hadamard matrix (NotHadamard otherwise); the output
    is an equivalent Hadamard matrix in normalized form.
    """
    if not verify_sign_hadamard(h):
        raise NotHadamard(f"{h.n}x{h.n} sign matrix is not Hadamard")
    rows = [list(r) if r[0] == 1 else [-e for e in r] for r in h.rows]
    for j in range(h.n):
        if rows[0][j] == -1:
            for row in rows:
                row[j] = -row[j]
    return SignMatrix.of(rows)


def zo_from_pm(h: SignMatrix) -> BitMatrix:
    """{0,1} form of a normalized sign matrix: drop the all-ones border and
    map interior -1 -> 1, +1 -> 0."""
    bad = any(e != 1 for e in h.rows[0]) or any(row[0] != 1 for row in h.rows)
    if bad:
        raise NotNormalized("first row and first column must be all +1")
    return BitMatrix.of(
        [[(1 - e) // 2 for e in row[1:]] for row in h.rows[1:]]
    )


def pm_from_zo(t: BitMatrix) -> SignMatrix:
    """Inverse of zo_from_pm: border of ones around interior 1 - 2*t[i][j]."""
    n = t.m + 1
    rows = [[1] * n]
    for row in t.rows:
        rows.append([1] + [1 - 2 * e for e in row])
    return SignMatrix.of(rows)
