"""Group-list (partition-list) encoding of bit-matrix rows.

Row i of an m x m bit matrix is stored as an ordered list of (label, count)
pairs.  Labels are refinement histories: a group with label l at depth d
splits at depth d+1 into the child 2l (columns carrying 1 in the new row)
and 2l+1 (columns carrying 0); even labels therefore mean ones and odd
labels mean zeros, and bit (d - j) of a depth-d label is 0 exactly when the
group's columns carry a 1 in row j.  Zero-count groups are never stored.

The encoding assumes the canonical column layout: within each span covered
by a parent group, all ones precede all zeros.  encode_row rejects rows
that violate this; canonicalize() reorders columns to repair it.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import BitMatrix, NonCanonicalRow

Group = tuple[int, int]  # (label, count), count >= 1


class GroupList(NamedTuple):
    """One row at refinement depth ``depth`` as ordered (label, count) pairs."""

    depth: int
    groups: tuple[Group, ...]


class PartitionMatrix(NamedTuple):
    """A full m-row matrix in group-list form; row i has depth i."""

    m: int
    rows: tuple[GroupList, ...]


def root_group_list(m: int) -> GroupList:
    """The virtual depth-0 root: all m columns in a single group 0."""
    return GroupList(0, ((0, m),))


def decode_row(g: GroupList) -> tuple[int, ...]:
    """Expand a group list into an explicit bit row (even label -> ones)."""
    bits: list[int] = []
    for label, count in g.groups:
        bits.extend((1 if label % 2 == 0 else 0,) * count)
    return tuple(bits)


def encode_row(bits: tuple[int, ...], parent: GroupList) -> GroupList:
    """Refine ``parent`` by one explicit bit row.

    Each parent group (l, c) covers c consecutive columns; with k ones in
    that span the children are (2l, k) and (2l+1, c-k), zero counts
    omitted.  Raises NonCanonicalRow unless the ones in every span are
    contiguous and first (otherwise the counts would lose positions).
    """
    groups: list[Group] = []
    pos = 0
    for label, count in parent.groups:
        span = bits[pos:pos + count]
        k = sum(span)
        if not all(span[:k]):
            raise NonCanonicalRow(
                f"ones are not contiguous-first within columns {pos}..{pos + count - 1}"
            )
        if k > 0:
            groups.append((2 * label, k))
        if count - k > 0:
            groups.append((2 * label + 1, count - k))
        pos += count
    if pos != len(bits):
        raise NonCanonicalRow(
            f"row length {len(bits)} does not match parent span total {pos}"
        )
    return GroupList(parent.depth + 1, tuple(groups))


def encode_matrix(t: BitMatrix) -> PartitionMatrix:
    """Encode every row of a canonical bit matrix, refining from the root."""
    parent = root_group_list(t.m)
    encoded: list[GroupList] = []
    for i, row in enumerate(t.rows, start=1):
        try:
            parent = encode_row(row, parent)
        except NonCanonicalRow as exc:
            raise NonCanonicalRow(f"row {i}: {exc}", row_index=i) from exc
        encoded.append(parent)
    return PartitionMatrix(t.m, tuple(encoded))


def decode_matrix(p: PartitionMatrix) -> BitMatrix:
    """Expand every row of a partition matrix into explicit bits."""
    return BitMatrix(tuple(decode_row(g) for g in p.rows))


def canonicalize(t: BitMatrix) -> BitMatrix:
    """Reorder columns into the canonical ones-first layout.

    Stable sort on the column bit histories read top to bottom, 1 before 0;
    columns with identical histories keep their input order.  The result
    encodes without NonCanonicalRow and decodes back to itself.
    """
    m = t.m
    order = sorted(range(m), key=lambda c: tuple(1 - row[c] for row in t.rows))
    return BitMatrix(tuple(tuple(row[c] for c in order) for row in t.rows))


def validate_group_list(g: GroupList, m: int) -> None:
    """Check the GroupList invariants; raises ValueError on violation."""
    if g.depth < 1:
        raise ValueError(f"depth must be >= 1, got {g.depth}")
    prev = -1
    total = 0
    for label, count in g.groups:
        if count < 1:
            raise ValueError(f"group ({label},{count}) has nonpositive count")
        if label <= prev:
            raise ValueError(f"labels not strictly increasing at {label}")
        if not 0 <= label < (1 << g.depth):
            raise ValueError(f"label {label} out of range for depth {g.depth}")
        prev = label
        total += count
    if total != m:
        raise ValueError(f"counts sum to {total}, expected {m}")


def validate_partition_matrix(p: PartitionMatrix) -> None:
    """Check all PartitionMatrix invariants including refinement consistency."""
    if len(p.rows) != p.m:
        raise ValueError(f"expected {p.m} rows, got {len(p.rows)}")
    parent = root_group_list(p.m)
    for i, g in enumerate(p.rows, start=1):
        if g.depth != i:
            raise ValueError(f"row {i} has depth {g.depth}")
        validate_group_list(g, p.m)
        remaining = dict(parent.groups)
        for label, count in g.groups:
            pl = label // 2
            if pl not in remaining:
                raise ValueError(
                    f"row {i}: group {label} has no parent group {pl} in row {i - 1}"
                )
            remaining[pl] -= count
            if remaining[pl] < 0:
                raise ValueError(
                    f"row {i}: children of group {pl} exceed its count"
                )
        leftover = {pl: c for pl, c in remaining.items() if c != 0}
        if leftover:
            raise ValueError(
                f"row {i}: children do not cover parent groups {sorted(leftover)}"
            )
        parent = g
