"""Depth-first generation of Hadamard matrices in group-list form.

Rows 1 and 2 are fixed by the canonical column layout; every later row is
one solution of its row system, turned into child groups of the previous
row.  A matrix is emitted only when all m rows exist.  The search is
exhaustive over the canonical representatives with the fixed first two
rows, so the emitted set is complete for that normal form.
"""

from __future__ import annotations

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from . import gram
from .core import InternalInvariantViolation, SearchParams
from .partition import GroupList, PartitionMatrix, decode_matrix
from .solver import build_system, enumerate_solutions

log = logging.getLogger(__name__)

# Above this order the per-matrix verification defaults to off; emitted
# matrices are correct by construction and the check is pure paranoia.
VERIFY_DEFAULT_MAX_ORDER = 15


@dataclass(frozen=True)
class GenConfig:
    """Generation settings.

    ``limit`` cuts the stream after exactly that many matrices.
    ``verify_each`` None means the default policy: verify every emitted
    matrix for m <= 15, skip above.  ``progress`` logs a row-entry event
    for every extension step on the package logger (never on the output
    stream).
    """

    params: SearchParams
    limit: int | None = None
    verify_each: bool | None = None
    progress: bool = False

    def __post_init__(self):
        if self.limit is not None and self.limit < 1:
            raise ValueError(f"limit must be >= 1, got {self.limit}")

    @property
    def verify_resolved(self) -> bool:
        if self.verify_each is None:
            return self.params.m <= VERIFY_DEFAULT_MAX_ORDER
        return self.verify_each


def initial_rows(params: SearchParams) -> tuple[GroupList, GroupList]:
    """The fixed first two rows for order m.

    Row 1 is 2q ones then 2q-1 zeros; row 2 splits both blocks in half
    (q ones first in each), with the trailing zero group dropped when
    q = 1 since it would be empty.
    """
    q = params.q
    row1 = GroupList(1, ((0, 2 * q), (1, 2 * q - 1)))
    groups2 = [(0, q), (1, q), (2, q)]
    if q > 1:
        groups2.append((3, q - 1))
    row2 = GroupList(2, tuple(groups2))
    return row1, row2


def child_row(parent: GroupList, k: tuple[int, ...]) -> GroupList:
    """Refine ``parent`` by a solution vector: group s splits into
    (2l_s, k_s) and (2l_s+1, count_s - k_s), zero counts omitted."""
    groups: list[tuple[int, int]] = []
    for (label, count), ones in zip(parent.groups, k):
        if ones:
            groups.append((2 * label, ones))
        if count - ones:
            groups.append((2 * label + 1, count - ones))
    return GroupList(parent.depth + 1, tuple(groups))


def iter_matrices(
    config: GenConfig, deadline: float | None = None
) -> Iterator[PartitionMatrix]:
    """Stream complete matrices in depth-first order.

    Deterministic: row candidates follow the solver's enumeration order at
    every depth.  With verify_each on, every matrix is decoded and checked
    before being yielded; a failure aborts with InternalInvariantViolation.

    ``deadline`` is a time.monotonic() timestamp; the search checks it at
    every extension step and stops cleanly once past it, so wall-clock
    budgets hold even through long stretches between emissions.  The
    emitted prefix is still deterministic up to where the clock cuts.
    """
    params = config.params
    m = params.m
    verify = config.verify_resolved
    progress = config.progress
    row1, row2 = initial_rows(params)
    rows: list[GroupList] = [row1, row2]
    emitted = 0

    def extend(i: int) -> Iterator[PartitionMatrix]:
        if progress:
            log.info("i=%d", i)
        if deadline is not None and time.monotonic() >= deadline:
            return
        system = build_system(rows[-1], i, params)
        for k in enumerate_solutions(system):
            rows.append(child_row(rows[-1], k))
            if i == m:
                yield PartitionMatrix(m, tuple(rows))
            else:
                yield from extend(i + 1)
            rows.pop()
            if deadline is not None and time.monotonic() >= deadline:
                return

    for pm in extend(3):
        if verify and not gram.is_hadamard_zo(decode_matrix(pm)):
            raise InternalInvariantViolation(
                f"generated matrix {emitted + 1} failed verification"
            )
        yield pm
        emitted += 1
        if config.limit is not None and emitted >= config.limit:
            return


def generate(config: GenConfig, sink: Callable[[PartitionMatrix], None]) -> int:
    """Run the search, feeding every matrix to ``sink``; returns the count."""
    count = 0
    for pm in iter_matrices(config):
        sink(pm)
        count += 1
    return count


def generate_parallel(
    config: GenConfig,
    sink: Callable[[PartitionMatrix], None],
    threads: int,
) -> int:
    """Partition the search at depth 3, one task per row-3 solution.

    Emits the same multiset of matrices as the sequential search with
    unspecified interleaving; the sink is called under a lock so any
    callable is safe.  Counts are aggregated exactly and ``limit`` still
    cuts after exactly that many emissions.
    """
    params = config.params
    row1, row2 = initial_rows(params)
    branch_solutions = list(enumerate_solutions(build_system(row2, 3, params)))

    lock = threading.Lock()
    state = {"count": 0, "stop": False}

    def emit(pm: PartitionMatrix) -> bool:
        with lock:
            if state["stop"]:
                return False
            sink(pm)
            state["count"] += 1
            if config.limit is not None and state["count"] >= config.limit:
                state["stop"] = True
            return not state["stop"]

    verify = config.verify_resolved
    m = params.m

    def run_branch(k3: tuple[int, ...]) -> None:
        rows = [row1, row2, child_row(row2, k3)]

        def extend(i: int) -> Iterator[PartitionMatrix]:
            system = build_system(rows[-1], i, params)
            for k in enumerate_solutions(system):
                rows.append(child_row(rows[-1], k))
                if i == m:
                    yield PartitionMatrix(m, tuple(rows))
                else:
                    yield from extend(i + 1)
                rows.pop()

        if m == 3:
            stream: Iterator[PartitionMatrix] = iter(
                [PartitionMatrix(m, tuple(rows))]
            )
        else:
            stream = extend(4)
        for pm in stream:
            if verify and not gram.is_hadamard_zo(decode_matrix(pm)):
                raise InternalInvariantViolation("generated matrix failed verification")
            if not emit(pm):
                return

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        futures = [pool.submit(run_branch, k3) for k3 in branch_solutions]
        for fut in futures:
            fut.result()
    return state["count"]
