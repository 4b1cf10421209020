import pytest

from hadamard01 import (
    BitMatrix,
    GenConfig,
    GroupList,
    InternalInvariantViolation,
    decode_matrix,
    generate,
    initial_rows,
    is_hadamard_zo,
    iter_matrices,
    validate_order,
)
from hadamard01.generator import child_row, generate_parallel


def test_initial_rows_m15(params15):
    row1, row2 = initial_rows(params15)
    assert row1 == GroupList(1, ((0, 8), (1, 7)))
    assert row2 == GroupList(2, ((0, 4), (1, 4), (2, 4), (3, 3)))


def test_initial_rows_m3():
    row1, row2 = initial_rows(validate_order(3))
    assert row1 == GroupList(1, ((0, 2), (1, 1)))
    assert row2 == GroupList(2, ((0, 1), (1, 1), (2, 1)))


def test_initial_rows_m7():
    row1, row2 = initial_rows(validate_order(7))
    assert row1 == GroupList(1, ((0, 4), (1, 3)))
    assert row2 == GroupList(2, ((0, 2), (1, 2), (2, 2), (3, 1)))


def test_child_row_splits_every_group():
    parent = GroupList(2, ((0, 2), (1, 2), (2, 2), (3, 1)))
    assert child_row(parent, (1, 1, 1, 1)) == GroupList(
        3, ((0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1))
    )


def test_child_row_drops_empty_children():
    parent = GroupList(2, ((0, 2), (1, 2), (2, 2), (3, 1)))
    assert child_row(parent, (0, 2, 2, 0)) == GroupList(
        3, ((1, 2), (2, 2), (4, 2), (7, 1))
    )


def test_child_row_m3():
    parent = GroupList(2, ((0, 1), (1, 1), (2, 1)))
    assert child_row(parent, (0, 1, 1)) == GroupList(3, ((1, 1), (2, 1), (4, 1)))


def test_m3_generates_the_unique_matrix():
    mats = list(iter_matrices(GenConfig(validate_order(3))))
    assert len(mats) == 1
    assert decode_matrix(mats[0]) == BitMatrix.of(
        [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
    )


def test_m7_count_and_soundness(m7_matrices):
    assert len(m7_matrices) == 30
    for pm in m7_matrices:
        assert is_hadamard_zo(decode_matrix(pm))


def test_m7_no_duplicates(m7_matrices):
    assert len(set(m7_matrices)) == len(m7_matrices)


def test_m7_rows_start_with_initial_rows(m7_matrices):
    row1, row2 = initial_rows(validate_order(7))
    for pm in m7_matrices:
        assert pm.rows[0] == row1
        assert pm.rows[1] == row2


def test_runs_are_deterministic(m7_matrices):
    again = tuple(iter_matrices(GenConfig(validate_order(7))))
    assert again == m7_matrices


def test_soundness_holds_without_verify_flag():
    mats = list(iter_matrices(GenConfig(validate_order(7), verify_each=False)))
    assert all(is_hadamard_zo(decode_matrix(pm)) for pm in mats)


def test_limit_cuts_the_stream(m7_matrices):
    limited = list(iter_matrices(GenConfig(validate_order(7), limit=10)))
    assert len(limited) == 10
    assert tuple(limited) == m7_matrices[:10]


def test_limit_must_be_positive():
    with pytest.raises(ValueError):
        GenConfig(validate_order(7), limit=0)


def test_verify_policy_defaults():
    assert GenConfig(validate_order(15)).verify_resolved
    assert not GenConfig(validate_order(19)).verify_resolved
    assert GenConfig(validate_order(19), verify_each=True).verify_resolved


def test_generate_counts_and_feeds_sink(m7_matrices):
    seen = []
    count = generate(GenConfig(validate_order(7)), seen.append)
    assert count == 30
    assert tuple(seen) == m7_matrices


def test_verification_failure_aborts(monkeypatch):
    import hadamard01.gram as gram_module

    monkeypatch.setattr(gram_module, "is_hadamard_zo", lambda t: False)
    with pytest.raises(InternalInvariantViolation):
        list(iter_matrices(GenConfig(validate_order(7), verify_each=True)))


def test_progress_logs_row_entries(caplog):
    import logging

    with caplog.at_level(logging.INFO, logger="hadamard01.generator"):
        list(iter_matrices(GenConfig(validate_order(7), progress=True)))
    assert "i=3" in caplog.text
    assert "i=7" in caplog.text


@pytest.mark.parametrize("threads", [2, 4])
def test_parallel_same_multiset(threads, m7_matrices):
    collected = []
    count = generate_parallel(
        GenConfig(validate_order(7)), collected.append, threads
    )
    assert count == 30
    assert sorted(collected) == sorted(m7_matrices)


def test_parallel_respects_limit():
    collected = []
    count = generate_parallel(
        GenConfig(validate_order(7), limit=12), collected.append, 3
    )
    assert count == 12 and len(collected) == 12


def test_parallel_m3():
    collected = []
    assert generate_parallel(GenConfig(validate_order(3)), collected.append, 2) == 1
    assert len(collected) == 1


def test_deadline_stops_search_promptly():
    import time

    start = time.monotonic()
    mats = list(
        iter_matrices(
            GenConfig(validate_order(19), verify_each=False),
            deadline=time.monotonic() + 0.2,
        )
    )
    assert time.monotonic() - start < 2.0
    # whatever was emitted before the cut is a valid prefix
    for pm in mats:
        assert is_hadamard_zo(decode_matrix(pm))


def test_expired_deadline_yields_nothing():
    import time

    assert (
        list(
            iter_matrices(
                GenConfig(validate_order(7)), deadline=time.monotonic() - 1
            )
        )
        == []
    )
