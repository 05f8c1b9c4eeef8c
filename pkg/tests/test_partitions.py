"""Partition representation, enumeration and the counting sequences."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperwreath.partitions import (
    EMPTY,
    Partition,
    count_partitions,
    enumerate_partitions,
    seq_at,
    sequences_abc,
    weight,
)


def brute_partitions(total, max_part=None):
    """Independent oracle: partitions as non-increasing part tuples."""
    if max_part is None:
        max_part = total
    out = []

    def rec(remaining, cap, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for p in range(min(cap, remaining), 0, -1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(total, max_part, [])
    return out


def test_weight_examples():
    assert weight(EMPTY) == 0
    assert weight(Partition.from_parts([1, 1, 2])) == 4
    assert weight(Partition.from_parts([3, 3, 3])) == 9


def test_multiplicity_and_parts_round_trip():
    p = Partition([2, 1, 0, 3])
    assert p.parts() == [1, 1, 2, 4, 4, 4]
    assert p.multiplicity(1) == 2
    assert p.multiplicity(4) == 3
    assert p.multiplicity(17) == 0
    assert Partition.from_parts(p.parts()) == p


def test_degree_weight_invariants():
    p = Partition.from_parts([1, 2, 2, 5])
    assert p.weight == 10
    assert p.degree == 4
    assert p.weight >= p.degree
    assert (p.weight == 0) == p.is_empty


def test_trailing_zeros_are_trimmed():
    assert Partition([1, 0, 0]) == Partition([1])
    assert hash(Partition([1, 0])) == hash(Partition([1]))


def test_enumerate_trivial_cases():
    assert enumerate_partitions(0, 0, 5) == [EMPTY]
    assert enumerate_partitions(0, None, 0) == [EMPTY]
    assert enumerate_partitions(3, 7, 3) == []
    assert enumerate_partitions(-1, None, None) == []


def test_enumerate_examples():
    assert enumerate_partitions(3, 2, 2) == [Partition.from_parts([1, 2])]
    got = enumerate_partitions(4, None, 2)
    assert len(got) == 3
    assert {tuple(sorted(p.parts())) for p in got} == {(2, 2), (1, 1, 2), (1, 1, 1, 1)}


def test_enumerate_matches_brute_oracle():
    for total in range(0, 10):
        for max_part in range(0, total + 2):
            expected = {
                tuple(sorted(parts)) for parts in brute_partitions(total, max_part)
            }
            got = enumerate_partitions(total, None, max_part)
            assert len(got) == len(set(got)), "duplicates returned"
            assert {tuple(sorted(p.parts())) for p in got} == expected
            for p in got:
                assert p.weight == total
                assert p.max_part <= max_part or p.is_empty


def test_enumerate_respects_num_parts():
    for total in range(0, 9):
        for deg in range(0, total + 1):
            got = enumerate_partitions(total, deg, total)
            expected = [
                parts for parts in brute_partitions(total) if len(parts) == deg
            ]
            assert len(got) == len(expected)
            for p in got:
                assert p.degree == deg


def test_enumerate_order_is_lexicographic_on_multiplicities():
    got = enumerate_partitions(4, None, 2)
    assert [p.mults for p in got] == sorted(p.mults for p in got)


def test_sequence_examples():
    a, b, c = sequences_abc(5)
    assert a == [1, 1, 2, 3, 5, 7]
    assert b == [1, 2, 4, 7, 12, 19]
    assert c == [1, 3, 7, 14, 26, 45]


def test_counts_match_enumeration():
    a = count_partitions(12)
    for total in range(13):
        assert a[total] == len(enumerate_partitions(total, None, total))


def test_prefix_sum_relations():
    a, b, c = sequences_abc(20)
    assert all(b[i] >= b[i - 1] for i in range(1, 21))
    assert all(c[i] >= c[i - 1] for i in range(1, 21))
    assert all(c[i] - c[i - 1] == b[i] for i in range(1, 21))
    assert all(b[i] - b[i - 1] == a[i] for i in range(1, 21))


def test_negative_index_convention():
    _, b, c = sequences_abc(5)
    assert seq_at(b, -1) == 0
    assert seq_at(c, -3) == 0
    assert seq_at(b, 0) == 1


@settings(max_examples=200, deadline=None, derandomize=True)
@given(st.lists(st.integers(min_value=0, max_value=5), max_size=6))
def test_weight_recomputed_from_parts(mults):
    p = Partition(mults)
    assert p.weight == sum(p.parts())
    assert p.degree == len(p.parts())


@settings(max_examples=100, deadline=None, derandomize=True)
@given(
    st.lists(st.integers(min_value=0, max_value=4), max_size=5),
    st.lists(st.integers(min_value=0, max_value=4), max_size=5),
)
def test_combine_adds_weights(m1, m2):
    p, q = Partition(m1), Partition(m2)
    s = p.combine(q)
    assert s.weight == p.weight + q.weight
    assert s.degree == p.degree + q.degree


def test_remove_part():
    p = Partition.from_parts([1, 2, 2])
    assert p.remove_part(2) == Partition.from_parts([1, 2])
    with pytest.raises(ValueError):
        p.remove_part(3)
