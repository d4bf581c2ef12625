import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from oracles import partition_count_recurrence
from symkron.partitions import (
    add,
    column_multiset,
    conjugate,
    count_partitions_in_box,
    durfee,
    enumerate_partitions,
    format_partition,
    from_columns,
    is_self_conjugate,
    make_partition,
    parse_partition,
    partitions_of,
    rectangle,
    self_conjugate_partitions,
    sign_self_conjugate,
    weight,
)


def test_conjugate_examples():
    assert conjugate((5, 4, 4)) == (3, 3, 3, 3, 1)
    assert conjugate(()) == ()
    assert conjugate((1, 1, 1)) == (3,)


def test_add_examples():
    assert add((5, 4), (2, 1)) == (7, 5)
    assert add((3, 1), ()) == (3, 1)
    assert add((1, 1), (2,)) == (3, 1)


def test_sign_examples():
    assert sign_self_conjugate((2, 1)) == -1
    assert sign_self_conjugate((1,)) == 1
    assert sign_self_conjugate((3, 1, 1)) == 1
    with pytest.raises(ValueError):
        sign_self_conjugate((2,))


def test_durfee_examples():
    assert durfee((4, 3, 1)) == 2
    assert durfee(()) == 0
    assert durfee(rectangle(5, 5)) == 5


def test_enumeration_examples():
    assert list(enumerate_partitions(4, 2)) == [(4,), (3, 1), (2, 2)]
    assert list(enumerate_partitions(0, 3)) == [()]
    assert list(enumerate_partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert list(enumerate_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_column_multiset_examples():
    assert column_multiset((2, 2, 1, 1)) == (4, 2)
    assert column_multiset((5,)) == (1,) * 5
    assert column_multiset((3, 1, 1)) == (3, 1, 1)


def test_box_count_examples():
    assert count_partitions_in_box(2, 2, 2) == 2
    assert count_partitions_in_box(0, 2, 2) == 1
    assert count_partitions_in_box(3, 2, 2) == 1


def test_partition_function_matches_pentagonal_recurrence():
    assert len(partitions_of(10)) == 42 == partition_count_recurrence(10)
    for n in range(0, 25):
        assert len(partitions_of(n)) == partition_count_recurrence(n)


@given(partitions(0, 20))
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert weight(conjugate(lam)) == weight(lam)
    if lam:
        assert len(conjugate(lam)) == lam[0]
    assert durfee(conjugate(lam)) == durfee(lam)


@given(partitions(0, 12), partitions(0, 12), partitions(0, 12))
def test_add_monoid(a, b, c):
    assert add(a, b) == add(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert add(a, ()) == a
    assert weight(add(a, b)) == weight(a) + weight(b)


@given(partitions(0, 20))
def test_columns_reassemble(lam):
    assert from_columns(column_multiset(lam)) == lam


@given(st.integers(1, 6), st.data())
def test_box_complement_symmetry(r, data):
    b = data.draw(st.integers(0, r * r))
    assert count_partitions_in_box(b, r, r) == count_partitions_in_box(r * r - b, r, r)


@given(st.integers(0, 14), st.integers(1, 5), st.integers(1, 5))
def test_box_count_matches_enumeration(b, rows, cols):
    assert count_partitions_in_box(b, rows, cols) == sum(1 for _ in enumerate_partitions(b, rows, cols))


@given(st.integers(0, 30), st.integers(1, 10))
def test_enumeration_unique_and_bounded(n, k):
    parts = list(enumerate_partitions(n, k))
    assert len(parts) == len(set(parts))
    assert all(weight(p) == n and len(p) <= k for p in parts)
    assert parts == sorted(parts, reverse=True)


@given(st.integers(1, 30))
def test_self_conjugate_enumeration(n):
    found = self_conjugate_partitions(n)
    assert found == [p for p in partitions_of(n) if is_self_conjugate(p)]
    for p in found:
        assert (weight(p) - durfee(p)) % 2 == 0


@pytest.mark.parametrize(
    "text, expected",
    [("5,4,4", (5, 4, 4)), ("1^8", (1,) * 8), ("7,2,1^5", (7, 2, 1, 1, 1, 1, 1)), ("()", ()), ("", ()), (" 3, 1 ", (3, 1))],
)
def test_parse(text, expected):
    assert parse_partition(text) == expected


@pytest.mark.parametrize("text", ["3,4", "a", "2,-1", "1^", "1^1000001"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_partition(text)


@given(partitions(0, 20))
def test_format_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam


def test_format_compresses_long_runs():
    assert format_partition((2, 1, 1, 1, 1, 1, 1, 1)) == "2,1^7"
    assert format_partition((3, 3, 3)) == "3,3,3"


def test_make_partition_trims_and_validates():
    assert make_partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        make_partition([1, 2])
