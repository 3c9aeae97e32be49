import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from norbit.partitions import (
    Partition,
    PartitionError,
    add_box_largest,
    brute_force_collapse,
    collapse,
    dominates,
    is_valid,
    parity_ok,
    partitions_of,
    remove_box_largest,
    transpose,
    type_size,
)

import oracles


def P(*parts):
    return Partition(parts)


partitions = st.lists(st.integers(1, 7), max_size=8).map(Partition.from_unsorted)


class TestPartition:
    def test_zero_parts_dropped(self):
        assert Partition([3, 1, 0, 0]) == P(3, 1)

    def test_empty(self):
        assert Partition().size == 0
        assert len(Partition()) == 0

    @pytest.mark.parametrize("bad", [[1, 2], [-1], [1.5]])
    def test_rejects(self, bad):
        with pytest.raises(PartitionError):
            Partition(bad)

    @pytest.mark.parametrize(
        "text,parts",
        [("3,1,1", (3, 1, 1)), ("1^4", (1, 1, 1, 1)), ("()", ()), ("(4,2^2)", (4, 2, 2))],
    )
    def test_parse(self, text, parts):
        assert Partition.parse(text).parts == parts

    def test_parse_garbage(self):
        with pytest.raises(PartitionError):
            Partition.parse("3,,1")

    def test_hashable(self):
        assert len({P(2, 1), Partition([2, 1]), P(3)}) == 2


class TestTranspose:
    @pytest.mark.parametrize(
        "p,t",
        [((5,), (1, 1, 1, 1, 1)), ((3, 1, 1), (3, 1, 1)), ((4, 2), (2, 2, 1, 1)), ((), ())],
    )
    def test_examples(self, p, t):
        assert transpose(p) == Partition(t)

    @given(partitions)
    def test_involution(self, p):
        assert transpose(transpose(p)) == p

    @given(partitions)
    def test_matches_reference(self, p):
        assert transpose(p).parts == oracles.transpose(p.parts)


class TestDominance:
    @pytest.mark.parametrize(
        "p,q,expected",
        [((5,), (3, 1, 1), True), ((3, 1, 1), (2, 2, 1), True), ((2, 2, 2), (3, 1, 1, 1), False)],
    )
    def test_examples(self, p, q, expected):
        assert dominates(p, q) is expected

    def test_size_mismatch(self):
        with pytest.raises(PartitionError):
            dominates((3,), (2,))

    @settings(max_examples=40)
    @given(partitions.filter(lambda p: p.size <= 10))
    def test_transpose_reverses(self, p):
        for q in partitions_of(p.size):
            assert dominates(p, q) == dominates(transpose(q), transpose(p))


class TestValidity:
    @pytest.mark.parametrize(
        "t,n,p,ok",
        [
            ("B", 2, (3, 1, 1), True),
            ("C", 2, (2, 1, 1), True),
            ("B", 2, (3, 2), False),
            ("C", 2, (3, 1), False),
            ("D", 2, (2, 2), True),
            ("D", 3, (3, 2, 1), False),
            ("A", 2, (2, 1), True),
            ("B", 0, (1,), True),
            ("C", 0, (), True),
        ],
    )
    def test_examples(self, t, n, p, ok):
        assert is_valid(t, n, p) is ok

    def test_type_sizes(self):
        assert [type_size(t, 3) for t in "ABCD"] == [4, 7, 6, 6]

    @pytest.mark.parametrize("t", "BCD")
    def test_parity_matches_reference(self, t):
        for size in range(9):
            for p in partitions_of(size):
                assert parity_ok(t, p) == oracles.valid_for(t, p.parts)


class TestCollapse:
    @pytest.mark.parametrize(
        "t,p,q",
        [("B", (3, 2), (3, 1, 1)), ("C", (3, 3, 3, 1), (3, 3, 2, 2)), ("B", (3, 1, 1), (3, 1, 1))],
    )
    def test_examples(self, t, p, q):
        assert collapse(t, p) == Partition(q)

    @pytest.mark.parametrize("t", "BCD")
    def test_against_enumeration(self, t):
        # the reference enumerates every valid partition below p
        for size in range(1, 9):
            if (t == "B") != (size % 2 == 1):
                continue
            for p in partitions_of(size):
                assert collapse(t, p).parts == oracles.reference_collapse(t, p.parts)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from("BCD"), partitions)
    def test_properties(self, t, p):
        if (t == "B") != (p.size % 2 == 1):
            p = add_box_largest(p) if p.size else Partition((1,))
        g = collapse(t, p)
        assert parity_ok(t, g)
        assert dominates(p, g)
        assert collapse(t, g) == g
        assert g == brute_force_collapse(t, p)


class TestBoxes:
    def test_examples(self):
        assert remove_box_largest((3, 2, 2)) == P(2, 2, 2)
        assert add_box_largest((2, 2)) == P(3, 2)
        assert remove_box_largest((1,)) == Partition()

    @given(partitions.filter(lambda p: p.size > 0))
    def test_inverse(self, p):
        assert remove_box_largest(add_box_largest(p)) == p


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (5, 7), (8, 22), (12, 77)])
def test_partition_counts(n, count):
    ps = list(partitions_of(n))
    assert len(ps) == count == len(set(ps))
