import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from norbit.orbits import (
    OrbitDescriptor,
    OrbitError,
    bv_dual,
    closure_leq,
    complete_to_triangular,
    component_group_order,
    dynkin_h,
    enumerate_orbits,
    hasse_edges,
    induce,
    induce_general,
    inducing_presentations,
    is_cuspidal,
    is_even,
    is_special,
    is_stably_trivial,
    is_triangular,
    orbit,
    parse_orbit,
    principal_orbit,
    richardson_presentations,
    simple_root_labels,
    triangular_levi,
    triangular_partition,
    triangular_rank,
    zero_orbit,
)
from norbit.partitions import Partition, partitions_of, transpose


def O(t, *parts, label=None):
    p = Partition(parts)
    n = {"A": p.size - 1, "B": (p.size - 1) // 2}.get(t, p.size // 2)
    return orbit(t, n, p, label)


ranks = st.sampled_from([("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4)])


class TestDescriptor:
    def test_label_required_for_very_even(self):
        with pytest.raises(OrbitError):
            orbit("D", 4, (4, 4))
        with pytest.raises(OrbitError):
            orbit("D", 3, (3, 3), "I")

    def test_rejects_wrong_parity(self):
        with pytest.raises(OrbitError):
            orbit("B", 4, (4, 4))

    def test_json_round_trip(self):
        for o in enumerate_orbits("D", 4):
            assert OrbitDescriptor.from_json(o.to_json()) == o

    def test_str_and_parse(self):
        assert str(O("B", 3, 1, 1)) == "B2(3,1,1)"
        assert parse_orbit("d", "4", "4,4", "II") == O("D", 4, 4, label="II")

    def test_special_cases(self):
        assert zero_orbit("C", 2) == O("C", 1, 1, 1, 1)
        assert principal_orbit("D", 3) == O("D", 5, 1)
        assert principal_orbit("A", 2) == O("A", 3)


class TestEnumeration:
    @pytest.mark.parametrize(
        "t,n,count",
        [("B", 2, 4), ("C", 2, 4), ("D", 2, 4), ("B", 3, 7), ("C", 3, 8), ("D", 4, 12), ("A", 3, 5), ("B", 4, 13), ("C", 4, 14)],
    )
    def test_counts(self, t, n, count):
        assert len(enumerate_orbits(t, n)) == count

    def test_b2_and_c2(self):
        assert [o.partition.parts for o in enumerate_orbits("B", 2)] == [(5,), (3, 1, 1), (2, 2, 1), (1,) * 5]
        assert [o.partition.parts for o in enumerate_orbits("C", 2)] == [(4,), (2, 2), (2, 1, 1), (1,) * 4]

    def test_d2_very_even_twice(self):
        labels = [o.label for o in enumerate_orbits("D", 2) if o.partition == (2, 2)]
        assert labels == ["I", "II"]

    @pytest.mark.parametrize("t,n", [("B", 2), ("C", 2)])
    def test_hasse_chain(self, t, n):
        os = enumerate_orbits(t, n)
        assert hasse_edges(t, n) == list(zip(os, os[1:]))

    def test_hasse_a1(self):
        assert hasse_edges("A", 1) == [(O("A", 2), O("A", 1, 1))]

    def test_very_even_pair_incomparable(self):
        a, b = O("D", 4, 4, label="I"), O("D", 4, 4, label="II")
        assert not closure_leq(a, b) and not closure_leq(b, a)
        assert closure_leq(O("D", 3, 3, 1, 1), a)

    @settings(max_examples=20, deadline=None)
    @given(ranks)
    def test_partial_order(self, tn):
        os = enumerate_orbits(*tn)
        for a in os:
            assert closure_leq(a, a)
            for b in os:
                if a != b and closure_leq(a, b):
                    assert not closure_leq(b, a)


class TestSpecialAndDual:
    @pytest.mark.parametrize(
        "o,special",
        [(O("B", 3, 1, 1), True), (O("B", 2, 2, 1), False), (O("C", 2, 1, 1), False), (O("D", 3, 2, 2, 1), False), (O("C", 2, 2), True)],
    )
    def test_special(self, o, special):
        assert is_special(o) is special

    @pytest.mark.parametrize(
        "src,dst",
        [
            (O("B", 3, 1, 1), O("C", 2, 2)),
            (O("B", 3, 2, 2), O("C", 3, 3)),
            (O("C", 2, 2), O("B", 3, 1, 1)),
            (O("B", 5), O("C", 1, 1, 1, 1)),
            (O("A", 3, 1), O("A", 2, 1, 1)),
        ],
    )
    def test_dual(self, src, dst):
        assert bv_dual(src) == dst

    def test_very_even_labels(self):
        # rank 4: labels kept
        assert bv_dual(O("D", 4, 4, label="I")) == O("D", 2, 2, 2, 2, label="I")
        assert bv_dual(O("D", 4, 4, label="II")) == O("D", 2, 2, 2, 2, label="II")
        # rank 2: labels swapped
        assert bv_dual(O("D", 2, 2, label="I")) == O("D", 2, 2, label="II")

    @pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("B", 4), ("C", 4), ("D", 5)])
    def test_dual_lands_on_specials(self, t, n):
        for o in enumerate_orbits(t, n):
            d = bv_dual(o)
            assert is_special(d)
            if is_special(o):
                assert bv_dual(d) == o

    def test_type_a_all_special(self):
        assert all(is_special(o) for o in enumerate_orbits("A", 4))

    def test_d3_matches_a3(self):
        # so(6) and sl(4) share their orbit posets; all orbits are special in both
        assert all(is_special(o) for o in enumerate_orbits("D", 3))


class TestDynkin:
    @pytest.mark.parametrize(
        "o,h",
        [
            (O("C", 2, 2), (1, 1)),
            (O("B", 3, 1, 1), (2, 0)),
            (O("C", 2, 1, 1), (1, 0)),
            (O("C", 1, 1, 1, 1), (0, 0)),
            (O("D", 4, 4, label="II"), (3, 3, 1, -1)),
            (O("A", 2, 1), (1, 0, -1)),
        ],
    )
    def test_h(self, o, h):
        assert dynkin_h(o) == h

    def test_labels_and_evenness(self):
        assert simple_root_labels("C", (1, 1)) == (0, 2)
        assert is_even(O("C", 2, 2))
        assert not is_even(O("C", 2, 1, 1))

    @pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
    def test_principal_is_even(self, t, n):
        o = principal_orbit(t, n)
        assert set(simple_root_labels(t, dynkin_h(o))) == {2}

    @settings(max_examples=20, deadline=None)
    @given(ranks)
    def test_labels_nonnegative(self, tn):
        for o in enumerate_orbits(*tn):
            assert all(x >= 0 for x in simple_root_labels(o.type, dynkin_h(o)))


class TestComponentGroup:
    @pytest.mark.parametrize(
        "o,order",
        [(O("B", 3, 1, 1), 2), (O("C", 2, 2), 2), (O("B", 5), 1), (O("A", 2, 1), 1), (O("D", 5, 3), 2), (O("D", 4, 4, label="I"), 1), (O("C", 4, 2), 4)],
    )
    def test_order(self, o, order):
        assert component_group_order(o) == order


class TestStablyTrivial:
    @pytest.mark.parametrize(
        "o,ok",
        [(O("B", 3, 1, 1), True), (O("B", 3, 3, 1), False), (O("C", 2, 2), True), (O("C", 2, 1, 1), False)],
    )
    def test_examples(self, o, ok):
        assert is_stably_trivial(o) is ok

    def test_d_modes(self):
        o = O("D", 3, 1, 1, 1)
        assert is_stably_trivial(o, "literal")
        assert not is_stably_trivial(o, "parity-parallel")
        with pytest.raises(OrbitError):
            is_stably_trivial(o, "other")


class TestTriangular:
    def test_examples(self):
        lv = triangular_levi(O("B", 3, 1, 1))
        assert (lv.gl_blocks, lv.residual_rank) == ((2,), 0)
        lv = triangular_levi(O("C", 4, 4, 2, 2))
        assert (lv.gl_blocks, lv.residual_rank) == ((3, 1), 2)
        assert not is_triangular(O("B", 5, 1, 1))

    @pytest.mark.parametrize("t", "BCD")
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_family(self, t, m):
        p = triangular_partition(t, m)
        o = orbit(t, triangular_rank(t, m), p)
        assert is_triangular(o) and is_special(o)
        lv = triangular_levi(o)
        assert lv.ambient_rank(t) == o.rank


class TestInduction:
    def test_examples(self):
        assert induce("B", 2, O("B", 1), [2]) == O("B", 3, 1, 1)
        assert induce("B", 6, O("B", 1), [2, 4]) == O("B", 5, 3, 3, 1, 1)
        assert induce("C", 2, O("C", 1, 1), [1]) == O("C", 2, 2)
        assert induce_general("C", 2, orbit("C", 0, ()), [(2,)]) == O("C", 4)
        assert induce_general("A", 1, None, [(1,), (1,)]) == O("A", 2)
        assert induce_general("B", 3, O("B", 1), [(1, 1, 1)]) == O("B", 3, 2, 2)

    def test_rank_mismatch(self):
        with pytest.raises(OrbitError):
            induce("B", 3, O("B", 1), [2])
        with pytest.raises(OrbitError):
            induce_general("A", 2, None, [(1,)])

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_type_a_richardson(self, n):
        for o in enumerate_orbits("A", n):
            blocks = transpose(o.partition)
            assert induce_general("A", n, None, [[1] * k for k in blocks]) == o

    def test_very_even_inherits_levi_label(self):
        base = orbit("D", 0, ())
        assert induce("D", 2, base, [2], "II") == O("D", 2, 2, label="II")
        assert induce("D", 4, O("D", 2, 2, label="I"), [2]) == O("D", 4, 4, label="I")

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from("BCD"), st.data())
    def test_principal_to_principal(self, t, data):
        r0 = data.draw(st.integers(0, 3))
        k = data.draw(st.integers(1, 3))
        base = principal_orbit(t, r0)
        res = induce_general(t, r0 + k, base, [(k,)])
        assert res == principal_orbit(t, r0 + k)


class TestCuspidal:
    def test_examples(self):
        assert not is_cuspidal(O("B", 3, 1, 1))
        assert is_cuspidal(O("B", 2, 2, 1))
        assert not is_cuspidal(O("C", 4))

    def test_presentations(self):
        pres = richardson_presentations(O("B", 3, 1, 1))
        shapes = {(lv.gl_blocks, lv.residual_rank) for lv, _, _ in pres}
        assert shapes == {((1,), 1), ((2,), 0)}

    def test_principal_never_cuspidal(self):
        for t, n in [("B", 3), ("C", 3), ("D", 4), ("A", 3)]:
            assert inducing_presentations(principal_orbit(t, n))


class TestCompletion:
    def test_already_triangular(self):
        c = complete_to_triangular(O("B", 3, 1, 1))
        assert c.found and c.blocks == ()

    def test_base_case(self):
        c = complete_to_triangular(O("B", 1))
        assert c.blocks == (2,) and c.orbit == O("B", 3, 1, 1)

    def test_miss_is_reported(self):
        c = complete_to_triangular(O("B", 5, 1, 1), search_bound=12)
        assert not c.found
        # every block multiset of total 0..12 was tried
        assert c.searched == sum(len(list(partitions_of(k))) for k in range(13)) == 272
        assert c.to_json()["found"] is False

    def test_refuses(self):
        with pytest.raises(OrbitError):
            complete_to_triangular(O("A", 2, 1))
        with pytest.raises(OrbitError):
            complete_to_triangular(O("B", 3, 3, 1))
