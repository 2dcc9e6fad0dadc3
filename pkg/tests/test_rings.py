import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cozero.rings import (
    RingSpec,
    RingSpecError,
    associate_classes,
    crt_split,
    in_principal_ideal,
    is_unit,
    is_von_neumann_regular,
    min_prime_count,
    parse_spec,
    principal_ideal,
    vertices,
)
from conftest import ideal_by_enumeration, unit_by_search, vnr_by_search


class TestParseSpec:
    @pytest.mark.parametrize("text,moduli", [
        ("Z2xZ2", (2, 2)),
        ("Z4", (4,)),
        ("Z2xZ3xZ5", (2, 3, 5)),
        ("z2Xz3", (2, 3)),
        (" Z10 ", (10,)),
    ])
    def test_valid(self, text, moduli):
        assert parse_spec(text).moduli == moduli

    @pytest.mark.parametrize("text", ["", "Z", "Z1", "Z0", "Z2x", "xZ2",
                                      "Z2yZ3", "2x3", "Z-3"])
    def test_invalid(self, text):
        with pytest.raises(RingSpecError):
            parse_spec(text)

    def test_overflow_rejected(self):
        with pytest.raises(RingSpecError):
            RingSpec((2**63, 2**63))

    def test_roundtrip_str(self):
        spec = parse_spec("Z2xZ9xZ5")
        assert parse_spec(str(spec)) == spec


class TestCrtSplit:
    @pytest.mark.parametrize("moduli,split", [
        ((6,), (2, 3)),
        ((2, 3, 5), (2, 3, 5)),
        ((12,), (4, 3)),
        ((360,), (8, 9, 5)),
        ((10, 12), (2, 5, 4, 3)),
    ])
    def test_moduli(self, moduli, split):
        assert crt_split(RingSpec(moduli)).split.moduli == split

    def test_preserves_cardinality(self, small_spec):
        assert crt_split(small_spec).split.cardinality == small_spec.cardinality

    def test_bijection_is_ring_isomorphism(self, small_spec):
        # exhaustive: phi respects +, *, 0, 1 and round-trips
        cs = crt_split(small_spec)
        elems = list(small_spec.elements())
        images = [cs.to_split(a) for a in elems]
        assert len(set(images)) == len(elems)
        assert cs.to_split(small_spec.zero) == cs.split.zero
        assert cs.to_split(small_spec.one) == cs.split.one
        for a in elems:
            assert cs.from_split(cs.to_split(a)) == a
        for a, b in itertools.product(elems[:40], elems[:40]):
            assert cs.to_split(small_spec.add(a, b)) == \
                cs.split.add(cs.to_split(a), cs.to_split(b))
            assert cs.to_split(small_spec.mul(a, b)) == \
                cs.split.mul(cs.to_split(a), cs.to_split(b))


class TestIsUnit:
    def test_z6_five(self):
        spec = RingSpec((6,))
        assert is_unit(spec, (5,))  # 5*5 = 25 = 1 mod 6

    def test_zero_component(self):
        assert not is_unit(RingSpec((2, 2)), (1, 0))

    def test_identity(self, small_spec):
        assert is_unit(small_spec, small_spec.one)

    def test_matches_inverse_search(self, small_spec):
        for a in small_spec.elements():
            assert is_unit(small_spec, a) == unit_by_search(small_spec, a)

    def test_unit_iff_one_in_ideal(self, small_spec):
        for a in small_spec.elements():
            assert is_unit(small_spec, a) == \
                in_principal_ideal(small_spec, small_spec.one, a)


class TestPrincipalIdeal:
    def test_z6_examples(self):
        spec = RingSpec((6,))
        assert in_principal_ideal(spec, (2,), (4,))  # 2 = 2*4 mod 6
        assert not in_principal_ideal(spec, (1,), (2,))

    def test_disjoint_patterns(self):
        spec = RingSpec((2, 2))
        assert not in_principal_ideal(spec, (1, 0), (0, 1))

    def test_zero_in_every_ideal(self, small_spec):
        for b in small_spec.elements():
            assert in_principal_ideal(small_spec, small_spec.zero, b)

    def test_fast_path_matches_enumeration(self, small_spec):
        elems = list(small_spec.elements())
        ideals = {b: ideal_by_enumeration(small_spec, b) for b in elems}
        for a in elems:
            for b in elems:
                assert in_principal_ideal(small_spec, a, b) == (a in ideals[b])

    def test_paranoid_flag(self, small_spec):
        elems = list(small_spec.elements())
        for a in elems[:10]:
            for b in elems[:10]:
                in_principal_ideal(small_spec, a, b, paranoid=True)

    def test_principal_ideal_enumeration(self):
        spec = RingSpec((6,))
        assert principal_ideal(spec, (2,)) == {(0,), (2,), (4,)}


class TestVertices:
    def test_z4(self):
        assert vertices(RingSpec((4,))) == [(2,)]

    def test_z2z2(self):
        assert vertices(RingSpec((2, 2))) == [(0, 1), (1, 0)]

    def test_z2_cubed_count(self):
        assert len(vertices(RingSpec((2, 2, 2)))) == 6

    def test_excludes_zero_and_units(self, small_spec):
        vs = vertices(small_spec)
        assert small_spec.zero not in vs
        assert not any(is_unit(small_spec, v) for v in vs)
        unit_count = sum(1 for a in small_spec.elements()
                         if is_unit(small_spec, a))
        assert len(vs) == small_spec.cardinality - unit_count - 1

    def test_lexicographic_order(self, small_spec):
        vs = vertices(small_spec)
        assert vs == sorted(vs)


class TestVonNeumannRegular:
    @pytest.mark.parametrize("moduli,expected", [
        ((2, 3), True),
        ((4,), False),
        ((6,), True),
        ((2, 4), False),
        ((30, 7), True),
        ((9,), False),
    ])
    def test_squarefree_criterion(self, moduli, expected):
        assert is_von_neumann_regular(RingSpec(moduli)) == expected

    def test_matches_regularity_search(self, small_spec):
        assert is_von_neumann_regular(small_spec) == vnr_by_search(small_spec)


class TestMinPrimeCount:
    @pytest.mark.parametrize("moduli,n", [
        ((2, 3, 5), 3),
        ((6,), 2),
        ((2,), 1),
        ((30,), 3),
        ((2, 15), 3),
    ])
    def test_counts(self, moduli, n):
        assert min_prime_count(RingSpec(moduli)) == n

    def test_rejects_non_vnr(self):
        with pytest.raises(ValueError):
            min_prime_count(RingSpec((4,)))


class TestAssociateClasses:
    def test_z2z3(self):
        ac = associate_classes(RingSpec((2, 3)))
        by_rep = {rep: set(members) for rep, members in ac.classes}
        assert by_rep[(0, 1)] == {(0, 1), (0, 2)}
        assert by_rep[(1, 0)] == {(1, 0)}

    def test_z2z2_singletons(self):
        ac = associate_classes(RingSpec((2, 2)))
        assert all(len(members) == 1 for _, members in ac.classes)
        assert len(ac.classes) == 2

    def test_z3z3(self):
        ac = associate_classes(RingSpec((3, 3)))
        assert len(ac.classes) == 2
        assert sorted(len(m) for _, m in ac.classes) == [2, 2]

    def test_partition_and_mutual_membership(self, small_spec):
        ac = associate_classes(small_spec)
        all_members = [m for _, members in ac.classes for m in members]
        assert sorted(all_members) == vertices(small_spec)
        for rep, members in ac.classes:
            ideal = ideal_by_enumeration(small_spec, rep)
            for m in members:
                assert ideal_by_enumeration(small_spec, m) == ideal

    def test_representatives_pairwise_non_associate(self, small_spec):
        ac = associate_classes(small_spec)
        reps = [rep for rep, _ in ac.classes]
        for a, b in itertools.combinations(reps, 2):
            assert not (in_principal_ideal(small_spec, a, b)
                        and in_principal_ideal(small_spec, b, a))

    def test_vnr_class_count(self):
        for moduli in [(2, 2), (2, 3), (3, 3), (2, 3, 5), (2, 2, 2, 2), (6,)]:
            spec = RingSpec(moduli)
            n = min_prime_count(spec)
            assert len(associate_classes(spec).classes) == 2 ** n - 2

    def test_vnr_representatives_are_01_patterns(self):
        for moduli in [(2, 3), (3, 3), (3, 5, 7), (2, 3, 5)]:
            ac = associate_classes(RingSpec(moduli))
            for rep, _ in ac.classes:
                assert all(r in (0, 1) for r in rep)


@given(st.lists(st.integers(min_value=2, max_value=9), min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_ideal_membership_property(moduli):
    spec = RingSpec(tuple(moduli))
    if spec.cardinality > 200:
        return
    elems = list(spec.elements())
    for a in elems[::7]:
        for b in elems[::5]:
            assert in_principal_ideal(spec, a, b) == \
                (a in ideal_by_enumeration(spec, b))
