import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kclass.errors import CapExceededError, DegreeMismatchError
from kclass.permcore import (
    ClassDecomposition,
    FiniteGroup,
    Permutation,
    compose,
    conjugacy_classes,
    element_order,
    group_elements,
    group_order,
    is_normal_subgroup,
)

from _oracles import (
    alt_gens_tuples,
    closure_oracle,
    conjugation_orbits_oracle,
    cycle_tuple,
    element_order_oracle,
    sym_gens_tuples,
)


def perms(tuples):
    return [Permutation(t) for t in tuples]


def a5():
    return FiniteGroup(5, perms(alt_gens_tuples(5)))


def s5():
    return FiniteGroup(5, perms(sym_gens_tuples(5)))


class TestPermutation:
    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])
        with pytest.raises(ValueError):
            Permutation([0, 3, 1])

    def test_identity_law(self):
        q = Permutation([2, 0, 4, 1, 3])
        assert Permutation.identity(5) * q == q
        assert q * Permutation.identity(5) == q

    def test_compose_convention_p_acts_first(self):
        p = Permutation([1, 0, 2])
        q = Permutation([0, 2, 1])
        assert compose(p, q).images == (2, 0, 1)

    def test_inverse_law(self):
        p = Permutation([3, 1, 4, 2, 0])
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            Permutation([1, 0]) * Permutation([1, 2, 0])

    def test_order_examples(self):
        assert element_order(Permutation.identity(7)) == 1
        assert element_order(Permutation(cycle_tuple(5, (0, 1, 2, 3, 4)))) == 5
        two_three = Permutation(cycle_tuple(5, (0, 1), (2, 3, 4)))
        assert element_order(two_three) == 6

    def test_order_matches_brute_force_oracle(self):
        for t in closure_oracle(alt_gens_tuples(5)):
            assert Permutation(t).order() == element_order_oracle(t)

    def test_from_cycles_and_cycles_roundtrip(self):
        p = Permutation.from_cycles(6, (0, 3, 5), (1, 2))
        assert p.cycles() == ((0, 3, 5), (1, 2))

    def test_power(self):
        p = Permutation(cycle_tuple(6, (0, 1, 2, 3, 4, 5)))
        assert (p ** 6).is_identity()
        assert p ** -1 == p.inverse()
        assert (p ** 0).is_identity()


@settings(max_examples=100)
@given(st.permutations(range(6)), st.permutations(range(6)),
       st.permutations(range(6)))
def test_composition_associative(a, b, c):
    pa, pb, pc = Permutation(a), Permutation(b), Permutation(c)
    assert (pa * pb) * pc == pa * (pb * pc)


@settings(max_examples=100)
@given(st.permutations(range(7)))
def test_inverse_roundtrip(images):
    p = Permutation(images)
    assert p.inverse().inverse() == p
    assert (p * p.inverse()).is_identity()


class TestEnumeration:
    def test_a5_closure_matches_oracle(self):
        got = group_elements(a5(), 10 ** 6)
        want = closure_oracle(alt_gens_tuples(5))
        assert {p.images for p in got} == want
        assert len(got) == 60

    def test_s5_order(self):
        assert group_order(s5()) == 120

    def test_empty_generators_is_trivial_group(self):
        G = FiniteGroup.trivial(4)
        assert group_order(G) == 1
        assert group_elements(G) == frozenset({Permutation.identity(4)})

    def test_cap_exceeded(self):
        with pytest.raises(CapExceededError) as exc:
            group_order(s5(), cap=100)
        assert "100" in str(exc.value)

    def test_cap_exactly_sufficient(self):
        assert group_order(FiniteGroup(5, perms(sym_gens_tuples(5))), cap=120) == 120

    def test_membership(self):
        G = a5()
        assert Permutation(cycle_tuple(5, (0, 1, 2))) in G
        assert Permutation(cycle_tuple(5, (0, 1))) not in G

    def test_lagrange_element_orders(self):
        G = FiniteGroup(6, perms([cycle_tuple(6, (0, 1, 2), (3, 4)),
                                  cycle_tuple(6, (0, 3))]))
        n = G.order()
        assert all(n % p.order() == 0 for p in G.elements())


class TestConjugacyClasses:
    def test_a5_against_oracle(self):
        decomp = conjugacy_classes(a5())
        orbits = conjugation_orbits_oracle(
            closure_oracle(alt_gens_tuples(5)), alt_gens_tuples(5))
        assert decomp.k == len(orbits) == 5
        assert sorted(decomp.sizes) == sorted(len(o) for o in orbits) == [
            1, 12, 12, 15, 20]

    def test_cyclic_group_of_order_3(self):
        G = FiniteGroup(3, perms([cycle_tuple(3, (0, 1, 2))]))
        decomp = conjugacy_classes(G)
        assert decomp.k == 3 == G.order()

    def test_s5_count_is_partition_count(self):
        from kclass.lemmas import partition_count

        assert conjugacy_classes(s5()).k == partition_count(5) == 7

    def test_sizes_sum_and_divide(self):
        for G in (a5(), s5()):
            decomp = conjugacy_classes(G)
            n = G.order()
            assert decomp.group_order == n
            assert all(n % s == 0 for s in decomp.sizes)

    def test_identity_is_singleton_first_class(self):
        decomp = conjugacy_classes(s5())
        assert decomp.representatives[0].is_identity()
        assert decomp.sizes[0] == 1

    def test_generator_set_invariance(self):
        alt = perms(alt_gens_tuples(5))
        other = [alt[0] * alt[1], alt[1]]  # same closure, different gens
        G1, G2 = FiniteGroup(5, alt), FiniteGroup(5, other)
        assert G2.order() == 60
        d1, d2 = conjugacy_classes(G1), conjugacy_classes(G2)
        assert d1.k == d2.k
        assert sorted(d1.sizes) == sorted(d2.sizes)
        assert d1.representatives == d2.representatives

    def test_abelian_iff_k_equals_order(self):
        cases = [
            (FiniteGroup(3, perms([cycle_tuple(3, (0, 1, 2))])), True),
            (FiniteGroup(5, perms([cycle_tuple(5, (0, 1), (2, 3))])), True),
            (s5(), False),
            (a5(), False),
        ]
        for G, abelian in cases:
            assert G.is_abelian() is abelian
            assert (conjugacy_classes(G).k == G.order()) is abelian

    def test_repeated_runs_identical(self):
        d1 = conjugacy_classes(a5())
        G2 = a5()
        d2 = conjugacy_classes(G2)
        assert d1 == d2

    def test_parallel_lists_validated(self):
        with pytest.raises(ValueError):
            ClassDecomposition((Permutation.identity(3),), (1, 2))


class TestNormality:
    def test_alternating_in_symmetric(self):
        assert is_normal_subgroup(s5(), a5().generators) is True

    def test_transposition_not_normal(self):
        t = [Permutation(cycle_tuple(5, (0, 1)))]
        assert is_normal_subgroup(s5(), t) is False

    def test_group_normal_in_itself(self):
        G = a5()
        assert is_normal_subgroup(G, G.generators) is True

    def test_socle_outside_ambient_rejected(self):
        odd = [Permutation(cycle_tuple(5, (0, 1)))]
        with pytest.raises(ValueError):
            is_normal_subgroup(a5(), odd)
