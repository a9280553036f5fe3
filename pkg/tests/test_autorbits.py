import pytest

from kclass.autorbits import (
    AmbientPair,
    class_fusion_summary,
    element_order_spectrum,
    k_star,
    orbit_count_on_subset,
    validate_pair,
)
from kclass.errors import NotClosedError, ValidationError
from kclass.permcore import FiniteGroup, Permutation

from _oracles import (
    alt_gens_tuples,
    closure_oracle,
    conjugation_orbits_oracle,
    element_order_oracle,
    sym_gens_tuples,
)


def perms(tuples):
    return [Permutation(t) for t in tuples]


@pytest.fixture
def s5_a5_pair():
    s5 = FiniteGroup(5, perms(sym_gens_tuples(5)))
    return validate_pair(s5, perms(alt_gens_tuples(5)), expected_index=2)


def test_self_pair_orbit_count_is_class_count():
    a5 = FiniteGroup(5, perms(alt_gens_tuples(5)))
    assert orbit_count_on_subset(a5, a5) == 5


def test_s5_on_a5_matches_table(s5_a5_pair):
    assert k_star(s5_a5_pair) == 4
    # independent oracle: fuse A5 elements under S5-generator conjugation
    orbits = conjugation_orbits_oracle(
        closure_oracle(alt_gens_tuples(5)), sym_gens_tuples(5))
    assert len(orbits) == 4


def test_identity_singleton():
    s5 = FiniteGroup(5, perms(sym_gens_tuples(5)))
    assert orbit_count_on_subset(s5, {Permutation.identity(5)}) == 1


def test_not_closed_subset_rejected():
    s5 = FiniteGroup(5, perms(sym_gens_tuples(5)))
    some = {Permutation([1, 0, 2, 3, 4]), Permutation.identity(5)}
    with pytest.raises(NotClosedError):
        orbit_count_on_subset(s5, some)


def test_orbits_invariant_under_ambient_generator_change(s5_a5_pair):
    base = perms(sym_gens_tuples(5))
    other = FiniteGroup(5, [base[0] * base[1], base[1]])
    assert other.order() == 120
    pair = validate_pair(other, perms(alt_gens_tuples(5)))
    assert k_star(pair) == 4


def test_validation_rejects_non_normal():
    s5 = FiniteGroup(5, perms(sym_gens_tuples(5)))
    with pytest.raises(ValidationError):
        validate_pair(s5, [Permutation([1, 0, 2, 3, 4])])


def test_validation_rejects_wrong_index(s5_a5_pair):
    s5 = s5_a5_pair.ambient
    with pytest.raises(ValidationError):
        validate_pair(s5, perms(alt_gens_tuples(5)), expected_index=3)


def test_unvalidated_pair_rejected():
    a5 = FiniteGroup(5, perms(alt_gens_tuples(5)))
    pair = AmbientPair(a5, a5, validated=False)
    with pytest.raises(ValidationError):
        k_star(pair)


class TestOrderSpectrum:
    def test_a5_spectrum_against_brute_force(self):
        a5 = FiniteGroup(5, perms(alt_gens_tuples(5)))
        want = sorted({element_order_oracle(t)
                       for t in closure_oracle(alt_gens_tuples(5))})
        assert list(element_order_spectrum(a5)) == want == [1, 2, 3, 5]

    def test_psl2_8_spectrum(self, session):
        pair = session.realized(session.by_name["PSL2(8)"])
        spectrum = element_order_spectrum(pair.socle)
        # brute force over all 504 elements
        want = sorted({p.order() for p in pair.socle.elements()})
        assert list(spectrum) == want == [1, 2, 3, 7, 9]

    def test_trivial_group(self):
        assert element_order_spectrum(FiniteGroup.trivial(3)) == (1,)


class TestFusionSummary:
    def test_s5_a5(self, s5_a5_pair):
        rep = class_fusion_summary(s5_a5_pair)
        assert rep.passed
        assert rep.values["k_T"] == 5
        assert rep.values["orbits"] == 4
        assert rep.values["fusion_lower_bound"] == 2.5

    def test_self_pair_trivial_bound(self):
        a5 = FiniteGroup(5, perms(alt_gens_tuples(5)))
        pair = validate_pair(a5, a5.generators, expected_index=1)
        rep = class_fusion_summary(pair)
        assert rep.passed
        assert rep.values["k_T"] == rep.values["orbits"] == 5

    def test_catalog_pairs_satisfy_fusion_bound(self, session):
        for name in ("PSL2(7)", "PSL2(16)", "PSL3(3)", "M12"):
            pair = session.realized(session.by_name[name])
            rep = class_fusion_summary(pair)
            assert rep.passed, name
            assert rep.values["orbits"] <= rep.values["k_T"]
