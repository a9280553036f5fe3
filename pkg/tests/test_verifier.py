import math

import pytest

from kclass.permcore import FiniteGroup, Permutation
from kclass.report import VerificationReport, reports_to_json
from kclass.verifier import (
    SocleShape,
    parse_socle_shape,
    suite_lemmas,
    verify_base3,
    verify_bertram,
    verify_index_reduction,
    verify_socle_bounds,
)

from _oracles import alt_gens_tuples, cycle_tuple, sym_gens_tuples


def perms(tuples):
    return [Permutation(t) for t in tuples]


def a5():
    return FiniteGroup(5, perms(alt_gens_tuples(5)))


def s5():
    return FiniteGroup(5, perms(sym_gens_tuples(5)))


class TestBertram:
    def test_a5(self):
        rep = verify_bertram(a5(), "A5")
        assert rep.passed
        assert rep.values["order"] == 60
        assert rep.values["k"] == 5
        assert abs(rep.margin - (5 - math.log(60) / math.log(3))) < 1e-12
        assert rep.values["ceiling_equality"] is False

    def test_ceiling_equality_exact_boundaries(self):
        # cyclic of order 9: k = 9 and 3^8 >= 9, so no ceiling equality;
        # cyclic of order 3: k = 3 = order, ceiling of log3(3) is 1 != 3
        c9 = FiniteGroup(9, perms([cycle_tuple(9, tuple(range(9)))]))
        rep = verify_bertram(c9, "C9")
        assert rep.passed and rep.values["ceiling_equality"] is False
        # symmetric group of degree 3: order 6, k = 3, ceil(log3 6) = 2
        s3 = FiniteGroup(3, perms(sym_gens_tuples(3)))
        rep = verify_bertram(s3, "S3")
        assert rep.passed
        assert rep.values["ceiling_equality"] is False

    def test_cap_skip(self):
        rep = verify_bertram(s5(), "S5", cap=10)
        assert rep.verdict == "skipped"
        assert "reason" in rep.values


class TestBase3:
    def test_s5(self):
        rep = verify_base3(s5(), "S5")
        assert rep.passed
        assert abs(rep.margin - (math.log2(3) * 7 - math.log2(120))) < 1e-12


class TestIndexReduction:
    def test_index_mismatch_rejected(self):
        with pytest.raises(ValueError):
            verify_index_reduction(s5(), s5(), a5(), 2)

    def test_s_equals_one_premise_is_base3(self):
        G = a5()
        rep = verify_index_reduction(G, G, G, 1)
        base = verify_base3(G, "A5")
        assert rep.values["premise:T"] == base.passed
        assert rep.passed == base.passed

    def test_s2_premise_squares(self):
        # premise at s=2 is (2|G|)^2 <= 3^k: fails for S5 in S5 x C2 framing
        amb = FiniteGroup(5, perms(sym_gens_tuples(5)))
        rep = verify_index_reduction(amb, a5(), a5(), 2)
        assert rep.values["premise:T"] is ((2 * 60) ** 2 <= 3 ** 5)
        assert rep.verdict == "fail"  # (120)^2 > 243


class TestSocleBounds:
    def test_s5_with_simple_socle(self):
        shape = parse_socle_shape("1:4")
        rep = verify_socle_bounds(shape, s5(), a5(), "S5")
        assert rep.passed
        assert rep.values["class_product_bound"] == 4  # C(4,3)
        assert rep.values["k_G"] == 7
        assert rep.values["classes_inside_socle"] == 4
        assert rep.values["strict_form"] is False  # n_1 = 1: equality allowed

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            SocleShape(((1, 3),))
        with pytest.raises(ValueError):
            SocleShape(((0, 4),))
        shape = parse_socle_shape("1:4,2:5")
        assert shape.r == 2 and shape.n == 3


class TestReports:
    def test_verdict_vocabulary(self):
        with pytest.raises(ValueError):
            VerificationReport(id="x", subject="y", verdict="maybe")
        with pytest.raises(ValueError):
            VerificationReport(id="x", subject="y", verdict="skipped")

    def test_json_is_deterministic_and_six_decimal(self):
        reports = suite_lemmas({"klog_max": 1000, "n_max": 3, "k_max": 300,
                                "partition_max": 50})
        text1 = reports_to_json(reports)
        text2 = reports_to_json(
            suite_lemmas({"klog_max": 1000, "n_max": 3, "k_max": 300,
                          "partition_max": 50}))
        assert text1 == text2
        assert '"margin": 4.000000' in text1

    def test_json_types(self):
        rep = VerificationReport(
            id="t", subject="s",
            values={"int": 12345678901234567890, "real": 0.1234567,
                    "flag": True, "note": "x"},
            verdict="pass", margin=None)
        text = reports_to_json([rep])
        assert '"int": 12345678901234567890' in text
        assert '"real": 0.123457' in text
        assert '"flag": true' in text
        assert '"margin": null' in text


class TestSuiteWiring:
    def test_unknown_suite(self):
        from kclass.verifier import run_suite

        with pytest.raises(ValueError):
            run_suite("nope")

    def test_tables_suite_detects_bad_expectation(self, tmp_path):
        from kclass.corpus import DATA_DIR
        from kclass.verifier import CatalogSession, suite_tables

        manifest = tmp_path / "cat.tsv"
        manifest.write_text(
            f"A5bad\t{DATA_DIR / 'a5_s5.grp'}\talt:5\t60\t2\t5\t5\t-\t-\t"
            "simple,full-aut\n")
        session = CatalogSession(manifest_path=manifest)
        reports = suite_tables(session)
        assert len(reports) == 1
        assert reports[0].verdict == "fail"  # orbit count is 4, not 5
