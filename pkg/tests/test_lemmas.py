import pytest

from services.cartan_service import load_cartan_datum
from services.lemma_service import LEMMAS, LemmaService

from .conftest import P_NOT_ONE_TYPES


@pytest.fixture(scope="module")
def lemmas():
    return LemmaService()


def test_g2_short_translation(lemmas):
    report = lemmas.verify_short_translation(load_cartan_datum("G2~"))
    assert report.status == "pass", [c.to_dict() for c in report.checks if not c.passed]
    assert report.witnesses["theta_s_coroot_m"] == [2, 3]
    assert report.witnesses["lengths"] == {"s_gamma": 3, "w": 5, "s_theta_s": 5, "lambda": 10}


def test_g2_gamma_inversions(lemmas):
    report = lemmas.verify_gamma_inversions(load_cartan_datum("G2~"))
    assert report.status == "pass"
    assert report.witnesses["gamma"] == "a1 + a2"
    assert report.witnesses["s_gamma_word"] == [2, 1, 2]
    assert report.witnesses["inversion_set"] == ["3*a1 + 2*a2", "a1 + a2", "a2"]


def test_g2_simple_conjugate(lemmas):
    report = lemmas.verify_simple_conjugate(load_cartan_datum("G2~"))
    assert report.status == "pass", [c.to_dict() for c in report.checks if not c.passed]
    assert report.witnesses == {"w_word": [2], "j0": 1, "pairings": [1]}


@pytest.mark.parametrize("label", P_NOT_ONE_TYPES)
def test_short_quadratic(lemmas, label):
    report = lemmas.verify_short_quadratic(load_cartan_datum(label))
    assert report.status == "pass", [c.to_dict() for c in report.checks if not c.passed]


@pytest.mark.parametrize("label", ["B2~", "C2~"])
def test_short_root_lemmas(lemmas, label):
    datum = load_cartan_datum(label)
    for check in (lemmas.verify_short_translation, lemmas.verify_gamma_inversions, lemmas.verify_simple_conjugate):
        report = check(datum)
        assert report.status == "pass", (report.lemma, [c.to_dict() for c in report.checks if not c.passed])


@pytest.mark.slow
@pytest.mark.parametrize("label", ["B3~", "C3~"])
def test_rank_three_lemmas(lemmas, label):
    reports = lemmas.verify_all(load_cartan_datum(label))
    assert [r.status for r in reports] == ["pass"] * len(LEMMAS)


@pytest.mark.parametrize("label", ["C2~", "B3~", "C3~"])
def test_scalar_product_table(label):
    checks = LemmaService.scalar_product_table(load_cartan_datum(label))
    assert all(c.passed for c in checks), [c.to_dict() for c in checks if not c.passed]


@pytest.mark.parametrize("label", ["A1~", "A2~"])
def test_simply_laced_types_are_not_applicable(lemmas, label):
    reports = lemmas.verify_all(load_cartan_datum(label))
    assert [r.lemma for r in reports] == list(LEMMAS)
    assert [r.status for r in reports[:-1]] == ["not-applicable"] * (len(LEMMAS) - 1)
    assert reports[-1].status == "pass"
    assert reports[0].witnesses["reason"].startswith("p = 1")
