import pytest

from services.algebra_check_service import AlgebraCheckService
from services.cartan_service import load_cartan_datum


@pytest.fixture(scope="module")
def checks():
    return AlgebraCheckService()


@pytest.mark.parametrize("label, elements, words", [("A2~", 46, 70), ("B2~", 41, 66)])
def test_matsumoto_report(checks, label, elements, words):
    report = checks.verify_matsumoto(load_cartan_datum(label), 5)
    assert report.suite == "matsumoto"
    assert report.status == "pass", [c.to_dict() for c in report.failures()]
    assert [c.details["elements"] for c in report.checks][:2] == [1, 3]
    assert sum(c.details["elements"] for c in report.checks) == elements
    assert sum(c.details["words"] for c in report.checks) == words


@pytest.mark.parametrize("label", ["A1~", "C2~"])
def test_division_report(checks, label):
    datum = load_cartan_datum(label)
    report = checks.verify_exact_division(datum, 2)
    assert report.status == "pass", [c.to_dict() for c in report.failures()]
    assert len(report.checks) == datum.n + 1
    assert {c.details["cases"] for c in report.checks} == {3 * 5 ** datum.n}


def test_associativity_report(checks):
    report = checks.verify_associativity(load_cartan_datum("A1~"), 40, seed=2)
    assert report.status == "pass"
    assert report.checks[0].details == {"triples": 40, "seed": 2}


def test_associativity_needs_a_count(checks):
    with pytest.raises(ValueError):
        checks.verify_associativity(load_cartan_datum("A1~"), 0)


@pytest.mark.slow
@pytest.mark.parametrize("label", ["A2~", "C2~", "G2~"])
def test_associativity_on_three_hundred_triples(checks, label):
    report = checks.verify_associativity(load_cartan_datum(label), 300, seed=0)
    assert report.status == "pass", [c.to_dict() for c in report.failures()]
