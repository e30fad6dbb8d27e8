import pytest

from models.coeffs import LaurentCoefficient
from models.words import WordSum, t_inverse_token, t_token, x_token, y_token
from services.cartan_service import load_cartan_datum
from services.involution_service import InvolutionService, generator_tokens

from .conftest import FAST_TYPES, RANK_THREE_TYPES

LIGHT_TYPES = ["A1~", "A2~", "B2~", "C2~"]


@pytest.fixture(scope="module")
def service():
    return InvolutionService()


@pytest.fixture(scope="module")
def maps(service):
    cache = {}

    def get(label):
        if label not in cache:
            cache[label] = service.build(load_cartan_datum(label))
        return cache[label]

    return get


@pytest.mark.parametrize("label, class_map", [
    ("A2~", {"l": "l"}),
    ("C2~", {"s": "l", "l": "s"}),
    ("B2~", {"l": "s", "s": "l"}),
    ("G2~", {"s": "l", "l": "s"}),
])
def test_class_map(maps, label, class_map):
    phi, _ = maps(label)
    assert phi.class_map == class_map


def test_scalar_images(maps):
    phi, _ = maps("C2~")
    q = LaurentCoefficient.monomial(q=1)
    assert phi.coefficient(q) == LaurentCoefficient.monomial(q=-1)
    assert phi.coefficient(LaurentCoefficient.t_power("s", 1)) == LaurentCoefficient.t_power("l", -1)
    assert phi.coefficient(3) == 3


def test_token_images(maps):
    phi, _ = maps("C2~")
    assert str(phi.phi_token(t_token(1))) == str(WordSum.of(t_inverse_token(1)))
    assert str(phi.phi_token(t_inverse_token(2))) == str(WordSum.of(t_token(2)))
    assert str(phi.phi_token(y_token((1, 0)))) == str(WordSum.of(x_token((1, 0))))
    image = phi.phi_token(x_token((0, 1), 2))
    assert str(image) == str(WordSum([(LaurentCoefficient.monomial(q=2), (y_token((0, 1)),))]))


@pytest.mark.parametrize("label", LIGHT_TYPES)
def test_quadratic_relation_goes_to_its_bar(maps, label):
    phi, _ = maps(label)
    for j in range(1, phi.source.n + 1):
        image = phi.phi_apply(WordSum.of(t_token(j)) - WordSum.of(t_inverse_token(j)))
        assert image == phi.target.scalar(-phi.target.hecke_unit(j))
        assert phi.coefficient(phi.source.hecke_unit(j)) == -phi.target.hecke_unit(j)


@pytest.mark.parametrize("label", LIGHT_TYPES)
def test_t0_and_its_inverse(maps, label):
    phi, _ = maps(label)
    t0 = phi.phi_apply([t_token(0)])
    assert t0 * phi.phi_apply([t_inverse_token(0)]) == 1


@pytest.mark.parametrize("label", FAST_TYPES)
def test_involutivity(service, maps, label):
    phi, phi_back = maps(label)
    checks = service.involutivity_checks(phi, phi_back)
    assert len(checks) == len(generator_tokens(phi.source.datum)) + 5
    assert [c.to_dict() for c in checks if not c.passed] == []


@pytest.mark.parametrize("label", LIGHT_TYPES + [pytest.param("G2~", marks=pytest.mark.slow)])
def test_transport(service, label):
    report = service.verify_transport(load_cartan_datum(label))
    assert report.status == "pass", [c.to_dict() for c in report.failures()]
    assert report.iota_type == service.build(load_cartan_datum(label))[0].target.datum.label
    assert report.checks[0].name == "theta lies in M"


@pytest.mark.slow
@pytest.mark.parametrize("label", RANK_THREE_TYPES)
def test_transport_rank_three(service, label):
    report = service.verify_transport(load_cartan_datum(label))
    assert report.status == "pass", [c.to_dict() for c in report.failures()]


@pytest.mark.parametrize("label", ["A1~", "A2~", "C2~"])
def test_homomorphism_samples(service, label):
    report = service.verify_homomorphism_samples(load_cartan_datum(label), 6, seed=3)
    assert report.suite == "homomorphism"
    assert len(report.checks) == 18
    assert {c.name.rsplit(" [", 1)[1] for c in report.checks} == {"scalar]", "normal form]", "normal form vs word]"}
    assert report.status == "pass", [c.to_dict() for c in report.failures()]


def test_homomorphism_samples_need_a_count(service):
    with pytest.raises(ValueError):
        service.verify_homomorphism_samples(load_cartan_datum("A1~"), 0)


@pytest.mark.parametrize("label", ["A1~", "C2~"])
def test_phi_on_normal_forms_is_involutive(maps, label):
    phi, phi_back = maps(label)
    source = phi.source
    n = source.n
    unit = tuple(1 if i == 0 else 0 for i in range(n))
    minus = tuple(-c for c in unit)
    samples = [
        source.x_monomial(unit) * source.t_generator(1),
        source.t_generator(0),
        source.x_monomial(minus) * source.t_inverse(0) + source.hecke_unit(1),
    ]
    for h in samples:
        assert phi_back.phi_element(phi.phi_element(h)) == h


@pytest.mark.parametrize("label", LIGHT_TYPES + [pytest.param("G2~", marks=pytest.mark.slow)])
def test_case_analysis(service, maps, label):
    phi, phi_back = maps(label)
    checks = service.case_analysis(phi, phi_back)
    assert [c.to_dict() for c in checks if not c.passed] == []
    expected = 4 if phi.source.datum.p == 1 else 5
    assert len(checks) == expected
