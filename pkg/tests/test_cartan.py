from fractions import Fraction

import pytest

from models.cartan import LatticeVector, WeightVector
from services.cartan_service import (affinize, build_datum, inner_product, iota_datum, load_cartan_datum,
                                     parse_type_table, positive_roots)
from utils.errors import DatumError, ExcludedTypeError, UnknownTypeError
from utils.helpers import format_fraction

from .conftest import FAST_TYPES, RANK_THREE_TYPES


def test_g2_roots_and_highest_roots():
    datum = load_cartan_datum("G2~")
    assert set(datum.roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert datum.theta_finite == (3, 2)
    assert datum.theta_s_finite == (2, 1)
    assert str(datum.theta) == "3*a1 + 2*a2"
    assert str(datum.theta_s) == "2*a1 + a2"
    assert [str(r) for r in positive_roots(datum)][0] == "a2"


def test_g2_gram_values():
    datum = load_cartan_datum("G2~")
    assert datum.gram[0, 0] == Fraction(2, 3)
    assert datum.gram[0, 1] == -1
    assert datum.gram[1, 1] == 2
    assert [format_fraction(datum.gram[i, j]) for i, j in ((0, 0), (0, 1), (1, 1))] == ["2/3", "-1", "2"]


def test_g2_numbers():
    datum = load_cartan_datum("G2~")
    assert datum.p == 3
    assert datum.e_int == (1, 3, 1)
    assert datum.length_class == ("l", "s", "l")
    assert datum.theta_m == (1, 2)


@pytest.mark.parametrize("label, p", [("A1~", 1), ("A2~", 1), ("A3~", 1), ("D4~", 1), ("B2~", 2), ("C2~", 2),
                                      ("B3~", 2), ("C3~", 2), ("G2~", 3), ("F4~", 2)])
def test_p_values(label, p):
    assert load_cartan_datum(label).p == p


@pytest.mark.parametrize("label", FAST_TYPES + RANK_THREE_TYPES + ["D4~", "F4~"])
def test_theta_is_long_and_in_m(label):
    datum = load_cartan_datum(label)
    assert datum.finite_inner(datum.theta_finite, datum.theta_finite) == 2
    assert datum.from_m_coords(datum.theta_m) == datum.theta_finite


@pytest.mark.parametrize("source, target", [("A1~", "A1~"), ("A2~", "A2~"), ("C2~", "B2~"), ("B2~", "C2~"),
                                            ("B3~", "C3~"), ("C3~", "B3~"), ("G2~", "G2~^iota")])
def test_iota_types(source, target):
    datum = load_cartan_datum(source)
    dual, correspondence = iota_datum(datum)
    assert dual.label == target
    back, back_correspondence = iota_datum(dual)
    assert back.label == source
    assert correspondence.composes_to_identity(back_correspondence)


@pytest.mark.parametrize("label", ["A2~", "C2~", "B3~", "G2~", "F4~"])
def test_iota_cartan_matrix_is_the_lattice_cartan_matrix(label):
    datum = load_cartan_datum(label)
    dual, _ = iota_datum(datum)
    assert [tuple(row) for row in dual.finite_matrix.tolist()] == list(datum.lattice_cartan)


def test_iota_gram_is_lattice_gram_over_p():
    datum = load_cartan_datum("G2~")
    dual, _ = iota_datum(datum)
    for j in range(datum.n):
        for k in range(datum.n):
            lattice = datum.gram[j, k] * datum.e[j + 1] * datum.e[k + 1]
            assert dual.gram[j, k] == lattice / datum.p


def test_iota_label_round_trip_through_loader():
    dual = load_cartan_datum("G2~^iota")
    assert dual.label == "G2~^iota"
    assert dual.length_class == ("l", "l", "s")
    assert iota_datum(dual)[0].label == "G2~"


@pytest.mark.parametrize("label, finite", [
    ("G2~", [[2, -3], [-1, 2]]),
    ("C2~", [[2, -2], [-1, 2]]),
    ("A2~", [[2, -1], [-1, 2]]),
])
def test_affinize_matches_table(label, finite):
    built = affinize("built", finite)
    shipped = load_cartan_datum(label)
    assert built.a == shipped.a
    assert built.marks == shipped.marks
    assert built.comarks == shipped.comarks


def test_excluded_and_unknown_labels():
    with pytest.raises(ExcludedTypeError):
        load_cartan_datum("A2^(2)")
    with pytest.raises(UnknownTypeError):
        load_cartan_datum("E9~")
    with pytest.raises(UnknownTypeError):
        load_cartan_datum("A3^(2)")


def test_build_datum_rejects_inconsistent_data():
    with pytest.raises(DatumError):
        build_datum("bad", [[2, -1], [-1, 3]], [1, 1], [1, 1])
    with pytest.raises(DatumError):
        build_datum("bad", [[2, -2], [-2, 2]], [1, 2], [1, 1])
    with pytest.raises(DatumError):
        parse_type_table("X | 2 -2; -2 2 | 1 1")


def test_inner_product_on_full_basis():
    datum = load_cartan_datum("A1~")
    delta = WeightVector((0, 1, 0))
    lambda0 = WeightVector((0, 0, 1))
    alpha = WeightVector((1, 0, 0))
    assert inner_product(delta, lambda0, datum) == 1
    assert inner_product(delta, delta, datum) == 0
    assert inner_product(alpha, alpha, datum) == 2
    assert inner_product(alpha, delta, datum) == 0


def test_lattice_vector_to_weight():
    datum = load_cartan_datum("G2~")
    assert LatticeVector("M", (1, 0)).to_weight(datum).finite == (3, 0)
    assert LatticeVector("Q", (1, 1, 2)).to_weight(datum).delta == 2
    assert str(WeightVector.from_finite((3, 2), 1)) == "3*a1 + 2*a2 + d"
