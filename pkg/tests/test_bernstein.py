from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.coeffs import LaurentCoefficient
from services.bernstein_service import BernsteinPresentation
from utils.errors import ContractError

from .test_hecke import token_words


def affine_hecke_words(n):
    return token_words(n, with_y=True, max_size=3).map(lambda word: [t for t in word if t.kind != "X"])


def test_a1_t0(algebra_for):
    algebra = algebra_for("A1~")
    bernstein = BernsteinPresentation(algebra)
    s1 = algebra.weyl.simple_reflection(1)
    c = LaurentCoefficient.hecke_unit("l")
    form = bernstein.to_bernstein(algebra.t_generator(0))
    assert form == {((1,), s1): LaurentCoefficient.one(), ((0,), algebra.weyl.identity_finite): c}
    assert bernstein.render(form) == [
        {"mu": [0], "w_word": [], "coeff": "-tl^-1/2 + tl^1/2"},
        {"mu": [1], "w_word": [1], "coeff": "1"},
    ]


@pytest.mark.parametrize("label, vectors", [
    ("A2~", [(1, 0), (0, 1), (1, -1), (-1, -1)]),
    ("C2~", [(1, 0), (0, 1), (-2, -3)]),
])
def test_y_and_finite_t_are_basis_elements(algebra_for, label, vectors):
    algebra = algebra_for(label)
    bernstein = BernsteinPresentation(algebra)
    one = LaurentCoefficient.one()
    identity = algebra.weyl.identity_finite
    for mu in vectors:
        assert bernstein.to_bernstein(algebra.y_element(mu)) == {(mu, identity): one}
    for w, _ in algebra.weyl.finite_elements():
        assert bernstein.to_bernstein(algebra.t_word(algebra.weyl.finite_element(w))) == {((0, 0), w): one}


@pytest.mark.parametrize("label", ["A1~", "A2~", "C2~"])
def test_change_of_basis_inverts(algebra_for, label):
    algebra = algebra_for(label)
    bernstein = BernsteinPresentation(algebra)

    @settings(max_examples=20, deadline=None)
    @given(affine_hecke_words(algebra.n))
    def check(word):
        h = algebra.evaluate(word)
        assert bernstein.from_bernstein(bernstein.to_bernstein(h)) == h

    check()


def test_rejects_x_terms(algebra_for):
    algebra = algebra_for("A2~")
    bernstein = BernsteinPresentation(algebra)
    with pytest.raises(ContractError):
        bernstein.to_bernstein(algebra.x_monomial((1, 0)))


def test_bernstein_relation_signs(algebra_for):
    algebra = algebra_for("A2~")
    bernstein = BernsteinPresentation(algebra)
    c = algebra.hecke_unit(1)
    t1 = algebra.t_generator(1)
    s1 = algebra.weyl.finite_element(algebra.weyl.simple_reflection(1))
    # (A_1, A_1^v) = 2
    pushed = t1 * algebra.y_element((1, 0))
    expected = (algebra.y_element((-1, 0)) * t1
                - (algebra.y_element((-1, 0)) + algebra.one()) * c)
    assert pushed == expected
    form = bernstein.to_bernstein(pushed)
    assert form[((-1, 0), s1.finite)] == LaurentCoefficient.one()
    assert form[((0, 0), algebra.weyl.identity_finite)] == -c


def bernstein_right_side(algebra, j, mu):
    """Y_{s_j mu} T_j plus the correction sum, with k = (mu, A_j^v)."""
    k = algebra.datum.lattice_coroot_pairing(mu, j)
    c = algebra.hecke_unit(j)
    reflected = tuple(m - k * (i == j - 1) for i, m in enumerate(mu))
    right = algebra.y_element(reflected) * algebra.t_generator(j)
    if k > 0:
        for i in range(k):
            right = right - algebra.y_element(tuple(r + i * (n == j - 1) for n, r in enumerate(reflected))) * c
    for i in range(-k):
        right = right + algebra.y_element(tuple(m + i * (n == j - 1) for n, m in enumerate(mu))) * c
    return right


@pytest.mark.parametrize("label", ["A1~", "A2~", "C2~", pytest.param("G2~", marks=pytest.mark.slow)])
def test_bernstein_relation_on_a_box(algebra_for, label):
    algebra = algebra_for(label)
    for j in range(1, algebra.n + 1):
        for mu in product(range(-2, 3), repeat=algebra.n):
            assert algebra.t_generator(j) * algebra.y_element(mu) == bernstein_right_side(algebra, j, mu), (j, mu)
