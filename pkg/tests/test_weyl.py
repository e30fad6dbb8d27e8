import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.cartan import WeightVector
from services.cartan_service import iota_datum
from services.weyl_service import WeylGroup

from .conftest import FAST_TYPES


def words(n, max_size=8):
    return st.lists(st.integers(0, n), max_size=max_size)


def test_g2_simple_reflections(g2):
    assert g2.simple_reflection(1).matrix.tolist() == [[-1, 3], [0, 1]]
    assert g2.simple_reflection(2).matrix.tolist() == [[1, 0], [1, -1]]
    assert g2.simple_reflection(1) * g2.simple_reflection(1) == g2.identity_finite


def test_g2_reflection_word_and_inversions(g2):
    s_gamma = g2.finite_element(g2.reflection((1, 1)))
    assert g2.reduced_word(s_gamma) == (2, 1, 2)
    assert g2.inversion_set(s_gamma) == frozenset(
        WeightVector.from_finite(r) for r in ((1, 1), (0, 1), (3, 2))
    )


def test_g2_lengths(g2):
    s_theta_s = g2.finite_element(g2.reflection((2, 1)))
    translation = g2.translation((-2, -3))
    assert g2.length(s_theta_s) == 5
    assert g2.length(translation) == 10
    assert g2.length_formula(translation.finite, translation.trans) == 10
    assert g2.length_formula(s_theta_s.finite, s_theta_s.trans) == 5


def test_g2_minimal_conjugator(g2):
    w, j0 = g2.minimal_conjugator((1, 1))
    assert w == g2.simple_reflection(2)
    assert j0 == 1
    assert w.apply((1, 1)) == (1, 0)


def test_minimal_conjugator_of_simple_root_is_identity(g2):
    w, j0 = g2.minimal_conjugator((0, 1))
    assert w.is_identity
    assert j0 == 2


@pytest.mark.parametrize("label, order", [("A1~", 2), ("A2~", 6), ("B2~", 8), ("C2~", 8), ("G2~", 12)])
def test_finite_group_orders(weyl_for, label, order):
    elements = weyl_for(label).finite_elements()
    assert len(elements) == order
    assert len({w for w, _ in elements}) == order


def test_s0_on_theta(weyl_for):
    weyl = weyl_for("A1~")
    s0 = weyl.simple_affine(0)
    assert weyl.act_root(s0, (1,), 0) == ((-1,), 2)
    assert weyl.reduced_word(s0) == (0,)


@pytest.mark.parametrize("label", FAST_TYPES)
def test_s0_sends_zero_to_theta_at_level_one(weyl_for, label):
    weyl = weyl_for(label)
    image = weyl.act_level1(weyl.simple_affine(0), WeightVector.from_finite((0,) * weyl.n))
    assert image.finite == weyl.datum.theta_finite


@pytest.mark.parametrize("label", FAST_TYPES)
def test_lengths_agree_on_small_ball(weyl_for, label):
    assert weyl_for(label).cross_check_lengths(4) == []


@pytest.mark.parametrize("label", ["A2~", "C2~", "G2~"])
def test_reduced_words(weyl_for, label):
    weyl = weyl_for(label)

    @settings(max_examples=40, deadline=None)
    @given(words(weyl.n))
    def check(word):
        x = weyl.from_word(word)
        reduced = weyl.reduced_word(x)
        assert weyl.from_word(reduced) == x
        assert len(reduced) <= len(word)
        assert (len(word) - len(reduced)) % 2 == 0
        assert reduced == weyl.all_reduced_words(x)[0]
        assert len(weyl.inversion_set(x)) == len(reduced)
        assert weyl.length_formula(x.finite, x.trans) == len(reduced)

    check()


@pytest.mark.parametrize("label", ["A2~", "B2~", "G2~"])
def test_group_laws(weyl_for, label):
    weyl = weyl_for(label)

    @settings(max_examples=40, deadline=None)
    @given(words(weyl.n), words(weyl.n), words(weyl.n))
    def check(a, b, c):
        x, y, z = weyl.from_word(a), weyl.from_word(b), weyl.from_word(c)
        assert weyl.multiply(weyl.multiply(x, y), z) == weyl.multiply(x, weyl.multiply(y, z))
        assert weyl.multiply(x, weyl.inverse(x)).is_identity
        assert weyl.from_word(a + b) == weyl.multiply(x, y)

    check()


def test_double_group_commutation(weyl_for):
    weyl = weyl_for("C2~")
    for mu in ((1, 0), (0, 1), (1, -2)):
        for beta in ((1, 0), (0, 1), (2, 1)):
            translation = weyl.embed(weyl.translation(mu))
            pairing = weyl.datum.pair_root_lattice(beta, mu)
            left = weyl.multiply_double(weyl.tau(beta), translation)
            right = weyl.multiply_double(translation, weyl.tau(beta))
            assert left.w == weyl.translation(mu) and left.beta == beta and left.k == pairing
            assert right.w == weyl.translation(mu) and right.k == 0


@pytest.mark.parametrize("label", ["A2~", "G2~"])
def test_double_group_conjugation(weyl_for, label):
    weyl = weyl_for(label)

    @settings(max_examples=30, deadline=None)
    @given(words(weyl.n), st.sampled_from(weyl.datum.roots))
    def check(word, beta):
        x = weyl.embed(weyl.from_word(word))
        conjugate = weyl.multiply_double(weyl.multiply_double(x, weyl.tau(beta)), weyl.invert_double(x))
        assert conjugate == weyl.tau(*weyl.act_root(x.w, beta, 0))

    check()


def double_elements(weyl):
    n = weyl.n
    unit = st.integers(0, n - 1).map(lambda j: tuple(1 if i == j else 0 for i in range(n)))
    lattice = st.lists(st.integers(-2, 2), min_size=n, max_size=n).map(tuple)
    return st.builds(
        lambda word, mu, beta, k: weyl.multiply_double(
            weyl.embed(weyl.multiply(weyl.from_word(word), weyl.translation(mu))), weyl.tau(beta, k)
        ),
        words(n, 5),
        lattice,
        st.one_of(unit, lattice),
        st.integers(-2, 2),
    )


@pytest.mark.parametrize("label", ["A2~", "C2~", "B2~", "G2~"])
def test_phi_weyl_is_an_involutive_homomorphism(weyl_for, label):
    weyl = weyl_for(label)
    dual_datum, correspondence = iota_datum(weyl.datum)
    dual = WeylGroup(dual_datum)
    back = correspondence.inverse()

    @settings(max_examples=40, deadline=None)
    @given(double_elements(weyl), double_elements(weyl))
    def check(g, h):
        image = weyl.phi_weyl(g, dual, correspondence)
        assert dual.phi_weyl(image, weyl, back) == g
        product = weyl.phi_weyl(weyl.multiply_double(g, h), dual, correspondence)
        assert product == dual.multiply_double(image, weyl.phi_weyl(h, dual, correspondence))

    check()


def test_phi_weyl_on_generators(weyl_for):
    weyl = weyl_for("C2~")
    dual_datum, correspondence = iota_datum(weyl.datum)
    dual = WeylGroup(dual_datum)
    image = weyl.phi_weyl(weyl.embed(weyl.translation((1, 0))), dual, correspondence)
    assert image == dual.tau((1, 0))
    image = weyl.phi_weyl(weyl.tau((0, 0), 1), dual, correspondence)
    assert image == dual.tau((0, 0), -1)
    image = weyl.phi_weyl(weyl.embed(weyl.simple_affine(1)), dual, correspondence)
    assert image.w.finite == dual.simple_reflection(1)
