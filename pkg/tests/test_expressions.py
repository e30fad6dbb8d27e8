from fractions import Fraction

import pytest

from models.coeffs import LaurentCoefficient
from models.words import WordSum, t_inverse_token, t_token, x_token, y_token
from utils.errors import ExpressionError
from utils.expressions import parse_expression, parse_weyl_expression, tokenize


def test_tokenize_kinds():
    kinds = [kind for kind, _ in tokenize("T0' X[1,0;2] Y[0,1] ts^1/2 + 3")]
    assert kinds == ["T", "X", "Y", "param", "op", "number", "op", "number"]


def test_words_and_scalars(algebra_for):
    algebra = algebra_for("A1~")
    parsed = parse_expression("T1 X[1;0] - ts^1/2")
    expected = WordSum.of(t_token(1), x_token((1,))) - LaurentCoefficient.monomial(ts=Fraction(1, 2))
    assert len(parsed) == 2
    assert algebra.evaluate(parsed) == algebra.evaluate(expected)


def test_bracket_powers_expand(algebra_for):
    algebra = algebra_for("A1~")
    parsed = parse_expression("(T1 + 1)^2")
    t1 = algebra.t_generator(1)
    assert algebra.evaluate(parsed) == t1 * t1 + t1 * 2 + 1


def test_explicit_product_and_signs(algebra_for):
    algebra = algebra_for("A2~")
    left = algebra.evaluate(parse_expression("-2/3 * q^-1 T1' Y[1,0]"))
    right = algebra.evaluate(WordSum([(LaurentCoefficient.monomial(q=-1, coefficient=Fraction(-2, 3)),
                                       (t_inverse_token(1), y_token((1, 0))))]))
    assert left == right


def test_t_is_the_long_parameter():
    assert str(parse_expression("t^-1/2")) == str(parse_expression("tl^(-1/2)"))


@pytest.mark.parametrize("text", ["", "T1 +", "X[1;a]", "Y[1;2]", "(T1)^-1", "(T1)^1/2", "T1 $", "(T1", "q^ts"])
def test_invalid_expressions(text):
    with pytest.raises(ExpressionError):
        parse_expression(text)


def test_weyl_expression():
    assert parse_weyl_expression("s0 s1 L[1,-2] r[1,1]") == [("s", 0), ("s", 1), ("L", (1, -2)), ("r", (1, 1))]


@pytest.mark.parametrize("text", ["", "s1 x2", "L[1,a]"])
def test_invalid_weyl_expressions(text):
    with pytest.raises(ExpressionError):
        parse_weyl_expression(text)
