import re
from fractions import Fraction
from typing import List, Tuple

from models.coeffs import LaurentCoefficient
from models.words import WordSum, t_inverse_token, t_token, x_token, y_token

from .errors import ExpressionError
from .helpers import parse_int_list

# Grammar, juxtaposition binds like '*':
#   expr   := term (('+' | '-') term)*
#   term   := factor ('*'? factor)*
#   factor := ('+' | '-') factor | atom ('^' exponent)?
#   atom   := T<j> | T<j>' | X[c,..;k] | Y[c,..] | q | ts | tl | t | rational | '(' expr ')'
_TOKEN = re.compile(r"""
    \s*(?:
      (?P<T>T(?P<t_index>\d+)(?P<t_prime>'?))
    | (?P<X>X\[(?P<x_body>[^\]]*)\])
    | (?P<Y>Y\[(?P<y_body>[^\]]*)\])
    | (?P<param>ts|tl|t|q)
    | (?P<number>\d+(?:/\d+)?)
    | (?P<op>[-+*()^])
    )""", re.VERBOSE)

_PARAMETERS = {"q": "q", "ts": "ts", "tl": "tl", "t": "tl"}


def tokenize(text: str) -> List[Tuple[str, re.Match]]:
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            raise ExpressionError(f"Unexpected input at position {position}: {text[position:position + 10]!r}")
        kind = next(name for name in ("T", "X", "Y", "param", "number", "op") if match.group(name))
        tokens.append((kind, match))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else (None, None)

    def peek_op(self, *ops) -> bool:
        kind, match = self.peek()
        return kind == "op" and match.group("op") in ops

    def take(self):
        token = self.peek()
        if token[0] is None:
            raise ExpressionError(f"Unexpected end of expression: {self.text!r}")
        self.index += 1
        return token

    def expect(self, op: str):
        if not self.peek_op(op):
            kind, match = self.peek()
            found = match.group(0).strip() if match else "end of input"
            raise ExpressionError(f"Expected {op!r}, found {found!r} in {self.text!r}")
        self.index += 1

    def parse(self) -> WordSum:
        if not self.tokens:
            raise ExpressionError("Empty expression")
        result = self.expr()
        if self.index != len(self.tokens):
            _, match = self.peek()
            raise ExpressionError(f"Unexpected {match.group(0).strip()!r} in {self.text!r}")
        return result

    def expr(self) -> WordSum:
        result = self.term()
        while self.peek_op("+", "-"):
            _, match = self.take()
            right = self.term()
            result = result + right if match.group("op") == "+" else result - right
        return result

    def starts_factor(self) -> bool:
        kind, match = self.peek()
        if kind is None:
            return False
        return kind != "op" or match.group("op") == "("

    def term(self) -> WordSum:
        result = self.factor()
        while True:
            if self.peek_op("*"):
                self.take()
            elif not self.starts_factor():
                return result
            result = result * self.factor()

    def factor(self) -> WordSum:
        if self.peek_op("-"):
            self.take()
            return -self.factor()
        if self.peek_op("+"):
            self.take()
            return self.factor()
        kind, match = self.take()
        if kind == "param":
            exponent = self.exponent() if self.peek_op("^") else Fraction(1)
            variable = _PARAMETERS[match.group("param")]
            return WordSum.scalar(LaurentCoefficient.monomial(**{variable: exponent}))
        if kind == "op" and match.group("op") == "(":
            inner = self.expr()
            self.expect(")")
            if self.peek_op("^"):
                power = self.exponent()
                if power.denominator != 1 or power < 0:
                    raise ExpressionError(f"Only non-negative integer powers of a bracket are allowed, got {power}")
                result = WordSum.scalar(1)
                for _ in range(int(power)):
                    result = result * inner
                return result
            return inner
        if kind == "number":
            return WordSum.scalar(Fraction(match.group("number")))
        if kind == "T":
            j = int(match.group("t_index"))
            return WordSum.of(t_inverse_token(j) if match.group("t_prime") else t_token(j))
        if kind == "X":
            body = match.group("x_body")
            coords, _, delta = body.partition(";")
            try:
                delta = int(delta) if delta.strip() else 0
            except ValueError:
                raise ExpressionError(f"Invalid delta coefficient in X[{body}]")
            return WordSum.of(x_token(parse_int_list(coords), delta))
        if kind == "Y":
            body = match.group("y_body")
            if ";" in body:
                raise ExpressionError(f"Y[{body}] takes M coordinates only, without a delta part")
            return WordSum.of(y_token(parse_int_list(body)))
        raise ExpressionError(f"Unexpected {match.group(0).strip()!r} in {self.text!r}")

    def exponent(self) -> Fraction:
        self.expect("^")
        sign = 1
        bracketed = self.peek_op("(")
        if bracketed:
            self.take()
        if self.peek_op("-"):
            self.take()
            sign = -1
        kind, match = self.take()
        if kind != "number":
            raise ExpressionError(f"Expected an exponent, found {match.group(0).strip()!r}")
        if bracketed:
            self.expect(")")
        return sign * Fraction(match.group("number"))


def parse_expression(text: str) -> WordSum:
    """Parse a DAHA expression such as "T1 X[1;0] - ts^1/2 * (T0' + 1)" into a sum of generator words."""
    return _Parser(text).parse()


_WEYL_FACTOR = re.compile(r"\s*(?:s(?P<s>\d+)|L\[(?P<L>[^\]]*)\]|r\[(?P<r>[^\]]*)\])")


def parse_weyl_expression(text: str) -> List[Tuple[str, object]]:
    """Factors of a Weyl group element: ("s", j), ("L", mu in M) or ("r", root), read left to right."""
    factors = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = _WEYL_FACTOR.match(text, position)
        if match is None:
            raise ExpressionError(f"Unexpected input at position {position}: {text[position:position + 10]!r}")
        if match.group("s") is not None:
            factors.append(("s", int(match.group("s"))))
        elif match.group("L") is not None:
            factors.append(("L", parse_int_list(match.group("L"))))
        else:
            factors.append(("r", parse_int_list(match.group("r"))))
        position = match.end()
    if not factors:
        raise ExpressionError("Empty Weyl group expression")
    return factors
