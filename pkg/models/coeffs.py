from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple

from utils.helpers import format_fraction

Exponents = Tuple[Fraction, Fraction, Fraction]

VARIABLES = ("q", "ts", "tl")
_CLASS_SLOT = {"s": 1, "l": 2}
_ZERO = Fraction(0)


class LaurentCoefficient:
    """Sparse Laurent polynomial in q, t_s^(1/2), t_l^(1/2) with rational coefficients.

    Keys are exponent triples (q, t_s, t_l); stored coefficients are never zero.
    Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping = None):
        clean: Dict[Exponents, Fraction] = {}
        for exponents, value in (terms or {}).items():
            key = tuple(Fraction(x) for x in exponents)
            if len(key) != 3:
                raise ValueError(f"expected an exponent triple, got {exponents!r}")
            total = clean.get(key, _ZERO) + Fraction(value)
            if total:
                clean[key] = total
            else:
                clean.pop(key, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Exponents, Fraction]) -> "LaurentCoefficient":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "LaurentCoefficient":
        return cls._wrap({})

    @classmethod
    def constant(cls, value) -> "LaurentCoefficient":
        value = Fraction(value)
        return cls._wrap({(_ZERO, _ZERO, _ZERO): value} if value else {})

    @classmethod
    def one(cls) -> "LaurentCoefficient":
        return cls.constant(1)

    @classmethod
    def monomial(cls, q=0, ts=0, tl=0, coefficient=1) -> "LaurentCoefficient":
        coefficient = Fraction(coefficient)
        if not coefficient:
            return cls.zero()
        return cls._wrap({(Fraction(q), Fraction(ts), Fraction(tl)): coefficient})

    @classmethod
    def t_power(cls, length_class: str, exponent) -> "LaurentCoefficient":
        exps = [_ZERO, _ZERO, _ZERO]
        exps[_CLASS_SLOT[length_class]] = Fraction(exponent)
        return cls._wrap({tuple(exps): Fraction(1)})

    @classmethod
    def hecke_unit(cls, length_class: str) -> "LaurentCoefficient":
        """t^(1/2) - t^(-1/2) for the parameter of the given root length class."""
        half = Fraction(1, 2)
        return cls.t_power(length_class, half) - cls.t_power(length_class, -half)

    @classmethod
    def coerce(cls, value) -> "LaurentCoefficient":
        if isinstance(value, LaurentCoefficient):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot use {type(value).__name__} as a coefficient")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(key == (_ZERO, _ZERO, _ZERO) for key in self.terms)

    def items(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __add__(self, other) -> "LaurentCoefficient":
        try:
            other = LaurentCoefficient.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        terms = dict(self.terms)
        for key, value in other.terms.items():
            total = terms.get(key, _ZERO) + value
            if total:
                terms[key] = total
            else:
                del terms[key]
        return LaurentCoefficient._wrap(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentCoefficient":
        return LaurentCoefficient._wrap({key: -value for key, value in self.terms.items()})

    def __sub__(self, other) -> "LaurentCoefficient":
        try:
            other = LaurentCoefficient.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentCoefficient":
        return LaurentCoefficient.coerce(other) - self

    def __mul__(self, other) -> "LaurentCoefficient":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentCoefficient.zero()
            return LaurentCoefficient._wrap({key: value * other for key, value in self.terms.items()})
        if not isinstance(other, LaurentCoefficient):
            return NotImplemented
        terms: Dict[Exponents, Fraction] = {}
        for (a1, b1, c1), v1 in self.terms.items():
            for (a2, b2, c2), v2 in other.terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                total = terms.get(key, _ZERO) + v1 * v2
                if total:
                    terms[key] = total
                else:
                    terms.pop(key, None)
        return LaurentCoefficient._wrap(terms)

    def __rmul__(self, other) -> "LaurentCoefficient":
        return self * other

    def __pow__(self, exponent: int) -> "LaurentCoefficient":
        if exponent < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted in the Laurent ring")
            ((key, value),) = self.terms.items()
            base = LaurentCoefficient._wrap({tuple(-x for x in key): 1 / value})
            return base ** (-exponent)
        result = LaurentCoefficient.one()
        for _ in range(exponent):
            result = result * self
        return result

    def bar(self) -> "LaurentCoefficient":
        """q -> q^-1, t_s -> t_s^-1, t_l -> t_l^-1."""
        return LaurentCoefficient._wrap({(-a, -b, -c): v for (a, b, c), v in self.terms.items()})

    def substitute(self, class_map: Mapping[str, str]) -> "LaurentCoefficient":
        """Rename t parameters by length class, e.g. {"s": "l", "l": "s"} swaps t_s and t_l."""
        terms: Dict[Exponents, Fraction] = {}
        for key, value in self.terms.items():
            exps = [key[0], _ZERO, _ZERO]
            for cls, slot in _CLASS_SLOT.items():
                target = _CLASS_SLOT[class_map.get(cls, cls)]
                exps[target] += key[slot]
            new_key = tuple(exps)
            total = terms.get(new_key, _ZERO) + value
            if total:
                terms[new_key] = total
            else:
                terms.pop(new_key, None)
        return LaurentCoefficient._wrap(terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentCoefficient.constant(other)
        if not isinstance(other, LaurentCoefficient):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, value in sorted(self.terms.items()):
            factors = []
            for name, exponent in zip(VARIABLES, key):
                if exponent == 0:
                    continue
                factors.append(name if exponent == 1 else f"{name}^{format_fraction(exponent)}")
            magnitude = abs(value)
            if not factors:
                body = format_fraction(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{format_fraction(magnitude)}*" + "*".join(factors)
            if not parts:
                parts.append(f"-{body}" if value < 0 else body)
            else:
                parts.append(f"- {body}" if value < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentCoefficient({self})"
