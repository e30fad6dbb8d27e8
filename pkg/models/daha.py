from fractions import Fraction
from typing import TYPE_CHECKING, Dict, List, Tuple

from utils.errors import ContractError
from utils.helpers import format_fraction

from .coeffs import LaurentCoefficient
from .weyl import AffineWeylElement

if TYPE_CHECKING:
    from services.hecke_service import HeckeAlgebra

TermKey = Tuple[Tuple[int, ...], AffineWeylElement]


class DahaElement:
    """sum c * X_beta T_u in PBW normal form, beta in Q0 and u in the affine Weyl group.

    X_delta never appears: it is the scalar q^-1. Zero coefficients are never stored.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "HeckeAlgebra", terms: Dict[TermKey, LaurentCoefficient]):
        self.algebra = algebra
        self.terms = {key: c for key, c in terms.items() if not c.is_zero()}

    def _same_algebra(self, other: "DahaElement"):
        if other.algebra.datum.label != self.algebra.datum.label:
            raise ContractError(
                f"elements of {self.algebra.datum.label} and {other.algebra.datum.label} cannot be combined"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other) -> "DahaElement":
        if not isinstance(other, DahaElement):
            other = self.algebra.scalar(other)
        self._same_algebra(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms[key] + c if key in terms else c
        return DahaElement(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self) -> "DahaElement":
        return DahaElement(self.algebra, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other) -> "DahaElement":
        if not isinstance(other, DahaElement):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> "DahaElement":
        return (-self) + other

    def __mul__(self, other) -> "DahaElement":
        if isinstance(other, DahaElement):
            self._same_algebra(other)
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, Fraction, LaurentCoefficient)):
            c = LaurentCoefficient.coerce(other)
            return DahaElement(self.algebra, {key: value * c for key, value in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> "DahaElement":
        if isinstance(other, (int, Fraction, LaurentCoefficient)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentCoefficient)):
            other = self.algebra.scalar(other)
        if not isinstance(other, DahaElement):
            return NotImplemented
        return self.algebra.datum.label == other.algebra.datum.label and self.terms == other.terms

    __hash__ = None

    def sorted_terms(self) -> List[Tuple[Tuple[int, ...], Tuple[int, ...], LaurentCoefficient]]:
        """Terms ordered by lattice coordinates, then by length and word of u."""
        weyl = self.algebra.weyl
        rows = [(beta, weyl.reduced_word(u), c) for (beta, u), c in self.terms.items()]
        return sorted(rows, key=lambda row: (row[0], len(row[1]), row[1]))

    def to_terms(self) -> List[Dict]:
        return [
            {"beta": list(beta), "u_word": list(word), "coeff": str(c)}
            for beta, word, c in self.sorted_terms()
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for beta, word, c in self.sorted_terms():
            factors = [f"({c})"]
            if any(beta):
                factors.append("X[" + ",".join(format_fraction(b) for b in beta) + "]")
            if word:
                factors.append("T[" + ",".join(str(j) for j in word) + "]")
            parts.append(" ".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"DahaElement({self.algebra.datum.label}: {self})"
