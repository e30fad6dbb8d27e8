from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .coeffs import LaurentCoefficient

TOKEN_KINDS = ("T", "T'", "X", "Y", "c")


@dataclass(frozen=True)
class Token:
    """One generator of a word: T_j, T_j^-1, X_beta (beta in Q), Y_mu (mu in M) or a scalar."""

    kind: str
    index: int = 0
    coords: Tuple[int, ...] = ()
    delta: int = 0
    scalar: Optional[LaurentCoefficient] = None

    def __post_init__(self):
        if self.kind not in TOKEN_KINDS:
            raise ValueError(f"unknown token kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind in ("T", "T'"):
            return f"T{self.index}" + ("'" if self.kind == "T'" else "")
        coords = ",".join(str(c) for c in self.coords)
        if self.kind == "X":
            return f"X[{coords};{self.delta}]" if self.delta else f"X[{coords}]"
        if self.kind == "Y":
            return f"Y[{coords}]"
        return f"({self.scalar})"


def t_token(j: int) -> Token:
    return Token("T", j)


def t_inverse_token(j: int) -> Token:
    return Token("T'", j)


def x_token(coords: Sequence[int], delta: int = 0) -> Token:
    return Token("X", coords=tuple(int(c) for c in coords), delta=int(delta))


def y_token(coords: Sequence[int]) -> Token:
    return Token("Y", coords=tuple(int(c) for c in coords))


def scalar_token(value) -> Token:
    return Token("c", scalar=LaurentCoefficient.coerce(value))


GeneratorWord = Tuple[Token, ...]


class WordSum:
    """Formal linear combination of generator words; products concatenate words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Tuple[LaurentCoefficient, GeneratorWord]] = ()):
        merged: Dict[GeneratorWord, LaurentCoefficient] = {}
        for coefficient, word in terms:
            word = tuple(word)
            total = merged.get(word, LaurentCoefficient.zero()) + coefficient
            if total.is_zero():
                merged.pop(word, None)
            else:
                merged[word] = total
        self.terms: List[Tuple[LaurentCoefficient, GeneratorWord]] = [(c, w) for w, c in merged.items()]

    @classmethod
    def of(cls, *tokens: Token) -> "WordSum":
        return cls([(LaurentCoefficient.one(), tuple(tokens))])

    @classmethod
    def scalar(cls, value) -> "WordSum":
        return cls([(LaurentCoefficient.coerce(value), ())])

    @staticmethod
    def _coerce(other) -> "WordSum":
        if isinstance(other, WordSum):
            return other
        if isinstance(other, Token):
            return WordSum.of(other)
        return WordSum.scalar(other)

    def __add__(self, other) -> "WordSum":
        return WordSum(self.terms + WordSum._coerce(other).terms)

    __radd__ = __add__

    def __neg__(self) -> "WordSum":
        return WordSum([(-c, w) for c, w in self.terms])

    def __sub__(self, other) -> "WordSum":
        return self + (-WordSum._coerce(other))

    def __rsub__(self, other) -> "WordSum":
        return WordSum._coerce(other) - self

    def __mul__(self, other) -> "WordSum":
        other = WordSum._coerce(other)
        return WordSum([(c1 * c2, w1 + w2) for c1, w1 in self.terms for c2, w2 in other.terms])

    def __rmul__(self, other) -> "WordSum":
        return WordSum._coerce(other) * self

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) " + " ".join(str(t) for t in w) if w else f"({c})" for c, w in self.terms)
