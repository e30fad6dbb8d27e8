from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

IntVector = Tuple[int, ...]


class FiniteWeylElement:
    """Element of the finite Weyl group, stored as its integer action matrix on (alpha_1..alpha_n).

    Column k holds the coordinates of w(alpha_k); equality is equality of matrices.
    """

    __slots__ = ("matrix", "_key")

    def __init__(self, matrix):
        matrix = np.array(matrix, dtype=np.int64)
        matrix.setflags(write=False)
        self.matrix = matrix
        self._key = matrix.tobytes()

    @classmethod
    def identity(cls, n: int) -> "FiniteWeylElement":
        return cls(np.eye(n, dtype=np.int64))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.n, dtype=np.int64)))

    def apply(self, coords: Sequence[int]) -> IntVector:
        return tuple(int(x) for x in self.matrix @ np.asarray(coords, dtype=np.int64))

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        return FiniteWeylElement(self.matrix @ other.matrix)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteWeylElement) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FiniteWeylElement({self.matrix.tolist()})"


@dataclass(frozen=True)
class AffineWeylElement:
    """The element finite * lambda_trans, with trans in M coordinates (basis A_j)."""

    finite: FiniteWeylElement
    trans: IntVector

    @property
    def is_identity(self) -> bool:
        return not any(self.trans) and self.finite.is_identity


@dataclass(frozen=True)
class DoubleAffineWeylElement:
    """The element w * tau_beta * tau_delta^k, with beta in Q0 coordinates."""

    w: AffineWeylElement
    beta: IntVector
    k: int = 0
