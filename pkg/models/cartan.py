from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Sequence, Tuple

import numpy as np

from utils.errors import ContractError, DatumError
from utils.helpers import format_fraction

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class WeightVector:
    """Point of h* in the basis (alpha_1..alpha_n, delta, Lambda_0)."""

    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def from_finite(cls, finite: Sequence, delta=0, level=0) -> "WeightVector":
        return cls(tuple(finite) + (delta, level))

    @property
    def n(self) -> int:
        return len(self.coords) - 2

    @property
    def finite(self) -> Tuple[Fraction, ...]:
        return self.coords[:-2]

    @property
    def delta(self) -> Fraction:
        return self.coords[-2]

    @property
    def level(self) -> Fraction:
        return self.coords[-1]

    def finite_integers(self) -> IntVector:
        if any(c.denominator != 1 for c in self.finite):
            raise ContractError(f"{self} has non-integral finite part")
        return tuple(c.numerator for c in self.finite)

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "WeightVector":
        return WeightVector(tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> "WeightVector":
        scalar = Fraction(scalar)
        return WeightVector(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        names = [f"a{i + 1}" for i in range(self.n)] + ["d", "L0"]
        parts = []
        for name, value in zip(names, self.coords):
            if value == 0:
                continue
            magnitude = abs(value)
            body = name if magnitude == 1 else f"{format_fraction(magnitude)}*{name}"
            if not parts:
                parts.append(f"-{body}" if value < 0 else body)
            else:
                parts.append(f"- {body}" if value < 0 else f"+ {body}")
        return " ".join(parts) if parts else "0"

    def to_dict(self) -> Dict:
        return {"coords": [format_fraction(c) for c in self.coords], "text": str(self)}


LATTICE_TAGS = ("Q0", "M", "Q")


@dataclass(frozen=True)
class LatticeVector:
    """Integer coordinates in one of the lattices: Q0 (alpha basis), M (A basis) or Q (alpha basis plus delta)."""

    tag: str
    coords: IntVector

    def __post_init__(self):
        if self.tag not in LATTICE_TAGS:
            raise ContractError(f"Unknown lattice tag {self.tag!r}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def finite(self) -> IntVector:
        return self.coords[:-1] if self.tag == "Q" else self.coords

    @property
    def delta(self) -> int:
        return self.coords[-1] if self.tag == "Q" else 0

    def to_weight(self, datum: "AffineCartanDatum") -> WeightVector:
        if self.tag == "M":
            finite = [e * c for e, c in zip(datum.e[1:], self.coords)]
        else:
            finite = list(self.finite)
        if len(finite) != datum.n:
            raise ContractError(f"{self} does not have rank {datum.n}")
        return WeightVector.from_finite(finite, self.delta)


@dataclass(frozen=True, eq=False)
class AffineCartanDatum:
    label: str
    n: int
    a: Tuple[IntVector, ...]
    marks: IntVector
    comarks: IntVector
    d: Tuple[Fraction, ...]
    e: Tuple[Fraction, ...]
    p: int
    m: int
    theta: WeightVector
    theta_s: WeightVector
    gram: np.ndarray
    length_class: Tuple[str, ...]
    roots: Tuple[IntVector, ...]

    def __eq__(self, other) -> bool:
        return isinstance(other, AffineCartanDatum) and self.label == other.label and self.a == other.a

    def __hash__(self) -> int:
        return hash((self.label, self.a))

    @property
    def simply_laced(self) -> bool:
        return "s" not in self.length_class

    @cached_property
    def finite_matrix(self) -> np.ndarray:
        matrix = np.array([row[1:] for row in self.a[1:]], dtype=np.int64)
        matrix.setflags(write=False)
        return matrix

    @cached_property
    def e_int(self) -> IntVector:
        return tuple(int(x) for x in self.e)

    @cached_property
    def lattice_cartan(self) -> Tuple[IntVector, ...]:
        """Row j holds (A_k, A_j^v) for k = 1..n; this is the Cartan matrix of M in the A basis."""
        rows = []
        for j in range(1, self.n + 1):
            row = []
            for k in range(1, self.n + 1):
                value = self.e[k] * self.a[j][k] / self.e[j]
                if value.denominator != 1:
                    raise DatumError(f"{self.label}: (A_{k}, A_{j}^v) = {value} is not integral")
                row.append(int(value))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def root_m_pairing(self) -> Tuple[IntVector, ...]:
        """Row j holds (alpha_j, A_k) for k = 1..n."""
        rows = []
        for j in range(self.n):
            row = []
            for k in range(self.n):
                value = self.gram[j, k] * self.e[k + 1]
                if value.denominator != 1:
                    raise DatumError(f"{self.label}: (alpha_{j + 1}, A_{k + 1}) = {value} is not integral")
                row.append(int(value))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def theta_finite(self) -> IntVector:
        return self.theta.finite_integers()

    @cached_property
    def theta_s_finite(self) -> IntVector:
        return self.theta_s.finite_integers()

    @cached_property
    def theta_m(self) -> IntVector:
        return self.to_m_coords(self.theta_finite)

    def to_m_coords(self, finite: Sequence) -> IntVector:
        coords = []
        for value, e in zip(finite, self.e[1:]):
            value = Fraction(value) / e
            if value.denominator != 1:
                raise ContractError(f"{list(finite)} does not lie in M for {self.label}")
            coords.append(value.numerator)
        return tuple(coords)

    def from_m_coords(self, coords: Sequence[int]) -> IntVector:
        return tuple(e * c for e, c in zip(self.e_int[1:], coords))

    def simple_root(self, j: int) -> Tuple[IntVector, int]:
        """alpha_j as (finite coordinates, delta coefficient); alpha_0 = delta - theta."""
        if j == 0:
            return tuple(-c for c in self.theta_finite), 1
        return tuple(1 if k == j - 1 else 0 for k in range(self.n)), 0

    def coroot_pairing(self, beta: Sequence[int], j: int) -> int:
        """(beta, alpha_j^v) for beta in the alpha basis; delta pairs to zero."""
        row = self.a[j]
        return sum(b * row[k + 1] for k, b in enumerate(beta))

    def lattice_coroot_pairing(self, mu: Sequence[int], j: int) -> int:
        """(mu, A_j^v) for mu in M coordinates, 1 <= j <= n."""
        row = self.lattice_cartan[j - 1]
        return sum(r * m for r, m in zip(row, mu))

    def pair_root_lattice(self, beta: Sequence[int], mu: Sequence[int]) -> int:
        """(beta, mu) for beta in Q0 (alpha basis) and mu in M (A basis)."""
        pairing = self.root_m_pairing
        return sum(b * pairing[j][k] * m for j, b in enumerate(beta) if b for k, m in enumerate(mu) if m)

    def finite_inner(self, u: Sequence, v: Sequence) -> Fraction:
        gram = self.gram
        return sum(
            (Fraction(x) * gram[j, k] * Fraction(y) for j, x in enumerate(u) if x for k, y in enumerate(v) if y),
            Fraction(0),
        )

    def inner_product(self, v: WeightVector, w: WeightVector) -> Fraction:
        if v.n != self.n or w.n != self.n:
            raise ContractError(f"vectors are not over {self.label}")
        return Fraction(np.array(v.coords, dtype=object) @ self.gram @ np.array(w.coords, dtype=object))

    def root_class(self, beta: Sequence[int]) -> str:
        norm = self.finite_inner(beta, beta)
        return "l" if norm == self.finite_inner(self.theta_finite, self.theta_finite) else "s"

    def weight(self, finite: Sequence, delta=0, level=0) -> WeightVector:
        return WeightVector.from_finite(finite, delta, level)

    def to_dict(self) -> Dict:
        return {
            "label": self.label,
            "n": self.n,
            "matrix": [list(row) for row in self.a],
            "marks": list(self.marks),
            "comarks": list(self.comarks),
            "d": [format_fraction(x) for x in self.d],
            "e": [format_fraction(x) for x in self.e],
            "p": self.p,
            "m": self.m,
            "theta": str(self.theta),
            "theta_s": str(self.theta_s),
            "length_class": list(self.length_class),
            "gram": [[format_fraction(x) for x in row] for row in self.gram],
            "positive_roots": [str(WeightVector.from_finite(r)) for r in self.roots],
        }


@dataclass(frozen=True)
class LatticeCorrespondence:
    """psi_X: M -> Q0^iota and psi_Y: Q0 -> M^iota, both the identity on integer coordinates."""

    source: str
    target: str
    n: int

    def _check(self, coords: Sequence[int]) -> IntVector:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.n:
            raise ContractError(f"expected {self.n} coordinates, got {len(coords)}")
        return coords

    def psi_x(self, mu: Sequence[int]) -> IntVector:
        return self._check(mu)

    def psi_y(self, beta: Sequence[int]) -> IntVector:
        return self._check(beta)

    def inverse(self) -> "LatticeCorrespondence":
        return LatticeCorrespondence(self.target, self.source, self.n)

    def composes_to_identity(self, other: "LatticeCorrespondence") -> bool:
        if other.source != self.target or other.target != self.source:
            return False
        basis = [tuple(1 if i == j else 0 for i in range(self.n)) for j in range(self.n)]
        return all(other.psi_y(self.psi_x(v)) == v and other.psi_x(self.psi_y(v)) == v for v in basis)
