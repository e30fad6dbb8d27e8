import logging
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from models.cartan import AffineCartanDatum, LatticeCorrespondence, WeightVector
from models.weyl import AffineWeylElement, DoubleAffineWeylElement, FiniteWeylElement
from utils.errors import ContractError, DatumError
from utils.helpers import add_vectors, is_positive_root_vector

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


class WeylGroup:
    """Arithmetic in W0, W = W0 x M and the double affine group W x Q for one affine type.

    Reduced words, descents and inverses are memoized on the instance; create one
    instance per verification job.
    """

    def __init__(self, datum: AffineCartanDatum):
        self.datum = datum
        self.n = datum.n
        self._zero = (0,) * self.n
        self._e = np.array(datum.e_int[1:], dtype=np.int64)
        self._e_by_class = {datum.length_class[j]: int(datum.e[j]) for j in range(1, self.n + 1)}

        self.identity_finite = FiniteWeylElement.identity(self.n)
        self.identity = AffineWeylElement(self.identity_finite, self._zero)
        self._finite_simple = [None] + [self._simple_reflection(j) for j in range(1, self.n + 1)]
        self.s_theta = self.reflection(datum.theta_finite)
        self._affine_simple = [AffineWeylElement(self.s_theta, tuple(-c for c in datum.theta_m))]
        self._affine_simple += [AffineWeylElement(s, self._zero) for s in self._finite_simple[1:]]

        self._inverses: Dict[FiniteWeylElement, FiniteWeylElement] = {}
        self._words: Dict[AffineWeylElement, Tuple[int, ...]] = {}
        self._first_descent: Dict[AffineWeylElement, Optional[int]] = {}
        self._finite_elements: Optional[List[Tuple[FiniteWeylElement, Tuple[int, ...]]]] = None

    def _simple_reflection(self, j: int) -> FiniteWeylElement:
        matrix = np.eye(self.n, dtype=np.int64)
        for k in range(self.n):
            matrix[j - 1, k] -= self.datum.a[j][k + 1]
        return FiniteWeylElement(matrix)

    def simple_reflection(self, j: int) -> FiniteWeylElement:
        if not 1 <= j <= self.n:
            raise ContractError(f"finite simple reflections are indexed 1..{self.n}, got {j}")
        return self._finite_simple[j]

    def simple_affine(self, j: int) -> AffineWeylElement:
        if not 0 <= j <= self.n:
            raise ContractError(f"simple reflections are indexed 0..{self.n}, got {j}")
        return self._affine_simple[j]

    def reflection(self, root: Sequence[int]) -> FiniteWeylElement:
        """s_alpha for a finite root given in the alpha basis."""
        root = tuple(root)
        norm = self.datum.finite_inner(root, root)
        if norm == 0:
            raise ContractError("cannot reflect in the zero vector")
        matrix = np.eye(self.n, dtype=np.int64)
        for k in range(self.n):
            unit = tuple(1 if i == k else 0 for i in range(self.n))
            coefficient = 2 * self.datum.finite_inner(unit, root) / norm
            if coefficient.denominator != 1:
                raise ContractError(f"{list(root)} is not a root of {self.datum.label}")
            for i in range(self.n):
                matrix[i, k] -= int(coefficient) * root[i]
        return FiniteWeylElement(matrix)

    def finite_element(self, w: FiniteWeylElement) -> AffineWeylElement:
        return AffineWeylElement(w, self._zero)

    def translation(self, mu: Sequence[int]) -> AffineWeylElement:
        mu = tuple(int(c) for c in mu)
        if len(mu) != self.n:
            raise ContractError(f"expected {self.n} M coordinates, got {len(mu)}")
        return AffineWeylElement(self.identity_finite, mu)

    def finite_inverse(self, w: FiniteWeylElement) -> FiniteWeylElement:
        inverse = self._inverses.get(w)
        if inverse is None:
            inverse = FiniteWeylElement(np.rint(np.linalg.inv(w.matrix)).astype(np.int64))
            self._inverses[w] = inverse
            self._inverses[inverse] = w
        return inverse

    def act_m(self, w: FiniteWeylElement, mu: Sequence[int]) -> IntVector:
        """Finite Weyl action on M written in the A basis."""
        if not any(mu):
            return self._zero
        image = w.matrix @ (self._e * np.asarray(mu, dtype=np.int64))
        if (image % self._e).any():
            raise DatumError(f"{self.datum.label}: M is not stable under the finite Weyl group")
        return tuple(int(x) for x in image // self._e)

    def multiply(self, x: AffineWeylElement, y: AffineWeylElement) -> AffineWeylElement:
        finite = x.finite * y.finite
        if not any(x.trans):
            return AffineWeylElement(finite, y.trans)
        moved = self.act_m(self.finite_inverse(y.finite), x.trans)
        return AffineWeylElement(finite, add_vectors(moved, y.trans))

    def inverse(self, x: AffineWeylElement) -> AffineWeylElement:
        shifted = self.act_m(x.finite, x.trans)
        return AffineWeylElement(self.finite_inverse(x.finite), tuple(-c for c in shifted))

    def from_word(self, word: Sequence[int]) -> AffineWeylElement:
        element = self.identity
        for j in word:
            element = self.multiply(element, self.simple_affine(j))
        return element

    def act_root(self, x: AffineWeylElement, coords: Sequence[int], delta: int = 0) -> Tuple[IntVector, int]:
        """Level-zero action on Q: x(beta + k delta) = w(beta) + (k - (beta, mu)) delta."""
        image = x.finite.apply(coords)
        if any(x.trans):
            delta -= self.datum.pair_root_lattice(coords, x.trans)
        return image, delta

    def act_level0(self, x: AffineWeylElement, v: WeightVector) -> WeightVector:
        if v.level != 0:
            raise ContractError(f"{v} has a Lambda_0 component; the level-zero action needs level 0")
        finite = v.finite
        image = [sum((int(x.finite.matrix[i, k]) * finite[k] for k in range(self.n)), Fraction(0))
                 for i in range(self.n)]
        mu = self.datum.from_m_coords(x.trans)
        delta = v.delta - self.datum.finite_inner(finite, mu)
        return WeightVector.from_finite(image, delta)

    def act_level1(self, x: AffineWeylElement, v: WeightVector) -> WeightVector:
        """x(v) = w(v + mu) on the finite part of h*."""
        mu = self.datum.from_m_coords(x.trans)
        shifted = [c + m for c, m in zip(v.finite, mu)]
        image = [sum((int(x.finite.matrix[i, k]) * shifted[k] for k in range(self.n)), Fraction(0))
                 for i in range(self.n)]
        return WeightVector.from_finite(image)

    @staticmethod
    def is_positive(coords: Sequence[int], delta: int) -> bool:
        return delta > 0 or (delta == 0 and is_positive_root_vector(coords))

    def is_right_descent(self, x: AffineWeylElement, j: int) -> bool:
        """True when x(alpha_j) is negative, i.e. l(x s_j) < l(x)."""
        coords, delta = self.datum.simple_root(j)
        image, image_delta = self.act_root(x, coords, delta)
        return not self.is_positive(image, image_delta)

    def is_left_descent(self, x: AffineWeylElement, j: int) -> bool:
        return self.is_right_descent(self.inverse(x), j)

    def first_right_descent(self, x: AffineWeylElement) -> Optional[int]:
        if x in self._first_descent:
            return self._first_descent[x]
        descent = next((j for j in range(self.n + 1) if self.is_right_descent(x, j)), None)
        self._first_descent[x] = descent
        return descent

    def reduced_word(self, x: AffineWeylElement) -> Tuple[int, ...]:
        """Lexicographically smallest reduced word, built by stripping the lowest left descent."""
        word = self._words.get(x)
        if word is not None:
            return word
        letters = []
        y = self.inverse(x)
        while not y.is_identity:
            j = self.first_right_descent(y)
            if j is None:
                raise DatumError(f"{self.datum.label}: non-identity element without descent")
            letters.append(j)
            y = self.multiply(y, self._affine_simple[j])
        word = tuple(letters)
        self._words[x] = word
        return word

    def length(self, x: AffineWeylElement) -> int:
        return len(self.reduced_word(x))

    def inversion_set(self, x: AffineWeylElement) -> FrozenSet[WeightVector]:
        roots = []
        z = self.identity
        for j in reversed(self.reduced_word(x)):
            coords, delta = self.datum.simple_root(j)
            image, image_delta = self.act_root(z, coords, delta)
            roots.append(WeightVector.from_finite(image, image_delta))
            z = self.multiply(z, self._affine_simple[j])
        return frozenset(roots)

    def length_formula(self, finite: FiniteWeylElement, mu: Sequence[int]) -> int:
        """Length of finite * lambda_mu summed over the finite positive roots."""
        total = 0
        for alpha in self.datum.roots:
            pairing = Fraction(2 * self.datum.pair_root_lattice(alpha, mu)) / self.datum.finite_inner(alpha, alpha)
            value = pairing / self._e_by_class[self.datum.root_class(alpha)]
            if value.denominator != 1:
                raise DatumError(f"{self.datum.label}: (mu, alpha^v)/e_alpha = {value} for alpha = {list(alpha)}")
            if is_positive_root_vector(finite.apply(alpha)):
                total += abs(int(value))
            else:
                total += abs(int(value) + 1)
        return total

    def all_reduced_words(self, x: AffineWeylElement) -> List[Tuple[int, ...]]:
        memo: Dict[AffineWeylElement, List[Tuple[int, ...]]] = {}

        def words_of(element: AffineWeylElement) -> List[Tuple[int, ...]]:
            if element.is_identity:
                return [()]
            if element in memo:
                return memo[element]
            inverse = self.inverse(element)
            found = []
            for j in range(self.n + 1):
                if self.is_right_descent(inverse, j):
                    rest = self.multiply(self._affine_simple[j], element)
                    found.extend((j,) + tail for tail in words_of(rest))
            memo[element] = found
            return found

        return sorted(words_of(x))

    def finite_elements(self) -> List[Tuple[FiniteWeylElement, Tuple[int, ...]]]:
        """All of W0 with lexicographically least reduced words, in (length, word) order."""
        if self._finite_elements is None:
            order = [(self.identity_finite, ())]
            seen = {self.identity_finite}
            index = 0
            while index < len(order):
                w, word = order[index]
                index += 1
                for j in range(1, self.n + 1):
                    v = w * self._finite_simple[j]
                    if v not in seen:
                        seen.add(v)
                        order.append((v, word + (j,)))
            self._finite_elements = order
            logger.debug(f"{self.datum.label}: |W0| = {len(order)}")
        return self._finite_elements

    def enumerate_elements(self, max_length: int) -> Dict[AffineWeylElement, int]:
        lengths = {self.identity: 0}
        frontier = [self.identity]
        for depth in range(1, max_length + 1):
            following = []
            for x in frontier:
                for j in range(self.n + 1):
                    y = self.multiply(x, self._affine_simple[j])
                    if y not in lengths:
                        lengths[y] = depth
                        following.append(y)
            frontier = following
        return lengths

    def cross_check_lengths(self, max_length: int) -> List[str]:
        """Compare BFS depth, reduced word, inversion set and length formula up to max_length."""
        mismatches = []
        for x, depth in self.enumerate_elements(max_length).items():
            values = (len(self.reduced_word(x)), len(self.inversion_set(x)), self.length_formula(x.finite, x.trans))
            if any(v != depth for v in values):
                mismatches.append(f"word {list(self.reduced_word(x))}: depth {depth}, (word, Pi, formula) = {values}")
        if mismatches:
            logger.warning(f"{self.datum.label}: {len(mismatches)} length mismatches up to length {max_length}")
        return mismatches

    def minimal_conjugator(self, root) -> Tuple[FiniteWeylElement, int]:
        coords = root.finite_integers() if isinstance(root, WeightVector) else tuple(root)
        if coords not in self.datum.roots:
            raise ContractError(f"{list(coords)} is not a positive root of {self.datum.label}")
        for w, _ in self.finite_elements():
            image = w.apply(coords)
            if sum(image) == 1 and all(c in (0, 1) for c in image):
                return w, image.index(1) + 1
        raise DatumError(f"{self.datum.label}: no Weyl conjugate of {list(coords)} is simple")

    def tau(self, beta: Sequence[int], k: int = 0) -> DoubleAffineWeylElement:
        return DoubleAffineWeylElement(self.identity, tuple(int(c) for c in beta), int(k))

    def embed(self, x: AffineWeylElement) -> DoubleAffineWeylElement:
        return DoubleAffineWeylElement(x, self._zero, 0)

    def multiply_double(self, g: DoubleAffineWeylElement, h: DoubleAffineWeylElement) -> DoubleAffineWeylElement:
        moved, shift = self.act_root(self.inverse(h.w), g.beta, 0)
        return DoubleAffineWeylElement(
            self.multiply(g.w, h.w), add_vectors(moved, h.beta), g.k + h.k + shift
        )

    def invert_double(self, g: DoubleAffineWeylElement) -> DoubleAffineWeylElement:
        moved, shift = self.act_root(g.w, g.beta, 0)
        return DoubleAffineWeylElement(self.inverse(g.w), tuple(-c for c in moved), -shift - g.k)

    def rescale_to_lattice(self, w: FiniteWeylElement) -> FiniteWeylElement:
        """Matrix of w on M in the A basis; this is the matching element of the iota-dual group."""
        e = self._e
        scaled = w.matrix * e[np.newaxis, :]
        if (scaled % e[:, np.newaxis]).any():
            raise DatumError(f"{self.datum.label}: Weyl matrix does not preserve M")
        return FiniteWeylElement(scaled // e[:, np.newaxis])

    def rescale_from_lattice(self, w: FiniteWeylElement) -> FiniteWeylElement:
        e = self._e
        scaled = w.matrix * e[:, np.newaxis]
        return FiniteWeylElement(scaled // e[np.newaxis, :])

    def phi_weyl(self, g: DoubleAffineWeylElement, target: "WeylGroup",
                 correspondence: LatticeCorrespondence) -> DoubleAffineWeylElement:
        """w -> w, lambda_mu -> tau_{psi_X mu}, tau_beta -> lambda_{psi_Y beta}, tau_delta -> tau_delta^-1."""
        gamma = correspondence.psi_x(g.w.trans)
        nu = correspondence.psi_y(g.beta)
        finite = self.rescale_to_lattice(g.w.finite)
        k = target.datum.pair_root_lattice(gamma, nu) - g.k
        return DoubleAffineWeylElement(AffineWeylElement(finite, nu), gamma, k)
