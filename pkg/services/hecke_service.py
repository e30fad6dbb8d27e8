import logging
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from models.cartan import AffineCartanDatum, LatticeVector
from models.coeffs import LaurentCoefficient
from models.daha import DahaElement, TermKey
from models.weyl import AffineWeylElement
from models.words import GeneratorWord, Token, WordSum
from utils.errors import ContractError, DatumError, ExpressionError
from utils.helpers import add_vectors, ceil_div

from .weyl_service import WeylGroup

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]
Coefficient = Union[int, Fraction, LaurentCoefficient]


def _accumulate(acc: Dict, key, coefficient: LaurentCoefficient):
    current = acc.get(key)
    total = coefficient if current is None else current + coefficient
    if total.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = total


def _primitive_solution(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> IntVector:
    """Smallest positive integer multiple of the solution of matrix x = rhs (integer, nonsingular matrix)."""
    a = np.array(matrix, dtype=float)
    det = int(round(np.linalg.det(a)))
    if det == 0:
        raise DatumError("singular lattice Cartan matrix")
    adjugate = np.rint(np.linalg.inv(a) * det).astype(np.int64)
    # x = v / |det|
    v = [int(x) for x in (adjugate @ np.array(rhs, dtype=np.int64)) * (1 if det > 0 else -1)]
    divisor = gcd(abs(det), *v)
    return tuple(x // divisor for x in v)

class HeckeAlgebra:
    """Double affine Hecke algebra of one affine type in the normal form X_beta T_u.

    Products are computed by rewriting: T_u T_j through the quadratic relation and
    T_j X_beta through the cross relation. The memo tables below only ever hold
    exact products, so results do not depend on their state; an instance should
    still not be shared between concurrent jobs.
    """

    def __init__(self, datum: AffineCartanDatum, weyl: Optional[WeylGroup] = None):
        self.datum = datum
        self.weyl = weyl or WeylGroup(datum)
        self.n = datum.n
        self._zero = (0,) * self.n
        self._one = LaurentCoefficient.one()
        self._units = tuple(LaurentCoefficient.hecke_unit(cls) for cls in datum.length_class)

        self._times_t: Dict[Tuple[AffineWeylElement, int], Dict[AffineWeylElement, LaurentCoefficient]] = {}
        self._times_t_inverse: Dict[Tuple[AffineWeylElement, int], Dict[AffineWeylElement, LaurentCoefficient]] = {}
        self._tt: Dict[Tuple[AffineWeylElement, AffineWeylElement], Dict[AffineWeylElement, LaurentCoefficient]] = {}
        self._tx: Dict[Tuple[AffineWeylElement, IntVector], Dict[TermKey, LaurentCoefficient]] = {}
        self._pushes: Dict[Tuple[int, IntVector], Dict[TermKey, LaurentCoefficient]] = {}
        self._y: Dict[IntVector, DahaElement] = {}
        self._decompositions: Dict[IntVector, Tuple[IntVector, IntVector]] = {}
        self._antidominant: Optional[IntVector] = None

    # basic elements

    def hecke_unit(self, j: int) -> LaurentCoefficient:
        """t_j^(1/2) - t_j^(-1/2); node 0 uses the parameter of the long roots."""
        return self._units[j]

    def element(self, terms: Dict[TermKey, LaurentCoefficient]) -> DahaElement:
        return DahaElement(self, terms)

    def zero(self) -> DahaElement:
        return DahaElement(self, {})

    def one(self) -> DahaElement:
        return DahaElement(self, {(self._zero, self.weyl.identity): self._one})

    def scalar(self, value: Coefficient) -> DahaElement:
        return DahaElement(self, {(self._zero, self.weyl.identity): LaurentCoefficient.coerce(value)})

    def _check_node(self, j: int):
        if not 0 <= j <= self.n:
            raise ContractError(f"{self.datum.label} has generators T0..T{self.n}, got T{j}")

    def t_generator(self, j: int) -> DahaElement:
        self._check_node(j)
        return DahaElement(self, {(self._zero, self.weyl.simple_affine(j)): self._one})

    def t_inverse(self, j: int) -> DahaElement:
        self._check_node(j)
        return self.t_generator(j) - self.hecke_unit(j)

    def _split_q(self, beta) -> Tuple[IntVector, int]:
        if isinstance(beta, LatticeVector):
            if beta.tag == "M":
                raise ContractError("X monomials take elements of Q, not M")
            finite, delta = beta.finite, beta.delta
        elif len(beta) == 2 and isinstance(beta[0], (tuple, list)):
            finite, delta = tuple(beta[0]), int(beta[1])
        else:
            finite, delta = tuple(beta), 0
        finite = tuple(int(c) for c in finite)
        if len(finite) != self.n:
            raise ContractError(f"expected {self.n} coordinates for {self.datum.label}, got {len(finite)}")
        return finite, delta

    def x_monomial(self, beta, delta: int = 0) -> DahaElement:
        finite, own_delta = self._split_q(beta)
        coefficient = LaurentCoefficient.monomial(q=-(own_delta + delta))
        return DahaElement(self, {(finite, self.weyl.identity): coefficient})

    def t_word(self, w: AffineWeylElement) -> DahaElement:
        return DahaElement(self, {(self._zero, w): self._one})

    def t_word_inverse(self, w: AffineWeylElement) -> DahaElement:
        """T_w^-1 = T_{j_l}^-1 ... T_{j_1}^-1 for the reduced word (j_1, ..., j_l)."""
        result = self.one()
        for j in reversed(self.weyl.reduced_word(w)):
            result = self.right_multiply_inverse_generator(result, j)
        return result

    # rewriting kernels

    def _generator_product(self, u: AffineWeylElement, j: int) -> Dict[AffineWeylElement, LaurentCoefficient]:
        """T_u T_j in the T basis."""
        key = (u, j)
        cached = self._times_t.get(key)
        if cached is None:
            us = self.weyl.multiply(u, self.weyl.simple_affine(j))
            if self.weyl.is_right_descent(u, j):
                cached = {us: self._one, u: self._units[j]}
            else:
                cached = {us: self._one}
            self._times_t[key] = cached
        return cached

    def _inverse_generator_product(self, u: AffineWeylElement, j: int) -> Dict[AffineWeylElement, LaurentCoefficient]:
        """T_u T_j^-1 in the T basis."""
        key = (u, j)
        cached = self._times_t_inverse.get(key)
        if cached is None:
            us = self.weyl.multiply(u, self.weyl.simple_affine(j))
            if self.weyl.is_right_descent(u, j):
                cached = {us: self._one}
            else:
                cached = {us: self._one, u: -self._units[j]}
            self._times_t_inverse[key] = cached
        return cached

    def _t_times_t(self, u: AffineWeylElement, v: AffineWeylElement) -> Dict[AffineWeylElement, LaurentCoefficient]:
        if v.is_identity:
            return {u: self._one}
        key = (u, v)
        cached = self._tt.get(key)
        if cached is None:
            current = {u: self._one}
            for j in self.weyl.reduced_word(v):
                following: Dict[AffineWeylElement, LaurentCoefficient] = {}
                for w, c in current.items():
                    for w2, c2 in self._generator_product(w, j).items():
                        _accumulate(following, w2, c * c2)
                current = following
            cached = current
            self._tt[key] = cached
        return cached

    def _push(self, j: int, beta: IntVector) -> Dict[TermKey, LaurentCoefficient]:
        """T_j X_beta for finite beta, as {(gamma, e or s_j): coefficient}."""
        key = (j, beta)
        cached = self._pushes.get(key)
        if cached is not None:
            return cached
        k = self.datum.coroot_pairing(beta, j)
        s_j = self.weyl.simple_affine(j)
        identity = self.weyl.identity
        if k == 0:
            cached = {(beta, s_j): self._one}
        else:
            root, root_delta = self.datum.simple_root(j)
            reflected = tuple(b - k * r for b, r in zip(beta, root))
            cached = {(reflected, s_j): LaurentCoefficient.monomial(q=k * root_delta)}
            unit = self._units[j]
            if k > 0:
                for i in range(k):
                    gamma = tuple(b - i * r for b, r in zip(beta, root))
                    _accumulate(cached, (gamma, identity), unit * LaurentCoefficient.monomial(q=i * root_delta))
            else:
                for i in range(-k):
                    gamma = tuple(b - i * r for b, r in zip(reflected, root))
                    _accumulate(cached, (gamma, identity), -unit * LaurentCoefficient.monomial(q=(k + i) * root_delta))
        self._pushes[key] = cached
        return cached

    def _t_times_x(self, u: AffineWeylElement, beta: IntVector) -> Dict[TermKey, LaurentCoefficient]:
        """T_u X_beta in normal form, pushing X to the left along a reduced word of u."""
        if u.is_identity or not any(beta):
            return {(beta, u): self._one}
        key = (u, beta)
        cached = self._tx.get(key)
        if cached is not None:
            return cached
        j = self.weyl.first_right_descent(u)
        shorter = self.weyl.multiply(u, self.weyl.simple_affine(j))
        result: Dict[TermKey, LaurentCoefficient] = {}
        for (gamma, w), c in self._push(j, beta).items():
            for (gamma2, v), c2 in self._t_times_x(shorter, gamma).items():
                c12 = c * c2
                if w.is_identity:
                    _accumulate(result, (gamma2, v), c12)
                else:
                    for v2, c3 in self._generator_product(v, j).items():
                        _accumulate(result, (gamma2, v2), c12 * c3)
        self._tx[key] = result
        return result

    def push_x_through_t(self, j: int, beta) -> DahaElement:
        """T_j X_beta in normal form, for beta in Q (delta part allowed)."""
        self._check_node(j)
        finite, delta = self._split_q(beta)
        shift = LaurentCoefficient.monomial(q=-delta)
        return DahaElement(self, {key: c * shift for key, c in self._push(j, finite).items()})

    # products

    def multiply(self, a: DahaElement, b: DahaElement) -> DahaElement:
        acc: Dict[TermKey, LaurentCoefficient] = {}
        for (beta1, u1), c1 in a.terms.items():
            for (beta2, u2), c2 in b.terms.items():
                c12 = c1 * c2
                for (gamma, v), c3 in self._t_times_x(u1, beta2).items():
                    beta = add_vectors(beta1, gamma)
                    c123 = c12 * c3
                    for w, c4 in self._t_times_t(v, u2).items():
                        _accumulate(acc, (beta, w), c123 * c4)
        return DahaElement(self, acc)

    def right_multiply_generator(self, h: DahaElement, j: int) -> DahaElement:
        acc: Dict[TermKey, LaurentCoefficient] = {}
        for (beta, u), c in h.terms.items():
            for v, c2 in self._generator_product(u, j).items():
                _accumulate(acc, (beta, v), c * c2)
        return DahaElement(self, acc)

    def right_multiply_inverse_generator(self, h: DahaElement, j: int) -> DahaElement:
        acc: Dict[TermKey, LaurentCoefficient] = {}
        for (beta, u), c in h.terms.items():
            for v, c2 in self._inverse_generator_product(u, j).items():
                _accumulate(acc, (beta, v), c * c2)
        return DahaElement(self, acc)

    # Y lattice

    def antidominant_element(self) -> IntVector:
        """A strictly antidominant element of M: (a, A_j^v) <= -1 for every j >= 1."""
        if self._antidominant is None:
            rows = self.datum.lattice_cartan
            candidate = None
            for bound in range(1, 4):
                boxes = product(range(-bound, 1), repeat=self.n)
                hits = [v for v in boxes if all(self.datum.lattice_coroot_pairing(v, j) <= -1
                                               for j in range(1, self.n + 1))]
                if hits:
                    candidate = min(hits, key=lambda v: (-sum(v), v))
                    break
            if candidate is None:
                candidate = _primitive_solution(rows, [-1] * self.n)
            self._antidominant = candidate
            logger.debug(f"{self.datum.label}: strictly antidominant element {list(candidate)}")
        return self._antidominant

    def is_antidominant(self, mu: Sequence[int]) -> bool:
        return all(self.datum.lattice_coroot_pairing(mu, j) <= 0 for j in range(1, self.n + 1))

    def _check_m(self, mu) -> IntVector:
        if isinstance(mu, LatticeVector):
            if mu.tag != "M":
                raise ContractError("Y elements are indexed by M")
            mu = mu.coords
        mu = tuple(int(c) for c in mu)
        if len(mu) != self.n:
            raise ContractError(f"expected {self.n} M coordinates for {self.datum.label}, got {len(mu)}")
        return mu

    def y_decomposition(self, mu) -> Tuple[IntVector, IntVector]:
        """(nu1, nu2), both antidominant, with mu = nu1 - nu2 and nu2 = N a for the smallest N >= 0."""
        mu = self._check_m(mu)
        cached = self._decompositions.get(mu)
        if cached is None:
            if self.is_antidominant(mu):
                cached = (mu, self._zero)
            else:
                anchor = self.antidominant_element()
                steps = 0
                for j in range(1, self.n + 1):
                    pairing = self.datum.lattice_coroot_pairing(mu, j)
                    if pairing > 0:
                        steps = max(steps, ceil_div(pairing, -self.datum.lattice_coroot_pairing(anchor, j)))
                nu2 = tuple(steps * c for c in anchor)
                nu1 = add_vectors(mu, nu2)
                if not (self.is_antidominant(nu1) and self.is_antidominant(nu2)):
                    raise DatumError(f"{self.datum.label}: antidominant decomposition of {list(mu)} failed")
                cached = (nu1, nu2)
            self._decompositions[mu] = cached
        return cached

    def right_multiply_y(self, h: DahaElement, mu) -> DahaElement:
        """h Y_mu, one generator at a time along the words of lambda_nu1 and lambda_nu2^-1."""
        nu1, nu2 = self.y_decomposition(mu)
        for j in self.weyl.reduced_word(self.weyl.translation(nu1)):
            h = self.right_multiply_generator(h, j)
        for j in reversed(self.weyl.reduced_word(self.weyl.translation(nu2))):
            h = self.right_multiply_inverse_generator(h, j)
        return h

    def y_element(self, mu) -> DahaElement:
        """Y_mu = T_{lambda_nu1} T_{lambda_nu2}^-1 with mu = nu1 - nu2 and both nu antidominant."""
        mu = self._check_m(mu)
        cached = self._y.get(mu)
        if cached is None:
            cached = self.right_multiply_y(self.one(), mu)
            self._y[mu] = cached
        return cached

    # words

    def token_element(self, token: Token) -> DahaElement:
        if token.kind == "T":
            return self.t_generator(token.index)
        if token.kind == "T'":
            return self.t_inverse(token.index)
        if token.kind == "X":
            return self.x_monomial(token.coords, token.delta)
        if token.kind == "Y":
            return self.y_element(token.coords)
        if token.kind == "c":
            return self.scalar(token.scalar)
        raise ExpressionError(f"unknown token {token!r}")

    def _right_multiply_token(self, h: DahaElement, token: Token) -> DahaElement:
        if token.kind == "T":
            self._check_node(token.index)
            return self.right_multiply_generator(h, token.index)
        if token.kind == "T'":
            self._check_node(token.index)
            return self.right_multiply_inverse_generator(h, token.index)
        if token.kind == "Y":
            return self.right_multiply_y(h, token.coords)
        if token.kind == "c":
            return h * token.scalar
        return self.multiply(h, self.token_element(token))

    def evaluate_word(self, word: Iterable[Token]) -> DahaElement:
        result = self.one()
        for token in word:
            try:
                result = self._right_multiply_token(result, token)
            except ContractError as e:
                raise ExpressionError(f"token {token} is not valid for {self.datum.label}: {e}")
        return result

    def evaluate(self, expression: Union[WordSum, GeneratorWord, Iterable[Token]]) -> DahaElement:
        """Left-to-right product of token images, summed over the terms of a WordSum."""
        if not isinstance(expression, WordSum):
            return self.evaluate_word(expression)
        total = self.zero()
        for coefficient, word in expression.terms:
            total = total + self.evaluate_word(word) * coefficient
        return total

    def cache_sizes(self) -> Dict[str, int]:
        return {
            "t_products": len(self._tt),
            "x_pushes": len(self._tx),
            "y_elements": len(self._y),
            "reduced_words": len(self.weyl._words),
        }

