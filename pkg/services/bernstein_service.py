import logging
from typing import Dict, Tuple

from models.coeffs import LaurentCoefficient
from models.daha import DahaElement
from models.weyl import FiniteWeylElement
from utils.errors import ContractError
from utils.helpers import add_vectors, is_positive_root_vector

from .hecke_service import HeckeAlgebra, _accumulate

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]
BernsteinKey = Tuple[IntVector, FiniteWeylElement]
BernsteinForm = Dict[BernsteinKey, LaurentCoefficient]


class BernsteinPresentation:
    """Change of basis between {T_u} and {Y_mu T_w} on the affine Hecke subalgebra.

    T_0 enters as T_{s_theta}^-1 Y_{-theta}; Y is moved to the left of finite T's with
    T_j Y_nu = Y_{s_j nu} T_j - c Y_{s_j nu} (1 + ... + Y_{(k-1) A_j})        if k > 0,
    T_j Y_nu = Y_{s_j nu} T_j + c Y_nu (1 + ... + Y_{(|k|-1) A_j})            if k < 0,
    where k = (nu, A_j^v) and c = t_j^(1/2) - t_j^(-1/2).
    """

    def __init__(self, algebra: HeckeAlgebra):
        self.algebra = algebra
        self.datum = algebra.datum
        self.weyl = algebra.weyl
        self.n = algebra.n
        self._zero = (0,) * self.n
        self._one = LaurentCoefficient.one()
        self._ty: Dict[Tuple[FiniteWeylElement, IntVector], BernsteinForm] = {}
        self._theta_word = self.weyl.reduced_word(self.weyl.finite_element(self.weyl.s_theta))
        self._minus_theta = tuple(-c for c in self.datum.theta_m)

    def _finite_product(self, w: FiniteWeylElement, j: int, inverse: bool = False) -> Dict[FiniteWeylElement, LaurentCoefficient]:
        s_j = self.weyl.simple_reflection(j)
        unit = self.algebra.hecke_unit(j)
        descent = not is_positive_root_vector(w.matrix[:, j - 1].tolist())
        if inverse:
            return {w * s_j: self._one} if descent else {w * s_j: self._one, w: -unit}
        return {w * s_j: self._one, w: unit} if descent else {w * s_j: self._one}

    def _right_finite(self, form: BernsteinForm, j: int, inverse: bool = False) -> BernsteinForm:
        acc: BernsteinForm = {}
        for (mu, w), c in form.items():
            for v, c2 in self._finite_product(w, j, inverse).items():
                _accumulate(acc, (mu, v), c * c2)
        return acc

    def _push_y(self, j: int, nu: IntVector) -> BernsteinForm:
        """T_j Y_nu as {(nu', e or s_j): coefficient}."""
        s_j = self.weyl.simple_reflection(j)
        identity = self.weyl.identity_finite
        k = self.datum.lattice_coroot_pairing(nu, j)
        if k == 0:
            return {(nu, s_j): self._one}
        reflected = tuple(c - k if i == j - 1 else c for i, c in enumerate(nu))
        unit = self.algebra.hecke_unit(j)
        out: BernsteinForm = {(reflected, s_j): self._one}
        if k > 0:
            for i in range(k):
                shifted = tuple(c + i if idx == j - 1 else c for idx, c in enumerate(reflected))
                _accumulate(out, (shifted, identity), -unit)
        else:
            for i in range(-k):
                shifted = tuple(c + i if idx == j - 1 else c for idx, c in enumerate(nu))
                _accumulate(out, (shifted, identity), unit)
        return out

    def _t_times_y(self, w: FiniteWeylElement, nu: IntVector) -> BernsteinForm:
        if w.is_identity or not any(nu):
            return {(nu, w): self._one}
        key = (w, nu)
        cached = self._ty.get(key)
        if cached is not None:
            return cached
        j = next(j for j in range(1, self.n + 1)
                 if not is_positive_root_vector(w.matrix[:, j - 1].tolist()))
        shorter = w * self.weyl.simple_reflection(j)
        result: BernsteinForm = {}
        for (nu2, v), c in self._push_y(j, nu).items():
            for (nu3, v2), c2 in self._t_times_y(shorter, nu2).items():
                c12 = c * c2
                if v.is_identity:
                    _accumulate(result, (nu3, v2), c12)
                else:
                    for v3, c3 in self._finite_product(v2, j).items():
                        _accumulate(result, (nu3, v3), c12 * c3)
        self._ty[key] = result
        return result

    def _right_y(self, form: BernsteinForm, nu: IntVector) -> BernsteinForm:
        acc: BernsteinForm = {}
        for (mu, w), c in form.items():
            for (nu2, v), c2 in self._t_times_y(w, nu).items():
                _accumulate(acc, (add_vectors(mu, nu2), v), c * c2)
        return acc

    def _right_generator(self, form: BernsteinForm, j: int) -> BernsteinForm:
        if j > 0:
            return self._right_finite(form, j)
        for i in reversed(self._theta_word):
            form = self._right_finite(form, i, inverse=True)
        return self._right_y(form, self._minus_theta)

    def to_bernstein(self, h: DahaElement) -> BernsteinForm:
        if any(any(beta) for beta, _ in h.terms):
            raise ContractError("to_bernstein needs an element of the affine Hecke algebra (no X part)")
        acc: BernsteinForm = {}
        for (_, u), c in h.terms.items():
            form: BernsteinForm = {(self._zero, self.weyl.identity_finite): self._one}
            for j in self.weyl.reduced_word(u):
                form = self._right_generator(form, j)
            for key, c2 in form.items():
                _accumulate(acc, key, c * c2)
        return acc

    def from_bernstein(self, form: BernsteinForm) -> DahaElement:
        total = self.algebra.zero()
        for (mu, w), c in form.items():
            term = self.algebra.multiply(self.algebra.y_element(mu), self.algebra.t_word(self.weyl.finite_element(w)))
            total = total + term * c
        return total

    def render(self, form: BernsteinForm):
        rows = []
        for (mu, w), c in form.items():
            word = self.weyl.reduced_word(self.weyl.finite_element(w))
            rows.append({"mu": list(mu), "w_word": list(word), "coeff": str(c)})
        return sorted(rows, key=lambda row: (row["mu"], len(row["w_word"]), row["w_word"]))
