import logging
import random
from datetime import datetime
from typing import Dict, Iterable, List, Optional, Union

from models.cartan import AffineCartanDatum, LatticeCorrespondence
from models.coeffs import LaurentCoefficient
from models.daha import DahaElement
from models.reports import CheckResult, Report
from models.words import (GeneratorWord, Token, WordSum, scalar_token, t_inverse_token,
                          t_token, x_token, y_token)
from utils.errors import ContractError, DatumError
from utils.helpers import unit_vector

from .cartan_service import iota_datum
from .hecke_service import HeckeAlgebra
from .relation_service import defining_relations

logger = logging.getLogger(__name__)


class PhiMap:
    """The duality map from the algebra of a type to the algebra of its iota-dual.

    T_j -> (T_j^iota)^-1 for j >= 1, Y_mu -> X^iota_mu, X_beta -> Y^iota_beta, q -> q^-1,
    t -> t^-1 with t parameters renamed by the length class of the matching node.
    T_0 is first rewritten as T_{s_theta}^-1 Y_{-theta}.
    """

    def __init__(self, source: HeckeAlgebra, target: HeckeAlgebra, correspondence: LatticeCorrespondence):
        if correspondence.source != source.datum.label or correspondence.target != target.datum.label:
            raise DatumError(
                f"correspondence {correspondence.source} -> {correspondence.target} does not match "
                f"{source.datum.label} -> {target.datum.label}"
            )
        self.source = source
        self.target = target
        self.correspondence = correspondence
        self.class_map = self._class_map(source.datum, target.datum)
        self._theta_word = source.weyl.reduced_word(source.weyl.finite_element(source.weyl.s_theta))
        self._theta_m = source.datum.theta_m
        self._phi_t0: Optional[DahaElement] = None

    @staticmethod
    def _class_map(source: AffineCartanDatum, target: AffineCartanDatum) -> Dict[str, str]:
        mapping: Dict[str, str] = {}
        for j in range(1, source.n + 1):
            cls, image = source.length_class[j], target.length_class[j]
            if mapping.setdefault(cls, image) != image:
                raise DatumError(f"{source.label} -> {target.label}: node {j} breaks the length class matching")
        return mapping

    def coefficient(self, c) -> LaurentCoefficient:
        return LaurentCoefficient.coerce(c).bar().substitute(self.class_map)

    def phi_token(self, token: Token) -> WordSum:
        if token.kind == "T":
            if token.index > 0:
                return WordSum.of(t_inverse_token(token.index))
            letters = [t_token(j) for j in reversed(self._theta_word)]
            minus_theta = tuple(-c for c in self._theta_m)
            return WordSum.of(*letters, x_token(self.correspondence.psi_x(minus_theta)))
        if token.kind == "T'":
            if token.index > 0:
                return WordSum.of(t_token(token.index))
            letters = [t_inverse_token(j) for j in self._theta_word]
            return WordSum.of(x_token(self.correspondence.psi_x(self._theta_m)), *letters)
        if token.kind == "X":
            nu = self.correspondence.psi_y(token.coords)
            return WordSum([(LaurentCoefficient.monomial(q=token.delta), (y_token(nu),))])
        if token.kind == "Y":
            return WordSum.of(x_token(self.correspondence.psi_x(token.coords)))
        return WordSum.of(scalar_token(self.coefficient(token.scalar)))

    def phi_word(self, word: Iterable[Token]) -> WordSum:
        image = WordSum.scalar(1)
        for token in word:
            image = image * self.phi_token(token)
        return image

    def phi_wordsum(self, expression: Union[WordSum, GeneratorWord]) -> WordSum:
        if not isinstance(expression, WordSum):
            return self.phi_word(expression)
        total = WordSum()
        for c, word in expression.terms:
            total = total + self.phi_word(word) * self.coefficient(c)
        return total

    def phi_apply(self, expression: Union[WordSum, GeneratorWord]) -> DahaElement:
        return self.target.evaluate(self.phi_wordsum(expression))

    def _phi_t0_image(self) -> DahaElement:
        if self._phi_t0 is None:
            self._phi_t0 = self.target.evaluate(self.phi_token(t_token(0)))
        return self._phi_t0

    def phi_element(self, h: DahaElement) -> DahaElement:
        """phi on a normal form: sum phi(c) Y^iota_beta phi(T_j1) ... phi(T_jl) along a reduced word of u."""
        total = self.target.zero()
        weyl = self.source.weyl
        for (beta, u), c in h.terms.items():
            image = self.target.y_element(self.correspondence.psi_y(beta))
            for j in weyl.reduced_word(u):
                if j > 0:
                    image = self.target.right_multiply_inverse_generator(image, j)
                else:
                    image = self.target.multiply(image, self._phi_t0_image())
            total = total + image * self.coefficient(c)
        return total


def generator_tokens(datum: AffineCartanDatum) -> List[Token]:
    tokens: List[Token] = []
    for j in range(datum.n + 1):
        tokens += [t_token(j), t_inverse_token(j)]
    for j in range(datum.n):
        a_j = unit_vector(datum.n, j)
        minus = tuple(-c for c in a_j)
        tokens += [x_token(a_j), x_token(minus), y_token(a_j), y_token(minus)]
    tokens.append(x_token((0,) * datum.n, 1))
    return tokens


def _sample_scalars() -> List[Token]:
    return [
        scalar_token(LaurentCoefficient.monomial(q=1)),
        scalar_token(LaurentCoefficient.t_power("s", 1)),
        scalar_token(LaurentCoefficient.t_power("l", -1)),
        scalar_token(LaurentCoefficient.monomial(q=-1, tl=1, coefficient=2)),
    ]


class InvolutionService:
    """Transport of the defining relations through phi and the checks around it.

    Every call builds fresh algebras, so jobs can run side by side in the kernel's pool.
    """

    def __init__(self, table_path: Optional[str] = None):
        self.table_path = table_path

    def build(self, datum: AffineCartanDatum):
        target_datum, correspondence = iota_datum(datum, self.table_path)
        back_datum, back_correspondence = iota_datum(target_datum, self.table_path)
        if back_datum != datum:
            raise DatumError(f"iota({target_datum.label}) = {back_datum.label}, expected {datum.label}")
        source = HeckeAlgebra(datum)
        target = HeckeAlgebra(target_datum)
        phi = PhiMap(source, target, correspondence)
        phi_back = PhiMap(target, source, back_correspondence)
        return phi, phi_back

    def relation_checks(self, phi: PhiMap) -> List[CheckResult]:
        checks = []
        for relation in defining_relations(phi.source.datum):
            holds = CheckResult.compare(
                f"source: {relation.name}",
                phi.source.evaluate(relation.lhs), phi.source.evaluate(relation.rhs),
            )
            checks.append(holds)
            checks.append(CheckResult.compare(
                f"transported: {relation.name}", phi.phi_apply(relation.lhs), phi.phi_apply(relation.rhs),
            ))
        return checks

    def involutivity_checks(self, phi: PhiMap, phi_back: PhiMap) -> List[CheckResult]:
        checks = []
        for token in generator_tokens(phi.source.datum):
            image = phi_back.phi_apply(phi.phi_wordsum(WordSum.of(token)))
            checks.append(CheckResult.compare(f"phi^iota phi({token})", image, phi.source.token_element(token)))
        for token in _sample_scalars():
            twice = phi_back.coefficient(phi.coefficient(token.scalar))
            checks.append(CheckResult.compare(f"phi^iota phi({token})", twice, token.scalar))
        checks.append(CheckResult.condition(
            "lattice correspondences compose to the identity",
            phi.correspondence.composes_to_identity(phi_back.correspondence),
        ))
        return checks

    def case_analysis(self, phi: PhiMap, phi_back: PhiMap) -> List[CheckResult]:
        """The node-0 relation of the dual algebra pulled back to the source algebra.

        With p = 1 it is T_0^-1 X_alpha_0 itself; otherwise it is conjugate by T_0 to
        E = T_{s_gamma}^-1 X_gamma, gamma = theta - theta_s, and E satisfies the short quadratic relation.
        """
        source, target = phi.source, phi.target
        datum, weyl = source.datum, source.weyl
        theta_iota = target.datum.theta_finite
        minus_alpha0_iota = WordSum.of(x_token(theta_iota, -1), t_token(0))
        pulled = phi_back.phi_apply(minus_alpha0_iota)
        q_inv = LaurentCoefficient.monomial(q=-1)
        checks = []

        s_theta_iota = weyl.rescale_from_lattice(target.weyl.s_theta)
        checks.append(CheckResult.condition(
            "s_theta^iota = s_theta_s", s_theta_iota == weyl.reflection(datum.theta_s_finite),
        ))

        t0 = source.t_generator(0)
        t0_inverse = source.t_inverse(0)
        if datum.p == 1:
            theta = datum.theta_finite
            direct = source.evaluate(WordSum.of(t_inverse_token(0), x_token(tuple(-c for c in theta), 1)))
            checks.append(CheckResult.compare("p=1: pulled back relation is T0^-1 X_alpha0", pulled, direct))
            chain = source.evaluate(WordSum([(q_inv, (
                y_token(datum.theta_m), *[t_token(j) for j in phi._theta_word], x_token(tuple(-c for c in theta)),
            ))]))
            checks.append(CheckResult.compare("p=1: q^-1 Y_theta T_s_theta X_-theta = T0^-1 X_alpha0", chain, direct))
            unit = source.hecke_unit(0)
            checks.append(CheckResult.compare("p=1: quadratic relation", pulled * pulled, pulled * unit + 1))
            return checks

        theta_s = datum.theta_s_finite
        gamma = tuple(a - b for a, b in zip(datum.theta_finite, theta_s))
        coroot = datum.to_m_coords(_coroot(datum, theta_s))
        s_gamma = weyl.finite_element(weyl.reflection(gamma))
        s_theta_s = weyl.finite_element(weyl.reflection(theta_s))
        chain = q_inv * source.multiply(
            source.multiply(source.y_element(coroot), source.t_word(s_theta_s)),
            source.x_monomial(tuple(-c for c in theta_s)),
        )
        checks.append(CheckResult.compare("p!=1: pulled back relation = q^-1 Y_theta_s^v T_s_theta_s X_-theta_s",
                                          pulled, chain))
        e = source.multiply(source.t_word_inverse(s_gamma), source.x_monomial(gamma))
        conjugated = source.multiply(source.multiply(t0_inverse, e), t0)
        checks.append(CheckResult.compare("p!=1: q^-1 Y_theta_s^v T_s_theta_s X_-theta_s = T0^-1 E T0",
                                          chain, conjugated))
        checks.append(CheckResult.compare("p!=1: T0 (pulled) T0^-1 = E",
                                          source.multiply(source.multiply(t0, pulled), t0_inverse), e))
        unit = LaurentCoefficient.hecke_unit("s")
        checks.append(CheckResult.compare("p!=1: short quadratic relation", pulled * pulled, pulled * unit + 1))
        return checks

    def verify_transport(self, datum: AffineCartanDatum) -> Report:
        started = datetime.now()
        try:
            theta_check = CheckResult.condition("theta lies in M", True, details={"theta_m": list(datum.theta_m)})
        except ContractError as e:
            theta_check = CheckResult.condition("theta lies in M", False, str(e))
            return Report({"suite": "involution", "type": datum.label, "checks": [theta_check]})
        phi, phi_back = self.build(datum)
        logger.info(f"Transporting relations {datum.label} -> {phi.target.datum.label}")
        checks = [theta_check] + self.relation_checks(phi)
        checks += self.involutivity_checks(phi, phi_back)
        checks += self.case_analysis(phi, phi_back)
        report = Report({
            "suite": "involution",
            "type": datum.label,
            "iota_type": phi.target.datum.label,
            "checks": checks,
            "elapsed": (datetime.now() - started).total_seconds(),
        })
        failed = report.failures()
        if failed:
            logger.warning(f"{datum.label}: {len(failed)} of {len(checks)} transport checks failed")
        else:
            logger.info(f"{datum.label}: {len(checks)} transport checks passed")
        logger.debug(f"{datum.label} caches: {phi.source.cache_sizes()} / {phi.target.cache_sizes()}")
        return report

    def verify_homomorphism_samples(self, datum: AffineCartanDatum, count: int, seed: int = 0,
                                    max_word_length: int = 3) -> Report:
        """Random samples: phi respects scalars on words, is multiplicative on normal forms
        and agrees with its word form there.
        """
        if count < 1:
            raise ValueError("sample count must be at least 1")
        started = datetime.now()
        rng = random.Random(seed)
        phi, _ = self.build(datum)
        scalars = _sample_scalars()
        tokens = generator_tokens(datum) + scalars
        # no Y, no X_delta and T0 only through _with_t0
        normal_tokens = [t for t in tokens if t.kind != "Y" and not (t.kind == "X" and t.delta)
                         and not (t.kind in ("T", "T'") and t.index == 0)]
        checks = []
        for sample in range(count):
            a = tuple(rng.choice(tokens) for _ in range(rng.randint(0, max_word_length)))
            c = rng.choice(scalars).scalar
            label = f"sample {sample}: {c} * ({' '.join(map(str, a)) or '1'})"
            checks.append(CheckResult.compare(f"{label} [scalar]", phi.phi_apply(WordSum([(c, a)])),
                                              phi.phi_apply(a) * phi.coefficient(c)))

            a = _with_t0(rng, normal_tokens, max_word_length)
            b = tuple(rng.choice(normal_tokens) for _ in range(rng.randint(0, max_word_length)))
            ea, eb = phi.source.evaluate(a), phi.source.evaluate(b)
            label = f"sample {sample}: ({' '.join(map(str, a)) or '1'}) * ({' '.join(map(str, b)) or '1'})"
            image = phi.phi_element(ea * eb)
            checks.append(CheckResult.compare(f"{label} [normal form]", image,
                                              phi.phi_element(ea) * phi.phi_element(eb)))
            checks.append(CheckResult.compare(f"{label} [normal form vs word]", phi.phi_element(ea), phi.phi_apply(a)))
        report = Report({
            "suite": "homomorphism",
            "type": datum.label,
            "iota_type": phi.target.datum.label,
            "checks": checks,
            "elapsed": (datetime.now() - started).total_seconds(),
        })
        logger.info(f"{datum.label}: {count} homomorphism samples, status {report.status}")
        return report


def _with_t0(rng: random.Random, tokens: List[Token], max_word_length: int) -> GeneratorWord:
    """A random word that contains T0 or T0^-1 at most once."""
    word = [rng.choice(tokens) for _ in range(rng.randint(0, max_word_length))]
    if rng.random() < 0.5:
        word.insert(rng.randint(0, len(word)), rng.choice([t_token(0), t_inverse_token(0)]))
    return tuple(word)


def _coroot(datum: AffineCartanDatum, root) -> tuple:
    norm = datum.finite_inner(root, root)
    return tuple(2 * c / norm for c in root)
