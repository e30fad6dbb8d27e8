import logging
import random
from datetime import datetime
from itertools import product
from typing import List, Sequence

from models.cartan import AffineCartanDatum
from models.reports import CheckResult, Report
from models.words import Token, t_inverse_token, t_token, x_token
from utils.helpers import unit_vector

from .hecke_service import HeckeAlgebra

logger = logging.getLogger(__name__)

DIVISION_DELTAS = (-1, 0, 2)


def _word_text(word: Sequence[Token]) -> str:
    return " ".join(map(str, word)) or "1"


class AlgebraCheckService:
    """Self-checks of the rewriting product of one algebra: Matsumoto, exact division, associativity.

    Each call builds a fresh algebra, as the involution checks do.
    """

    def _report(self, suite: str, datum: AffineCartanDatum, checks: List[CheckResult], started) -> Report:
        report = Report({
            "suite": suite,
            "type": datum.label,
            "checks": checks,
            "elapsed": (datetime.now() - started).total_seconds(),
        })
        if report.failures():
            logger.warning(f"{datum.label} {suite}: {len(report.failures())} of {len(checks)} checks failed")
        else:
            logger.info(f"{datum.label} {suite}: {len(checks)} checks passed")
        return report

    def verify_matsumoto(self, datum: AffineCartanDatum, max_length: int) -> Report:
        """T_{j_1} ... T_{j_l} is the same element for every reduced word of w, for l(w) <= max_length."""
        started = datetime.now()
        algebra = HeckeAlgebra(datum)
        weyl = algebra.weyl
        checks = []
        by_length = {}
        for x, length in weyl.enumerate_elements(max_length).items():
            by_length.setdefault(length, []).append(x)
        for length in sorted(by_length):
            mismatches = []
            words = 0
            for x in by_length[length]:
                expected = algebra.t_word(x)
                for word in weyl.all_reduced_words(x):
                    words += 1
                    h = algebra.one()
                    for j in word:
                        h = algebra.right_multiply_generator(h, j)
                    if h != expected:
                        mismatches.append(f"{list(word)}: {h - expected}")
            checks.append(CheckResult.condition(
                f"reduced words of length {length} give T_w",
                not mismatches, "; ".join(mismatches[:3]),
                {"elements": len(by_length[length]), "words": words},
            ))
        return self._report("matsumoto", datum, checks, started)

    def verify_exact_division(self, datum: AffineCartanDatum, bound: int,
                              deltas: Sequence[int] = DIVISION_DELTAS) -> Report:
        """T_j^-1 (T_j X_beta) = X_beta for every node j and beta + d delta in the box [-bound, bound]^n."""
        started = datetime.now()
        algebra = HeckeAlgebra(datum)
        checks = []
        for j in range(algebra.n + 1):
            mismatches = []
            count = 0
            for beta in product(range(-bound, bound + 1), repeat=algebra.n):
                for delta in deltas:
                    count += 1
                    pushed = algebra.push_x_through_t(j, (beta, delta))
                    recovered = algebra.t_inverse(j) * pushed
                    if recovered != algebra.x_monomial(beta, delta):
                        mismatches.append(f"beta={list(beta)}, d={delta}")
            checks.append(CheckResult.condition(f"T{j}^-1 (T{j} X_beta) = X_beta", not mismatches,
                                                "; ".join(mismatches[:5]), {"cases": count}))
        return self._report("division", datum, checks, started)

    def verify_associativity(self, datum: AffineCartanDatum, count: int, seed: int = 0,
                             max_word_length: int = 4) -> Report:
        """(a b) c = a (b c) on random triples of generator words; Y letters are left out."""
        if count < 1:
            raise ValueError("sample count must be at least 1")
        started = datetime.now()
        rng = random.Random(seed)
        algebra = HeckeAlgebra(datum)
        n = algebra.n
        tokens = [t_token(j) for j in range(n + 1)] + [t_inverse_token(j) for j in range(n + 1)]
        for i in range(n):
            unit = unit_vector(n, i)
            tokens += [x_token(unit), x_token(tuple(-c for c in unit))]

        def word():
            return tuple(rng.choice(tokens) for _ in range(rng.randint(0, max_word_length)))

        failures = []
        for _ in range(count):
            a, b, c = word(), word(), word()
            x, y, z = (algebra.evaluate(w) for w in (a, b, c))
            if (x * y) * z != x * (y * z):
                failures.append(f"({_word_text(a)}) ({_word_text(b)}) ({_word_text(c)})")
        checks = [CheckResult.condition("(a b) c = a (b c)", not failures, "; ".join(failures[:3]),
                                        {"triples": count, "seed": seed})]
        return self._report("associativity", datum, checks, started)
