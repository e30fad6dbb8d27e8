import logging
import os
from datetime import datetime
from typing import Dict, List, Optional

from dotenv import dotenv_values

from config import SUPPORTED_TYPES
from models.reports import CheckResult, Report
from services.algebra_check_service import AlgebraCheckService
from services.involution_service import InvolutionService
from services.lemma_service import LEMMAS, LemmaService
from services.weyl_service import WeylGroup

logger = logging.getLogger(__name__)


class VerifyCommands:
    def __init__(self, kernel):
        self.kernel = kernel
        self.involution_service = InvolutionService(kernel.table_path)
        self.lemma_service = LemmaService(kernel.table_path)
        self.algebra_checks = AlgebraCheckService()

    def involution(self, label: str, samples: Optional[int] = None, seed: Optional[int] = None) -> List:
        datum = self.kernel.get_type_data(label)["datum"]
        samples = samples if samples is not None else self.kernel.settings["samples"]
        seed = seed if seed is not None else self.kernel.settings["seed"]
        return self.kernel.run_jobs([
            ("involution", datum.label, lambda: self.involution_service.verify_transport(datum)),
            ("homomorphism", datum.label,
             lambda: self.involution_service.verify_homomorphism_samples(datum, samples, seed)),
        ])

    def lemmas(self, label: str) -> List:
        datum = self.kernel.get_type_data(label)["datum"]
        jobs = []
        for name in LEMMAS:
            check = getattr(self.lemma_service, f"verify_{name}")
            jobs.append((name, datum.label, lambda check=check: check(datum)))
        return self.kernel.run_jobs(jobs)

    def lengths(self, label: str, max_length: Optional[int] = None) -> List:
        datum = self.kernel.get_type_data(label)["datum"]
        max_length = max_length if max_length is not None else self.kernel.settings["max_length"]

        def job():
            started = datetime.now()
            mismatches = WeylGroup(datum).cross_check_lengths(max_length)
            check = CheckResult.condition(
                f"|Pi(w)| = l(w) = length formula for l(w) <= {max_length}",
                not mismatches, "; ".join(mismatches[:5]), {"mismatches": len(mismatches)},
            )
            return Report({
                "suite": "lengths",
                "type": datum.label,
                "checks": [check],
                "elapsed": (datetime.now() - started).total_seconds(),
            })

        return self.kernel.run_jobs([("lengths", datum.label, job)])

    def matsumoto(self, label: str, max_length: Optional[int] = None) -> List:
        datum = self.kernel.get_type_data(label)["datum"]
        max_length = max_length if max_length is not None else self.kernel.settings["max_length"]
        return self.kernel.run_jobs([
            ("matsumoto", datum.label, lambda: self.algebra_checks.verify_matsumoto(datum, max_length)),
        ])

    def associativity(self, label: str, triples: Optional[int] = None, seed: Optional[int] = None) -> List:
        datum = self.kernel.get_type_data(label)["datum"]
        triples = triples if triples is not None else self.kernel.settings["triples"]
        seed = seed if seed is not None else self.kernel.settings["seed"]
        return self.kernel.run_jobs([
            ("associativity", datum.label,
             lambda: self.algebra_checks.verify_associativity(datum, triples, seed)),
        ])

    def division(self, label: str, bound: Optional[int] = None) -> List:
        datum = self.kernel.get_type_data(label)["datum"]
        bound = bound if bound is not None else self.kernel.settings["division_bound"]
        return self.kernel.run_jobs([
            ("division", datum.label, lambda: self.algebra_checks.verify_exact_division(datum, bound)),
        ])

    @staticmethod
    def read_config(path: str, settings: Dict) -> Dict:
        if not os.path.isfile(path):
            raise FileNotFoundError(f"Config file not found: {path}")
        values = dotenv_values(path)
        types = values.get("TYPES")
        try:
            return {
                "types": [t.strip() for t in types.split(",") if t.strip()] if types else list(SUPPORTED_TYPES),
                "samples": int(values.get("SAMPLES") or settings["samples"]),
                "seed": int(values.get("SEED") or settings["seed"]),
                "max_length": int(values.get("MAX_LENGTH") or settings["max_length"]),
            }
        except ValueError as e:
            raise ValueError(f"Invalid value in {path}: {e}")

    def all(self, config_path: Optional[str] = None) -> List:
        if config_path:
            options = self.read_config(config_path, self.kernel.settings)
        else:
            options = {
                "types": list(SUPPORTED_TYPES),
                "samples": self.kernel.settings["samples"],
                "seed": self.kernel.settings["seed"],
                "max_length": self.kernel.settings["max_length"],
            }
        logger.info(f"Verifying {len(options['types'])} types: {', '.join(options['types'])}")
        reports = []
        for label in options["types"]:
            reports += self.lengths(label, options["max_length"])
            reports += self.matsumoto(label, options["max_length"])
            reports += self.division(label)
            reports += self.associativity(label, seed=options["seed"])
            reports += self.involution(label, options["samples"], options["seed"])
            reports += self.lemmas(label)
        return reports
