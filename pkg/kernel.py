import concurrent.futures
import logging
from datetime import datetime
from typing import Callable, Dict, List, Optional, Tuple

from config import get_settings
from models.reports import CheckResult, LemmaReport, Report
from services.cartan_service import iota_datum, load_cartan_datum
from services.hecke_service import HeckeAlgebra
from services.lemma_service import LEMMAS
from services.weyl_service import WeylGroup

logger = logging.getLogger(__name__)

Job = Tuple[str, str, Callable[[], object]]


class DahaKernel:
    """Owns the type table, per-type data and the worker pool that runs verification jobs."""

    def __init__(self, settings: Optional[Dict] = None):
        self.settings = settings or get_settings()
        self.table_path = self.settings["type_table"]
        self.types_data: Dict[str, Dict] = {}
        self.executor = concurrent.futures.ThreadPoolExecutor(max_workers=self.settings["workers"])

    def get_type_data(self, label: str) -> Dict:
        if label not in self.types_data:
            datum = load_cartan_datum(label, self.table_path)
            iota, correspondence = iota_datum(datum, self.table_path)
            weyl = WeylGroup(datum)
            self.types_data[label] = {
                "label": datum.label,
                "datum": datum,
                "weyl": weyl,
                "algebra": HeckeAlgebra(datum, weyl),
                "iota": iota,
                "correspondence": correspondence,
                "loaded_at": datetime.now(),
            }
            logger.info(f"Loaded type {datum.label} (n={datum.n}, p={datum.p}, dual {iota.label})")
        return self.types_data[label]

    def new_algebra(self, label: str) -> HeckeAlgebra:
        """A fresh algebra with empty caches, for jobs that must not share state."""
        return HeckeAlgebra(self.get_type_data(label)["datum"])

    def run_jobs(self, jobs: List[Job]) -> List:
        """Run (name, label, callable) jobs in the pool; results keep the order of `jobs`.

        A job that raises is logged and turned into a report with status "error".
        """
        futures = [(name, label, self.executor.submit(job)) for name, label, job in jobs]
        results = []
        for name, label, future in futures:
            try:
                results.append(future.result())
            except Exception as e:
                logger.error(f"Job {name} for {label} failed: {e}")
                check = CheckResult({"name": name, "status": "error", "witness": f"{type(e).__name__}: {e}"})
                if name in LEMMAS:
                    results.append(LemmaReport({"lemma": name, "type": label, "checks": [check]}))
                else:
                    results.append(Report({"suite": name, "type": label, "checks": [check]}))
        return results

    def close(self):
        self.executor.shutdown(wait=True)
        self.types_data.clear()
