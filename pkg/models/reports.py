from typing import Dict, List, Optional

STATUSES = ("pass", "fail", "error", "not-applicable")


class CheckResult:
    def __init__(self, data: Dict):
        self.name = data.get("name", "")
        self.status = data.get("status", "pass")
        self.witness = data.get("witness")
        self.details = data.get("details", {})

    @classmethod
    def compare(cls, name: str, left, right, details: Optional[Dict] = None) -> "CheckResult":
        """pass when left == right, otherwise fail with the difference as witness."""
        if left == right:
            return cls({"name": name, "status": "pass", "details": details or {}})
        try:
            witness = str(left - right)
        except TypeError:
            witness = f"{left} != {right}"
        return cls({"name": name, "status": "fail", "witness": witness, "details": details or {}})

    @classmethod
    def condition(cls, name: str, holds: bool, witness: Optional[str] = None,
                  details: Optional[Dict] = None) -> "CheckResult":
        return cls({
            "name": name,
            "status": "pass" if holds else "fail",
            "witness": None if holds else witness,
            "details": details or {},
        })

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __str__(self):
        return f"{self.name}: {self.status}"

    def to_dict(self):
        data = {"name": self.name, "status": self.status}
        if self.witness is not None:
            data["witness"] = self.witness
        if self.details:
            data["details"] = self.details
        return data

    @classmethod
    def from_dict(cls, data: Dict):
        return cls(data)


def summarize(checks: List[CheckResult]) -> str:
    if any(c.status == "error" for c in checks):
        return "error"
    if any(c.status == "fail" for c in checks):
        return "fail"
    return "pass"


class Report:
    """Outcome of one verification suite over an affine type and its dual."""

    def __init__(self, data: Dict):
        self.type = data.get("type", "")
        self.iota_type = data.get("iota_type", "")
        self.suite = data.get("suite", "")
        self.checks = [c if isinstance(c, CheckResult) else CheckResult(c) for c in data.get("checks", [])]
        self.elapsed = data.get("elapsed", 0.0)

    @property
    def status(self) -> str:
        return summarize(self.checks)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status in ("fail", "error")]

    def __str__(self):
        return f"{self.suite} {self.type} -> {self.iota_type}: {self.status} ({len(self.checks)} checks)"

    def to_dict(self):
        return {
            "suite": self.suite,
            "type": self.type,
            "iota_type": self.iota_type,
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
            "elapsed": round(self.elapsed, 3),
        }

    @classmethod
    def from_dict(cls, data: Dict):
        return cls(data)


class LemmaReport:
    def __init__(self, data: Dict):
        self.lemma = data.get("lemma", "")
        self.type = data.get("type", "")
        self.witnesses = data.get("witnesses", {})
        self.checks = [c if isinstance(c, CheckResult) else CheckResult(c) for c in data.get("checks", [])]
        self._status = data.get("status")

    @property
    def status(self) -> str:
        if self._status is not None:
            return self._status
        return summarize(self.checks)

    @classmethod
    def not_applicable(cls, lemma: str, label: str, reason: str) -> "LemmaReport":
        return cls({"lemma": lemma, "type": label, "status": "not-applicable", "witnesses": {"reason": reason}})

    def __str__(self):
        return f"{self.lemma} {self.type}: {self.status}"

    def to_dict(self):
        return {
            "lemma": self.lemma,
            "type": self.type,
            "status": self.status,
            "witnesses": self.witnesses,
            "checks": [c.to_dict() for c in self.checks],
        }

    @classmethod
    def from_dict(cls, data: Dict):
        return cls(data)
