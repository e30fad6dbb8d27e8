import json
from typing import Iterable

STATUS_MARKS = {"pass": "ok", "fail": "FAIL", "error": "ERROR", "not-applicable": "n/a"}


def to_plain(value):
    """Reports, checks and other models become dicts through their to_dict()."""
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: to_plain(v) for k, v in value.items()}
    return value


def render_json(value) -> str:
    return json.dumps(to_plain(value), indent=2, ensure_ascii=False, default=str)


def render_lines(reports: Iterable) -> str:
    return "\n".join(json.dumps(to_plain(r), ensure_ascii=False, default=str) for r in reports)


def render_summary(reports: Iterable) -> str:
    lines = []
    for report in reports:
        name = getattr(report, "suite", None) or getattr(report, "lemma", "")
        checks = getattr(report, "checks", [])
        passed = sum(1 for c in checks if c.passed)
        lines.append(f"[{STATUS_MARKS.get(report.status, report.status)}] {report.type} {name}: "
                     f"{passed}/{len(checks)} checks")
    return "\n".join(lines)


def has_failures(reports: Iterable) -> bool:
    return any(r.status in ("fail", "error") for r in reports)
