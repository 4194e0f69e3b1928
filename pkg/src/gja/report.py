"""Verification results and their deterministic JSON/CSV/text rendering."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Iterable

from .algebra import Element, format_element, format_scalar

PASS, FAIL, EXPECTED_FAIL = "pass", "fail", "expected-fail"


def element_json(x: Element | None) -> dict[str, str] | None:
    if x is None:
        return None
    names = x.algebra.names
    return {names[i]: format_scalar(c) for i, c in x.coeffs}


def _canon(w: Any) -> Any:
    if isinstance(w, Element):
        return format_element(w)
    if isinstance(w, dict):
        return {str(k): _canon(v) for k, v in w.items()}
    if isinstance(w, (list, tuple)):
        return [_canon(v) for v in w]
    return w


def sort_witnesses(ws: Iterable[Any]) -> list[Any]:
    canon = [_canon(w) for w in ws]
    return sorted(canon, key=lambda w: json.dumps(w, sort_keys=True))


@dataclass
class AxiomResult:
    passed: bool
    witnesses: list[Any] = field(default_factory=list)

    def __post_init__(self):
        self.witnesses = sort_witnesses(self.witnesses)
        if self.passed and self.witnesses:
            raise ValueError("a passed axiom carries no witnesses")
        if not self.passed and not self.witnesses:
            raise ValueError("a failed axiom needs at least one witness")

    @classmethod
    def from_witnesses(cls, witnesses: list[Any]) -> "AxiomResult":
        return cls(not witnesses, witnesses)


@dataclass
class AxiomReport:
    """Per-axiom outcomes for one algebra, plus free-form summary fields."""

    algebra: str
    results: dict[str, AxiomResult] = field(default_factory=dict)
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def __getitem__(self, key: str) -> AxiomResult:
        return self.results[key]

    def failing(self) -> list[str]:
        return sorted(k for k, r in self.results.items() if not r.passed)


@dataclass
class Check:
    id: str
    status: str
    witnesses: list[Any] = field(default_factory=list)
    value: Element | None = None
    note: str = ""  # shown in text reports only; the JSON schema is fixed

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "witnesses": sort_witnesses(self.witnesses),
            "value": element_json(self.value),
        }


@dataclass
class VerificationReport:
    suite: str
    algebra: str
    checks: list[Check]
    version: str = ""

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "algebra": self.algebra,
            "version": self.version,
            "checks": [c.to_json() for c in self.checks],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "status", "value", "witnesses"])
        for c in self.checks:
            value = "" if c.value is None else format_element(c.value)
            w.writerow([c.id, c.status, value, json.dumps(sort_witnesses(c.witnesses), sort_keys=True)])
        return buf.getvalue()

    def to_text(self) -> str:
        width = max((len(c.id) for c in self.checks), default=0)
        lines = [f"suite {self.suite} on {self.algebra}"]
        for c in self.checks:
            line = f"  {c.id:<{width}}  {c.status}"
            if c.value is not None:
                line += f"  value={format_element(c.value)}"
            if c.note:
                line += f"  {c.note}"
            if c.status == FAIL and c.witnesses:
                line += f"  witness={json.dumps(sort_witnesses(c.witnesses)[0], sort_keys=True)}"
            lines.append(line)
        n_fail = sum(c.status == FAIL for c in self.checks)
        lines.append(f"{len(self.checks)} checks, {n_fail} unexpected")
        return "\n".join(lines) + "\n"
