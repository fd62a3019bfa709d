"""Structured pass/fail reports shared by the check suites."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class RelationResult:
    relation: str
    instances: int = 0
    failures: list = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, instance, **detail) -> None:
        if len(self.failures) < 10:
            self.failures.append({"instance": instance, **detail})
        else:
            self.failures.append(None)

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "instances": self.instances,
            "passed": self.passed,
            "failures": len(self.failures),
            "counterexamples": [f for f in self.failures if f is not None],
            **({"note": self.note} if self.note else {}),
        }


@dataclass
class Report:
    name: str
    results: list[RelationResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, relation: str, note: str = "") -> RelationResult:
        r = RelationResult(relation, note=note)
        self.results.append(r)
        return r

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "results": [r.to_json() for r in self.results],
        }

    def text_lines(self) -> list[str]:
        out = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {self.name}: {r.relation} ({r.instances} instances)"
            if r.note:
                line += f" [{r.note}]"
            out.append(line)
            for f in r.failures[:3]:
                if f is not None:
                    out.append(f"    counterexample: {f}")
        return out
