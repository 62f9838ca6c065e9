"""Pass/fail reports for axiom and identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Check:
    tag: str
    passed: bool
    witness: tuple | None = None
    # every failing source basis index, in row-major order
    failures: tuple = ()
    note: str = ""

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def to_dict(self):
        d = {"tag": self.tag, "status": self.status}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def summary(self):
        return "pass" if self.passed else "fail"

    def __getitem__(self, tag):
        for c in self.checks:
            if c.tag == tag:
                return c
        raise KeyError(tag)

    def __contains__(self, tag):
        return any(c.tag == tag for c in self.checks)

    def add(self, check):
        self.checks.append(check)
        return check

    def flag(self, tag, passed, witness=None, note=""):
        return self.add(Check(tag, bool(passed), witness, (), note))

    def equal(self, tag, lhs, rhs, src_dims=None, note=""):
        """Record whether two morphisms agree, with a failing basis index."""
        return self.add(compare(tag, lhs, rhs, src_dims, note))

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.tag, c.passed, c.witness, c.failures, c.note))

    def failed(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "title": self.title,
            "summary": self.summary,
            "checks": [c.to_dict() for c in self.checks],
        }

    def render(self):
        lines = [f"{self.title}: {self.summary.upper()}"]
        for c in self.checks:
            line = f"  [{c.status}] {c.tag}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        return "\n".join(lines)


def compare(tag, lhs, rhs, src_dims=None, note=""):
    if lhs.shape != rhs.shape:
        return Check(tag, False, None, (), f"shape {lhs.shape} vs {rhs.shape}")
    if lhs.field != rhs.field:
        return Check(tag, False, None, (), f"field {lhs.field} vs {rhs.field}")
    bad = lhs.differing_columns(rhs)
    if len(bad) == 0:
        return Check(tag, True, None, (), note)
    dims = list(src_dims) if src_dims else [lhs.cols]
    fails = tuple(tuple(int(i) for i in np.unravel_index(int(j), dims)) for j in bad)
    return Check(tag, False, fails[0], fails, note)
