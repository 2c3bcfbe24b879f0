"""Report types shared by the checkers and the suite runner."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class TheoremId(str, Enum):
    L2_1 = "L2.1"
    L2_2 = "L2.2"
    L2_3 = "L2.3"
    L2_4 = "L2.4"
    T3_1 = "T3.1"
    C3_2 = "C3.2"
    C3_3 = "C3.3"
    L4_1 = "L4.1"
    L4_2 = "L4.2"
    T4_3 = "T4.3"
    C4_4 = "C4.4"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown theorem id {text!r}; expected one of "
                             f"{', '.join(t.value for t in cls)}") from None


EQUIVALENCES = frozenset({TheoremId.L2_2, TheoremId.L2_4, TheoremId.T3_1, TheoremId.C3_3})


class Verdict(str, Enum):
    EQUIVALENCE_HOLDS = "EquivalenceHolds"
    HYPOTHESIS_FAILED = "HypothesisFailed"
    VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class Condition:
    """One evaluated hypothesis, conjunct, or internal identity.

    ``required=False`` marks a hypothesis that is recorded for the reader but
    does not gate the verdict.
    """

    name: str
    holds: bool
    note: str = ""
    required: bool = True

    def to_dict(self) -> dict:
        d = {"name": self.name, "holds": self.holds}
        if self.note:
            d["note"] = self.note
        if not self.required:
            d["required"] = False
        return d


@dataclass(frozen=True)
class TheoremReport:
    theorem: TheoremId
    hypotheses: tuple[Condition, ...]
    side1: tuple[Condition, ...] = ()
    side2: tuple[Condition, ...] = ()
    checks: tuple[Condition, ...] = ()
    verdict: Verdict = Verdict.HYPOTHESIS_FAILED
    failed_hypothesis: str | None = None
    discrepancy: str | None = None

    @property
    def is_equivalence(self) -> bool:
        return self.theorem in EQUIVALENCES

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "relation": "equivalence" if self.is_equivalence else "implication",
            "verdict": self.verdict.value,
            "failed_hypothesis": self.failed_hypothesis,
            "discrepancy": self.discrepancy,
            "hypotheses": [c.to_dict() for c in self.hypotheses],
            "side1": [c.to_dict() for c in self.side1],
            "side2": [c.to_dict() for c in self.side2],
            "checks": [c.to_dict() for c in self.checks],
        }


def _first_false(conds) -> str | None:
    return next((c.name for c in conds if not c.holds), None)


def decide(theorem: TheoremId, hypotheses, side1=(), side2=(), checks=()) -> TheoremReport:
    """Build a report and its verdict from evaluated conditions.

    Equivalences compare the conjunction of side1 with that of side2;
    implications only need every side2 conjunct.  A failing internal check
    is a VIOLATION as well.
    """
    hypotheses = tuple(hypotheses)
    failed = next((c.name for c in hypotheses if c.required and not c.holds), None)
    if failed is not None:
        return TheoremReport(theorem, hypotheses, verdict=Verdict.HYPOTHESIS_FAILED,
                             failed_hypothesis=failed)
    side1, side2, checks = tuple(side1), tuple(side2), tuple(checks)
    s2 = all(c.holds for c in side2)
    if theorem in EQUIVALENCES:
        s1 = all(c.holds for c in side1)
        agree = s1 == s2
        discrepancy = None if agree else (_first_false(side2) if s1 else _first_false(side1))
    else:
        agree = s2
        discrepancy = None if agree else _first_false(side2)
    if agree and not all(c.holds for c in checks):
        agree = False
        discrepancy = _first_false(checks)
    verdict = Verdict.EQUIVALENCE_HOLDS if agree else Verdict.VIOLATION
    return TheoremReport(theorem, hypotheses, side1, side2, checks, verdict, None, discrepancy)
