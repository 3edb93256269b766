"""Verdicts bundled with the evidence that justifies them."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class Verdict(enum.Enum):
    CONTRACTIBLE = "CONTRACTIBLE"
    COLLAPSIBLE = "COLLAPSIBLE"
    QC_REDUCIBLE = "QC_REDUCIBLE"
    WEAK_TRIVIAL_PROVED = "WEAK_TRIVIAL_PROVED"
    STRONG_ASPHERICAL = "STRONG_ASPHERICAL"
    NOT_STRONG_ASPHERICAL = "NOT_STRONG_ASPHERICAL"
    ASPHERICAL = "ASPHERICAL"
    NON_ASPHERICAL = "NON_ASPHERICAL"
    NOT_TRIVIAL = "NOT_TRIVIAL"
    UNKNOWN = "UNKNOWN"

    @property
    def definitive(self) -> bool:
        return self is not Verdict.UNKNOWN

    def __str__(self):
        return self.value


@dataclass
class Certificate:
    """A verdict about ``subject`` plus replayable or recomputable evidence.

    ``narrative`` lists the reasoning steps in order, each naming the result
    that licenses it.
    """

    verdict: Verdict
    subject: str
    trace: Any = None
    homology: Any = None
    presentation: Any = None
    narrative: list[str] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    def report(self) -> str:
        lines = [f"verdict: {self.verdict}", f"subject: {self.subject}"]
        if self.trace is not None:
            lines.append(f"trace: {len(self.trace.moves)} moves")
            lines += ["  " + line for line in self.trace.to_text().splitlines()]
        if self.homology is not None:
            lines.append(f"homology: {self.homology.compact()}")
        if self.presentation is not None:
            lines.append(f"pi_1: {self.presentation}")
        for key, value in self.extra.items():
            lines.append(f"{key}: {value}")
        if self.narrative:
            lines.append("reasoning:")
            lines += [f"  {i}. {step}" for i, step in enumerate(self.narrative, 1)]
        return "\n".join(lines)

    def __str__(self):
        return self.report()
