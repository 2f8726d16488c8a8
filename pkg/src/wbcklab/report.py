from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class Verdict:
    law: str
    holds: bool
    witness: tuple[int, ...] | None = None
    variables: tuple[str, ...] = ()
    note: str = ""

    def describe(self, names: Sequence[str] | None = None) -> str:
        status = "holds" if self.holds else "fails"
        text = f"{self.law} {status}"
        if self.witness is not None:
            show = (lambda e: names[e]) if names else str
            if self.variables:
                parts = [f"{v}={show(e)}" for v, e in zip(self.variables, self.witness)]
            else:
                parts = [show(e) for e in self.witness]
            text += " witness " + " ".join(parts)
        if self.note:
            text += f" ({self.note})"
        return text

    def to_dict(self, names: Sequence[str] | None = None) -> dict:
        out: dict = {"law": self.law, "holds": self.holds}
        if self.witness is not None:
            show = (lambda e: names[e]) if names else (lambda e: e)
            keys = self.variables or tuple(str(i) for i in range(len(self.witness)))
            out["witness"] = {k: show(e) for k, e in zip(keys, self.witness)}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def __bool__(self):
        return self.holds

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.holds]

    def add(self, verdict: Verdict) -> "Report":
        self.verdicts.append(verdict)
        return self

    def extend(self, other: "Report") -> "Report":
        self.verdicts.extend(other.verdicts)
        return self

    def __getitem__(self, law: str) -> Verdict:
        for v in self.verdicts:
            if v.law == law:
                return v
        raise KeyError(law)

    def __contains__(self, law: str) -> bool:
        return any(v.law == law for v in self.verdicts)

    def render(self, names: Sequence[str] | None = None) -> str:
        return "\n".join(v.describe(names) for v in self.verdicts)

    def to_dict(self, names: Sequence[str] | None = None) -> dict:
        return {"holds": self.holds, "verdicts": [v.to_dict(names) for v in self.verdicts]}
