"""Pass/fail records for checkable claims."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ClaimResult:
    claim_id: str
    description: str
    verdict: bool = True
    witnesses: dict = field(default_factory=dict)
    bounded: bool = False

    def check(self, check_id: str, ok: bool, **detail) -> bool:
        """Record a named sub-check; any failing sub-check fails the claim."""
        ok = bool(ok)
        self.witnesses.setdefault("checks", []).append(
            {"id": f"{self.claim_id}.{check_id}", "pass": ok, **detail})
        self.verdict = self.verdict and ok
        return ok

    @property
    def checks(self) -> dict:
        return {c["id"]: c for c in self.witnesses.get("checks", [])}

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "description": self.description,
            "verdict": "pass" if self.verdict else "fail",
            "bounded": self.bounded,
            "witnesses": self.witnesses,
        }
