"""Verification outcome for a single identity at one parameter point."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Union

from ..polynomial import Polynomial
from ..series import TruncatedSeries

Residual = Union[Polynomial, TruncatedSeries]


def residual_is_zero(residual: Residual) -> bool:
    return residual.is_zero


@dataclass(frozen=True)
class IdentityReport:
    """Result of checking one catalogued identity at one parameter point.

    The verdict is pass exactly when the residual (left side minus right
    side) is identically zero; arithmetic is exact, so there is no
    tolerance.
    """

    identity: str
    params: Mapping[str, Any]
    order: int | None
    residual: Residual
    elapsed_ms: float
    verdict: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "verdict", residual_is_zero(self.residual))

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.identity,
            "params": dict(self.params),
            "order": self.order,
            "residual": "0" if self.verdict else str(self.residual),
            "verdict": "pass" if self.verdict else "fail",
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def __str__(self) -> str:
        status = "pass" if self.verdict else "FAIL"
        ptxt = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"[{status}] {self.identity} ({ptxt})"
