"""Report models shared by the checks and the CLI."""

from __future__ import annotations

import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field

from ..combinatorics import Weight
from ..repcat import ModuleRep, delta_filtration_mults, radical_layers, socle_layers

Status = Literal["pass", "fail", "skipped"]


class CheckParams(BaseModel):
    model_config = ConfigDict(extra="allow", frozen=True)

    m: int | None = None
    n: int | None = None
    char: int = 0
    jmax: int | None = None


class CheckReport(BaseModel):
    """Outcome of one verification check."""

    check: str
    params: CheckParams
    status: Status = "pass"
    witnesses: list[dict[str, Any]] = Field(default_factory=list)
    millis: float = 0.0
    note: str = ""
    capped: bool = False

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def fail(self, **witness: Any) -> None:
        """Record an offending witness and mark the check failed."""
        self.status = "fail"
        self.witnesses.append({"ok": False, **witness})

    def record(self, ok: bool, **witness: Any) -> None:
        if ok:
            self.witnesses.append({"ok": True, **witness})
        else:
            self.fail(**witness)

    def conclude(self, **info: Any) -> None:
        """Append a closing witness that carries the current status."""
        self.witnesses.append({"ok": self.status != "fail", **info})

    def summary_line(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.model_dump().items() if v is not None)
        bad = sum(1 for w in self.witnesses if not w.get("ok", True))
        tail = f" ({bad} failing witnesses)" if bad else ""
        return f"{self.status.upper():7} {self.check}({params}) {self.millis:.0f} ms{tail}"


class ModuleReport(BaseModel):
    """Dimensions, layers and filtration data of a module."""

    name: str
    algebra: str
    dim: int
    weights: dict[str, int]
    radical_layers: list[dict[str, int]]
    socle_layers: list[dict[str, int]]
    delta_multiplicities: dict[str, int] | None = None
    diagnostic: str = ""


@contextmanager
def timed_check(name: str, **params: Any) -> Iterator[CheckReport]:
    """Yield a fresh report and fill in its runtime when the block exits."""
    report = CheckReport(check=name, params=CheckParams(**params))
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.millis = (time.perf_counter() - start) * 1000


def module_report(M: ModuleRep) -> ModuleReport:
    """Summarize M; Δ-multiplicities are included for modules over K."""

    def named(layers: list[dict[Weight, int]]) -> list[dict[str, int]]:
        return [{str(w): c for w, c in layer.items()} for layer in layers]

    report = ModuleReport(
        name=M.name,
        algebra=M.ctx.name,
        dim=M.dim,
        weights={str(w): d for w, d in M.weight_dims().items()},
        radical_layers=named(radical_layers(M)),
        socle_layers=named(socle_layers(M)),
    )
    if not M.ctx.truncated:
        mults = delta_filtration_mults(M)
        report.delta_multiplicities = {str(w): c for w, c in mults.mults.items()}
        report.diagnostic = mults.diagnostic()
    return report
