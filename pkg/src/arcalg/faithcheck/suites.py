"""Named groups of checks and a parallel runner for them."""

from __future__ import annotations

import inspect
import logging
import os
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from ..conf import get_setting
from ..exceptions import ResourceCapExceeded, ValidationError
from . import combinatorial, faithfulness, representations
from .report import CheckParams, CheckReport

logger = logging.getLogger(__name__)

CheckFunction = Callable[..., CheckReport]


def failure_at_diagonal(m: int, n: int, characteristic: int | None = None) -> CheckReport:
    """The failure witness only exists on the diagonal m = n."""
    if m != n:
        raise ValidationError(f"The 0-faithfulness failure is witnessed at m = n. Got ({m}, {n}).")
    return faithfulness.check_0faithful_failure(m, characteristic)


SUITES: dict[str, tuple[CheckFunction, ...]] = {
    "combinatorics": (
        combinatorial.check_worked_examples,
        combinatorial.check_inverse_identity,
        combinatorial.check_inverse_corner,
        combinatorial.check_arrow_chains,
        combinatorial.check_ell_drop,
        combinatorial.check_cartan,
    ),
    "algebra": (
        combinatorial.check_associativity,
        combinatorial.check_worked_products,
        combinatorial.check_rotation,
        combinatorial.check_star,
        combinatorial.check_schedule,
        combinatorial.check_unit,
    ),
    "repcat": (
        representations.check_decomposition_numbers,
        representations.check_standard_structure,
        representations.check_radical,
        representations.check_resolutions,
        representations.check_brauer_humphreys,
        faithfulness.check_projective_injective,
        faithfulness.check_uniserial_standards,
    ),
    "functors": (
        representations.check_translated_projectives,
        representations.check_translated_standards,
        representations.check_restricted_modules,
        representations.check_functor_identities,
        representations.check_tilting_modules,
    ),
    "faithfulness": (
        faithfulness.check_tilting_coresolution,
        faithfulness.check_tilting_socle2,
        faithfulness.check_0faithful,
        failure_at_diagonal,
        faithfulness.check_ext_vanishing,
        faithfulness.check_ext_transfer,
        faithfulness.check_exact_equivalence,
    ),
}

SUITE_NAMES = (*SUITES, "all")

Precondition = tuple[Callable[[int, int], bool], str]

PRECONDITIONS: dict[CheckFunction, Precondition] = {
    faithfulness.check_tilting_coresolution: (
        lambda m, n: m != n,
        "Tilting coresolutions need m ≠ n.",
    ),
    faithfulness.check_tilting_socle2: (
        lambda m, n: n > m,
        "The second socle check assumes n > m.",
    ),
    faithfulness.check_0faithful: (
        lambda m, n: m != n,
        "0-faithfulness is checked for m ≠ n.",
    ),
    failure_at_diagonal: (
        lambda m, n: m == n >= 1,
        "The 0-faithfulness failure is witnessed at m = n ≥ 1.",
    ),
    faithfulness.check_ext_vanishing: (
        lambda m, n: n > m,
        "The Ext vanishing checks assume n > m.",
    ),
    faithfulness.check_ext_transfer: (
        lambda m, n: m != n,
        "The Ext transfer needs m ≠ n.",
    ),
    faithfulness.check_exact_equivalence: (
        lambda m, n: abs(n - m) >= 2,
        "The exact equivalence needs |n − m| ≥ 2.",
    ),
    faithfulness.check_uniserial_standards: (
        lambda m, n: n >= m,
        "The uniserial standards need n ≥ m.",
    ),
}


def skip_reason(check: CheckFunction, m: int, n: int) -> str | None:
    """Why ``check`` does not apply to the box (m, n), or None if it does."""
    rule = PRECONDITIONS.get(check)
    if rule is None:
        return None
    applies, message = rule
    return None if applies(m, n) else f"{message} Got ({m}, {n})."


@dataclass(frozen=True)
class Job:
    """One check applied to one box."""

    check: CheckFunction
    m: int
    n: int
    characteristic: int | None = None
    deep: bool = False

    @property
    def name(self) -> str:
        return self.check.__name__.removeprefix("check_")

    def kwargs(self) -> dict[str, Any]:
        offered = {
            "m": self.m,
            "n": self.n,
            "characteristic": self.characteristic,
            "deep": self.deep,
        }
        accepted = inspect.signature(self.check).parameters
        return {k: v for k, v in offered.items() if k in accepted}

    def run(self) -> CheckReport:
        params = CheckParams(m=self.m, n=self.n, char=self.characteristic or 0)
        reason = skip_reason(self.check, self.m, self.n)
        if reason is not None:
            logger.info("Skipping %s(%d, %d): %s", self.name, self.m, self.n, reason)
            return CheckReport(check=self.name, params=params, status="skipped", note=reason)
        try:
            return self.check(**self.kwargs())
        except ResourceCapExceeded as e:
            logger.warning("%s(%d, %d) hit a resource cap: %s", self.name, self.m, self.n, e)
            return CheckReport(
                check=self.name, params=params, status="skipped", note=str(e), capped=True
            )
        except ValidationError as e:
            logger.error("%s(%d, %d) rejected its own input: %s", self.name, self.m, self.n, e)
            return CheckReport(check=self.name, params=params, status="fail", note=str(e))


def _run_job(job: Job) -> CheckReport:
    return job.run()


def jobs_for(
    suite: str, m: int, n: int, characteristic: int | None = None, deep: bool = False
) -> list[Job]:
    """
    The jobs of ``suite`` on the box (m, n).

    Raises:
        ValidationError: If the suite name is unknown.
    """
    if suite == "all":
        checks = [c for group in SUITES.values() for c in group]
    elif suite in SUITES:
        checks = list(SUITES[suite])
    else:
        raise ValidationError(
            f"Unknown suite {suite!r}. Choose from {', '.join(SUITE_NAMES)}."
        )
    return [Job(c, m, n, characteristic, deep) for c in checks]


def _worker_count(workers: int | None) -> int:
    count = int(get_setting("WORKERS")) if workers is None else workers
    return count or os.cpu_count() or 1


def run_jobs(jobs: list[Job], workers: int | None = None) -> list[CheckReport]:
    """
    Run jobs, in worker processes when more than one worker is allowed.

    Reports come back in job order whatever the completion order.
    """
    count = min(_worker_count(workers), len(jobs))
    if count <= 1:
        return [job.run() for job in jobs]
    logger.info("Running %d checks on %d workers", len(jobs), count)
    with ProcessPoolExecutor(max_workers=count) as pool:
        return list(pool.map(_run_job, jobs))


def run_suite(
    suite: str,
    m: int,
    n: int,
    characteristic: int | None = None,
    deep: bool = False,
    workers: int | None = None,
) -> list[CheckReport]:
    """
    Run a named suite on one box.

    Example:
        >>> reports = run_suite("combinatorics", 1, 2, workers=1)
        >>> all(r.passed for r in reports)
        True
    """
    return run_jobs(jobs_for(suite, m, n, characteristic, deep), workers)
