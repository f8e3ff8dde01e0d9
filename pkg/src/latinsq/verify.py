"""Exhaustive and sampled checks that associative Latin squares are groups.

Known associative counts (a documentation-level cross-check, not computed
here): the labelled group tables of order n number sum over groups G of
n!/|Aut(G)|, giving 1, 2, 3, 16, 30 for n = 1..5 (at n = 4: Z4 gives
24/2 and the Klein group 24/6).
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .axioms import associativity_naive
from .classify import theorem_check
from .generate import EnumPrefix, SampleConfig, check_guard, enumerate_latin, random_latin, split_prefix
from .table import CayleyTable

__all__ = [
    "VerificationReport",
    "Violation",
    "associative_census",
    "verify_exhaustive",
    "verify_sampled",
]


@dataclass(frozen=True)
class Violation:
    table: CayleyTable
    step: str  # "idempotent", "identity" or "inverse"

    def to_dict(self) -> dict:
        return {"table": self.table.rows(), "step": self.step}


@dataclass
class VerificationReport:
    n: int
    mode: str  # "exhaustive" or "sampled"
    total_latin: int = 0
    associative_count: int = 0
    violations: list[Violation] = field(default_factory=list)
    samples: int | None = None
    elapsed: float = 0.0

    @property
    def holds(self) -> bool:
        return not self.violations

    def merge(self, other: "VerificationReport") -> None:
        self.total_latin += other.total_latin
        self.associative_count += other.associative_count
        self.violations.extend(other.violations)

    def summary(self) -> str:
        return (f"{self.total_latin} Latin squares, {self.associative_count} associative, "
                f"{len(self.violations)} violations")

    def to_dict(self, include_elapsed: bool = False) -> dict:
        # elapsed is excluded by default so repeated runs serialize identically
        doc = {
            "n": self.n,
            "mode": self.mode,
            "total_latin": self.total_latin,
            "associative_count": self.associative_count,
            "violations": [v.to_dict() for v in self.violations],
            "samples": self.samples,
        }
        if include_elapsed:
            doc["elapsed"] = self.elapsed
        return doc


class _Tally:
    def __init__(self, n: int, mode: str):
        self.report = VerificationReport(n, mode)

    def __call__(self, table: CayleyTable) -> None:
        report = self.report
        report.total_latin += 1
        if associativity_naive(table) is not None:
            return
        report.associative_count += 1
        verdict = theorem_check(table, assume_latin=True)
        if not verdict.holds:
            report.violations.append(Violation(table, verdict.failed_step))


def _run_prefix(args: tuple[int, EnumPrefix, bool]) -> VerificationReport:
    n, prefix, force = args
    tally = _Tally(n, "exhaustive")
    enumerate_latin(n, prefix, tally, force=force)
    return tally.report


def verify_exhaustive(n: int, *, force: bool = False, parallel: int = 1) -> VerificationReport:
    """Enumerate every Latin square of order n and run the theorem pipeline
    on each associative one.

    ``parallel > 1`` splits the search into disjoint prefixes handled by
    worker processes; results merge in prefix order, so the report is the
    same for any worker count.
    """
    check_guard(n, force)
    start = time.perf_counter()
    report = VerificationReport(n, "exhaustive")
    if parallel <= 1:
        report.merge(_run_prefix((n, EnumPrefix(n), force)))
    else:
        parts = split_prefix(EnumPrefix(n), 4 * parallel)
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            for part in pool.map(_run_prefix, [(n, p, force) for p in parts]):
                report.merge(part)
    report.elapsed = time.perf_counter() - start
    return report


def associative_census(n: int, *, force: bool = False, parallel: int = 1) -> int:
    """Number of associative Latin squares (labelled group tables) of order n."""
    return verify_exhaustive(n, force=force, parallel=parallel).associative_count


def trial_seeds(seed: int, trials: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(trials)]


def verify_sampled(n: int, trials: int, seed: int = 0, steps: int | None = None) -> VerificationReport:
    """Run the theorem pipeline on ``trials`` Jacobson–Matthews samples."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    start = time.perf_counter()
    tally = _Tally(n, "sampled")
    for s in trial_seeds(seed, trials):
        tally(random_latin(SampleConfig(n, s, steps)))
    report = tally.report
    report.samples = trials
    report.elapsed = time.perf_counter() - start
    return report
