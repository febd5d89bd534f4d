"""
Exhaustive scans over families of independent sets.

Each scan enumerates its family space as a flat index range, splits the
range into contiguous chunks, and runs the chunks either in-process
(``workers=1``) or on a process pool. Workers stream their chunk, keep
their own failure list and stage timings, and return them to be merged in
chunk order, so the report does not depend on the worker count.
"""

from __future__ import annotations

import time
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, product
from math import comb
from typing import Any, Callable, Literal, Optional, Sequence, final
from uuid import uuid4

from rainbow_cycles.config import DEFAULT_METRICS_DIR, default_workers
from rainbow_cycles.cycle.model import Arc, CycleContext, VertexSet
from rainbow_cycles.cycle.transform import arc_to_independent_set
from rainbow_cycles.errors import InvalidParameters, RainbowError
from rainbow_cycles.observability.timing import StageTimer, Telemetry, timed
from rainbow_cycles.oracle.search import (
    brute_force_rainbow,
    enumerate_independent_sets,
    is_canonical,
)
from rainbow_cycles.solver.instance import (
    Instance,
    RainbowCertificate,
    verify_certificate,
)
from rainbow_cycles.solver.solve import solve

ScanKind = Literal["theorem", "conjecture"]


@dataclass(frozen=True)
class ScanFailure:
    family: tuple[tuple[int, ...], ...]  # 0-based vertices per set
    reason: str


@dataclass
class ScanReport:
    kind: ScanKind
    t: int
    s: int
    families: int
    failures: list[ScanFailure] = field(default_factory=list)
    workers: int = 1
    elapsed_s: float = 0.0
    stages: dict[str, tuple[int, float, float, int]] = field(
        default_factory=dict
    )

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class _ChunkResult:
    families: int
    failures: list[ScanFailure]
    stages: dict[str, tuple[int, float, float, int]]


def partition(total: int, workers: int) -> list[range]:
    """Split ``range(total)`` into at most ``workers`` contiguous chunks."""
    workers = max(1, min(workers, total))
    step, remainder = divmod(total, workers)
    chunks, lo = [], 0
    for i in range(workers):
        hi = lo + step + (1 if i < remainder else 0)
        chunks.append(range(lo, hi))
        lo = hi
    return chunks


def theorem_family_count(s: int) -> int:
    return (2 * s + 1) ** (s - 1)


def independent_set_count(t: int, m: int) -> int:
    """Independent ``m``-sets of C_t, in closed form (``1 <= m < t``)."""
    if not 1 <= m < t:
        raise InvalidParameters(f"Set size must be in 1..{t - 1}, got {m}.")
    return t * comb(t - m, m) // (t - m)


def conjecture_family_lower_bound(t: int, s: int) -> int:
    """
    A lower bound on :func:`conjecture_family_count` without enumerating.

    Every rotation orbit has at most ``t`` members, so there are at least
    ``ceil(N / t)`` canonical first sets among the ``N`` independent sets.
    """
    n = independent_set_count(t, s)
    return -(-n // t) * n ** (s - 1)


def conjecture_family_count(t: int, s: int) -> int:
    sets = enumerate_independent_sets(CycleContext(t), s)
    reps = sum(1 for S in sets if is_canonical(S))
    return reps * len(sets) ** (s - 1)


def _as_failure(family: Sequence[VertexSet], reason: str) -> ScanFailure:
    return ScanFailure(tuple(S.members for S in family), reason)


# --- chunk workers (module level so they pickle) ---------------------------


def _theorem_chunk(lo: int, hi: int, s: int, cross_check: bool):
    ctx = CycleContext(2 * s + 1)
    timer = StageTimer()
    run_solve = timed("solve", timer)(solve)
    run_verify = timed("verify", timer)(verify_certificate)
    run_oracle = timed("brute_force", timer)(brute_force_rainbow)

    failures, count = [], 0
    # a_1 = 1 fixes the rotation; (a_2, ..., a_s) ranges over [1, 2s+1]^(s-1)
    tails = product(range(1, ctx.t + 1), repeat=s - 1)
    for tail in islice(tails, lo, hi):
        count += 1
        starts = (1, *tail)
        family = [arc_to_independent_set(Arc(a - 1, s, ctx)) for a in starts]
        inst = Instance(ctx, tuple(family))
        try:
            cert = run_solve(inst)
        except RainbowError as e:
            failures.append(_as_failure(family, e.code))
            continue
        verdict = run_verify(inst, cert)
        if not verdict:
            failures.append(_as_failure(family, verdict.reason))
            continue
        if cross_check:
            found = run_oracle(family, s)
            if found is None or not verify_certificate(
                inst, RainbowCertificate(found)
            ):
                failures.append(_as_failure(family, "oracle-disagreement"))
    return _ChunkResult(count, failures, timer.snapshot())


def _conjecture_chunk(lo: int, hi: int, t: int, s: int):
    ctx = CycleContext(t)
    timer = StageTimer()
    run_oracle = timed("brute_force", timer)(brute_force_rainbow)
    run_verify = timed("verify", timer)(verify_certificate)

    sets = enumerate_independent_sets(ctx, s)
    reps = [S for S in sets if is_canonical(S)]
    failures, count = [], 0
    for family in islice(product(reps, *([sets] * (s - 1))), lo, hi):
        count += 1
        found = run_oracle(family, s)
        if found is None:
            failures.append(_as_failure(family, "no-rainbow-set"))
            continue
        inst = Instance(ctx, tuple(family))
        verdict = run_verify(inst, RainbowCertificate(found))
        if not verdict:
            failures.append(_as_failure(family, verdict.reason))
    return _ChunkResult(count, failures, timer.snapshot())


def run_partitioned(
    fn: Callable[..., _ChunkResult],
    args: tuple,
    total: int,
    workers: int,
) -> list[_ChunkResult]:
    """Run ``fn(lo, hi, *args)`` over contiguous chunks of ``range(total)``."""
    chunks = partition(total, workers)
    if len(chunks) <= 1:
        return [fn(c.start, c.stop, *args) for c in chunks]
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        futures = [pool.submit(fn, c.start, c.stop, *args) for c in chunks]
        return [f.result() for f in futures]


# --- scans -----------------------------------------------------------------


class BaseScan(ABC):
    def __init__(
        self,
        workers: Optional[int] = None,
        enable_metrics: bool = False,
        metrics_dir: str = DEFAULT_METRICS_DIR,
        autosave_metrics: bool = True,
        scan_id: Optional[str] = None,
    ):
        self.workers = default_workers() if workers is None else workers
        if self.workers < 1:
            raise InvalidParameters(f"workers must be >= 1, got {workers}.")
        self.scan_id = scan_id or uuid4().hex
        self.telemetry = Telemetry(
            enable=enable_metrics,
            output_dir=metrics_dir,
            save_json_default=autosave_metrics,
        )

    @property
    def name(self) -> str:
        """Scan name."""
        return self.__class__.__name__

    @property
    @abstractmethod
    def params(self) -> dict[str, Any]: ...

    @final
    def invoke(self, *, metrics_path: Optional[str] = None) -> ScanReport:
        self.telemetry.begin_run(
            scan=self.name, scan_id=self.scan_id, **self.params
        )
        t0 = time.perf_counter()
        try:
            report = self._invoke()
            report.elapsed_s = time.perf_counter() - t0
            report.workers = self.workers
            self.telemetry.stages.merge(report.stages)
            self.telemetry.record_summary(
                families=report.families,
                failures=len(report.failures),
                elapsed_s=round(report.elapsed_s, 3),
                workers=report.workers,
            )
            return report
        finally:
            self.telemetry.render(filepath=metrics_path)

    def _merge(
        self, kind: ScanKind, t: int, s: int, results: list[_ChunkResult]
    ) -> ScanReport:
        report = ScanReport(kind=kind, t=t, s=s, families=0)
        timer = StageTimer()
        for res in results:
            report.families += res.families
            report.failures.extend(res.failures)
            timer.merge(res.stages)
        report.stages = timer.snapshot()
        return report

    @abstractmethod
    def _invoke(self) -> ScanReport:
        """Subclasses implement the actual enumeration."""
        ...

    # Runtime enforcement: forbid subclasses from overriding invoke
    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if "invoke" in cls.__dict__:
            raise TypeError(
                f"{cls.__name__} must not override BaseScan.invoke(); "
                "implement _invoke() only."
            )


class TheoremScan(BaseScan):
    """Solve and check every family of s arcs with a_1 = 1 on C_{2s+1}."""

    def __init__(self, s: int, *, cross_check: bool = False, **kwargs):
        if s < 1:
            raise InvalidParameters(f"s must be >= 1, got {s}.")
        super().__init__(**kwargs)
        self.s = s
        self.cross_check = cross_check

    @property
    def params(self) -> dict[str, Any]:
        return {"s": self.s, "cross_check": self.cross_check}

    def _invoke(self) -> ScanReport:
        total = theorem_family_count(self.s)
        results = run_partitioned(
            _theorem_chunk, (self.s, self.cross_check), total, self.workers
        )
        return self._merge("theorem", 2 * self.s + 1, self.s, results)


class ConjectureScan(BaseScan):
    """Brute-force every family of s independent s-sets of C_t."""

    def __init__(self, t: int, s: int, **kwargs):
        if s < 1 or t < 3 or not 2 * s < t:
            raise InvalidParameters(
                f"Need 1 <= s < t/2 and t >= 3, got t={t}, s={s}."
            )
        super().__init__(**kwargs)
        self.t = t
        self.s = s

    @property
    def params(self) -> dict[str, Any]:
        return {"t": self.t, "s": self.s}

    def _invoke(self) -> ScanReport:
        total = conjecture_family_count(self.t, self.s)
        results = run_partitioned(
            _conjecture_chunk, (self.t, self.s), total, self.workers
        )
        return self._merge("conjecture", self.t, self.s, results)


def exhaustive_theorem_check(
    s: int, workers: int = 1, *, cross_check: bool = False, **kwargs
) -> ScanReport:
    return TheoremScan(
        s, cross_check=cross_check, workers=workers, **kwargs
    ).invoke()


def conjecture_scan(t: int, s: int, workers: int = 1, **kwargs) -> ScanReport:
    return ConjectureScan(t, s, workers=workers, **kwargs).invoke()
