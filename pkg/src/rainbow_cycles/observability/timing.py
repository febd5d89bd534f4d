"""
Per-stage timing for scans.

``StageTimer`` collects call counts and durations under stage names and
travels between processes as a plain snapshot dict. ``Telemetry`` wraps one
scan run: it records the run context, merges the worker snapshots, prints a
rich panel to stderr and saves the same numbers as JSON.
"""

from __future__ import annotations

import json
import os
import time
from collections import defaultdict
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import wraps
from threading import Lock
from typing import Any, Callable, Dict, List, NamedTuple, Tuple
from uuid import uuid4

from rich.box import HEAVY
from rich.console import Console, Group
from rich.panel import Panel
from rich.rule import Rule
from rich.table import Table
from rich.text import Text

# (count, total_ms, max_ms, failed) per stage; picklable
Snapshot = Dict[str, Tuple[int, float, float, int]]


class StageRow(NamedTuple):
    name: str
    count: int
    total_s: float
    avg_ms: float
    max_ms: float
    failed: int


@dataclass
class _Bucket:
    count: int = 0
    total_ms: float = 0.0
    max_ms: float = 0.0
    failed: int = 0

    def add(self, count: int, total_ms: float, max_ms: float, failed: int):
        self.count += count
        self.total_ms += total_ms
        self.max_ms = max(self.max_ms, max_ms)
        self.failed += failed


@dataclass
class StageTimer:
    """Per-stage timing buckets; cheap enough to feed once per family."""

    buckets: Dict[str, _Bucket] = field(
        default_factory=lambda: defaultdict(_Bucket)
    )
    _lock: Lock = field(default_factory=Lock, repr=False)

    def add(self, name: str, elapsed_ms: float, ok: bool) -> None:
        with self._lock:
            self.buckets[name].add(1, elapsed_ms, elapsed_ms, int(not ok))

    def merge(self, snapshot: Snapshot) -> None:
        """Fold in a :meth:`snapshot` taken in another process."""
        with self._lock:
            for name, values in snapshot.items():
                self.buckets[name].add(*values)

    def snapshot(self) -> Snapshot:
        with self._lock:
            return {
                name: (b.count, b.total_ms, b.max_ms, b.failed)
                for name, b in self.buckets.items()
            }

    def rows(self) -> List[StageRow]:
        """One row per stage, slowest total first."""
        rows = [
            StageRow(
                name,
                count,
                total_ms / 1000.0,
                total_ms / count if count else 0.0,
                max_ms,
                failed,
            )
            for name, (count, total_ms, max_ms, failed) in (
                self.snapshot().items()
            )
        ]
        return sorted(rows, key=lambda r: r.total_s, reverse=True)


def timed(stage: str, sink: StageTimer):
    """Record every call of the wrapped function under ``stage``."""

    def deco(fn: Callable):
        @wraps(fn)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            failed = False
            try:
                return fn(*args, **kwargs)
            except Exception:
                failed = True
                raise
            finally:
                elapsed = (time.perf_counter() - start) * 1000.0
                sink.add(stage, elapsed, not failed)

        return wrapper

    return deco


_COLUMNS = (
    ("Count", "{:,}"),
    ("Total(s)", "{:,.2f}"),
    ("Avg(ms)", "{:,.3f}"),
    ("Max(ms)", "{:,.3f}"),
)


def _stage_table(rows: List[StageRow]) -> Table:
    table = Table(
        title="Per-Stage Timing",
        title_style="bold white",
        box=HEAVY,
        pad_edge=False,
        padding=(0, 1),
        header_style="bold",
    )
    table.add_column("Stage", style="cyan", no_wrap=True, min_width=16)
    for header, _ in _COLUMNS:
        table.add_column(header, justify="right", min_width=10)
    table.add_column("Failed", justify="right", min_width=8)

    for row in rows:
        values = (row.count, row.total_s, row.avg_ms, row.max_ms)
        cells = [fmt.format(v) for (_, fmt), v in zip(_COLUMNS, values)]
        failed = f"[red]{row.failed:,}[/]" if row.failed else "0"
        table.add_row(row.name, *cells, failed)
    if not rows:
        table.add_row("(no stages)", *("0" for _ in _COLUMNS), "0")
    return table


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class Telemetry:
    enable: bool = True
    output_dir: str = ".rainbow_metrics"
    save_json_default: bool = True

    stages: StageTimer = field(default_factory=StageTimer)
    context: Dict[str, Any] = field(default_factory=dict)
    summary: Dict[str, Any] = field(default_factory=dict)
    _t0: float = field(default=0.0, repr=False)

    def begin_run(self, *, scan: str, scan_id: str, **params: Any) -> None:
        """Reset for a new run; called by ``BaseScan.invoke``."""
        self.stages = StageTimer()
        self.summary = {}
        self.context = {
            "scan": scan,
            "scan_id": scan_id,
            "run_id": uuid4().hex,
            "params": dict(params),
            "started_at": _now(),
        }
        self._t0 = time.perf_counter()

    def record_summary(self, **values: Any) -> None:
        self.summary.update(values)

    def to_json(self) -> dict:
        return {
            "context": {
                **self.context,
                "ended_at": _now(),
                "wall_s": round(time.perf_counter() - self._t0, 6),
            },
            "summary": dict(self.summary),
            "stages": [row._asdict() for row in self.stages.rows()],
        }

    def _default_filepath(self) -> str:
        stamp = datetime.now().strftime("%Y%m%d-%H%M%S-%f")
        scan = self.context.get("scan", "scan")
        scan_id = str(self.context.get("scan_id", "run"))[:8]
        return os.path.join(self.output_dir, f"{stamp}_{scan}_{scan_id}.json")

    def save_json(self, payload: dict, filepath: str | None = None) -> str:
        path = filepath or self._default_filepath()
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2, default=repr)
        return path

    def render(
        self,
        save_json: bool | None = None,
        filepath: str | None = None,
        console: Console | None = None,
    ) -> str | None:
        """Print the metrics panel to stderr; return the saved JSON path."""
        if not self.enable:
            return None

        payload = self.to_json()
        ctx = payload["context"]
        if self.save_json_default if save_json is None else save_json:
            saved = self.save_json(payload, filepath)
        else:
            saved = None

        label = f"{ctx.get('scan', 'scan')} [{str(ctx.get('scan_id'))[:6]}]"
        params = " ".join(f"{k}={v}" for k, v in ctx.get("params", {}).items())
        header = (
            f"[bold magenta]{label}[/] [dim]•[/] {params}\n"
            f"[dim]started {ctx.get('started_at')}[/]   "
            f"[bold]wall[/]: {ctx['wall_s']:,.2f}s"
        )
        lines = ["[bold]Summary[/]"]
        lines += [f"  {key}: {value}" for key, value in self.summary.items()]
        if saved:
            lines.append(f"[dim]Saved metrics JSON to:[/] {saved}")

        (console or Console(stderr=True)).print(
            Panel.fit(
                Group(
                    Text.from_markup(header),
                    Rule(),
                    _stage_table(self.stages.rows()),
                    Rule(),
                    Text.from_markup("\n".join(lines)),
                ),
                title=f"[bold white]Metrics[/] • [cyan]{label}[/]",
                border_style="bright_magenta",
                padding=(1, 2),
                box=HEAVY,
            )
        )
        return saved
