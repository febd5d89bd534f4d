import json

import pytest
from rich.console import Console

from rainbow_cycles.observability.timing import StageTimer, Telemetry, timed


def test_timed_counts_calls_and_failures():
    timer = StageTimer()

    @timed("square", timer)
    def square(x):
        if x < 0:
            raise ValueError("negative")
        return x * x

    assert square(3) == 9
    assert square(4) == 16
    with pytest.raises(ValueError):
        square(-1)

    count, total_ms, max_ms, failed = timer.snapshot()["square"]
    assert (count, failed) == (3, 1)
    assert total_ms >= max_ms >= 0.0


def test_merge_adds_snapshots():
    a, b = StageTimer(), StageTimer()
    a.add("solve", 2.0, True)
    b.add("solve", 5.0, False)
    b.add("verify", 1.0, True)

    merged = StageTimer()
    merged.merge(a.snapshot())
    merged.merge(b.snapshot())
    assert merged.snapshot() == {
        "solve": (2, 7.0, 5.0, 1),
        "verify": (1, 1.0, 1.0, 0),
    }
    # sorted by total time, slowest first
    assert [row[0] for row in merged.rows()] == ["solve", "verify"]


def test_disabled_telemetry_renders_nothing(tmp_path):
    tel = Telemetry(enable=False, output_dir=str(tmp_path))
    tel.begin_run(scan="TheoremScan", scan_id="abc")
    assert tel.render() is None
    assert list(tmp_path.iterdir()) == []


def test_render_saves_json_and_prints_panel(tmp_path):
    tel = Telemetry(output_dir=str(tmp_path))
    tel.begin_run(scan="ConjectureScan", scan_id="deadbeef", t=7, s=2)
    tel.stages.add("brute_force", 0.5, True)
    tel.record_summary(families=28, failures=0)

    console = Console(record=True, width=120)
    path = tel.render(console=console)

    assert path is not None and path.startswith(str(tmp_path))
    assert "ConjectureScan_deadbeef" in path
    payload = json.loads(open(path, encoding="utf-8").read())
    assert payload["context"]["params"] == {"t": 7, "s": 2}
    assert payload["summary"] == {"families": 28, "failures": 0}
    assert payload["stages"][0]["name"] == "brute_force"

    text = console.export_text()
    assert "brute_force" in text
    assert "families: 28" in text


def test_render_without_saving(tmp_path):
    tel = Telemetry(output_dir=str(tmp_path), save_json_default=False)
    tel.begin_run(scan="TheoremScan", scan_id="x")
    assert tel.render(console=Console(record=True)) is None
    assert list(tmp_path.iterdir()) == []
