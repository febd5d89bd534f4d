import json
from random import Random
from pathlib import Path
from typing import Annotated, Optional

from rich.console import Console
from typer import Argument, Exit, Option, Typer

from rainbow_cycles.config import (
    DEFAULT_FAMILY_LIMIT,
    DEFAULT_MAX_S,
    DEFAULT_METRICS_DIR,
)
from rainbow_cycles.cycle.model import CycleContext
from rainbow_cycles.errors import InvalidParameters, ParseError, RainbowError
from rainbow_cycles.oracle.scans import (
    ConjectureScan,
    TheoremScan,
    conjecture_family_count,
    conjecture_family_lower_bound,
    theorem_family_count,
)
from rainbow_cycles.oracle.search import iter_independent_sets, random_instance
from rainbow_cycles.solver.instance import verify_certificate
from rainbow_cycles.solver.solve import solve as solve_instance
from rainbow_cycles.util.parse import (
    certificate_to_document,
    dumps,
    error_to_document,
    extract_json,
    instance_to_document,
    parse_certificate,
    parse_instance,
    report_to_document,
    verification_to_document,
)

app = Typer(
    help="Rainbow independent sets in odd cycles: solve, verify, scan.",
    no_args_is_help=True,
)

EXIT_FAILURE, EXIT_USAGE = 1, 2

WorkersOption = Annotated[
    Optional[int],
    Option(
        help="Worker processes (default: available CPUs).",
        envvar="RAINBOW_WORKERS",
        min=1,
    ),
]
MetricsOption = Annotated[
    bool, Option(help="Render stage timings and save them as JSON.")
]
MetricsDirOption = Annotated[
    Path,
    Option(help="Where --metrics saves JSON.", envvar="RAINBOW_METRICS_DIR"),
]
RuntimeOption = Annotated[
    bool,
    Option(
        "--runtime/--no-runtime",
        help="Include the elapsed-time block in the report.",
    ),
]


def _stderr() -> Console:
    return Console(stderr=True)


def _fail(err: RainbowError, code: int) -> Exit:
    print(dumps(error_to_document(err)))
    return Exit(code)


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e.strerror}.") from e


def _check_family_limit(count: int, limit: int, qualifier: str = "") -> None:
    if count > limit:
        raise InvalidParameters(
            f"{qualifier}{count:,} families exceed the limit of {limit:,}; "
            "pass --slow to run anyway."
        )


@app.command()
def solve(
    path: Annotated[Path, Argument(help="Instance JSON file.")],
) -> None:
    """Print a rainbow certificate for s independent s-sets of C_{2s+1}."""
    try:
        inst = parse_instance(extract_json(_read(path)))
        cert = solve_instance(inst)
    except RainbowError as e:
        raise _fail(e, EXIT_FAILURE)
    print(dumps(certificate_to_document(cert)))


@app.command()
def verify(
    instance: Annotated[Path, Argument(help="Instance JSON file.")],
    certificate: Annotated[Path, Argument(help="Certificate JSON file.")],
) -> None:
    """Exit 0 iff the certificate is a rainbow independent s-set."""
    try:
        inst = parse_instance(extract_json(_read(instance)))
        cert = parse_certificate(
            extract_json(_read(certificate)), inst.context
        )
    except ParseError as e:
        raise _fail(e, EXIT_USAGE)

    result = verify_certificate(inst, cert)
    print(dumps(verification_to_document(result)))
    if not result:
        raise Exit(EXIT_FAILURE)


@app.command()
def exhaustive(
    s: Annotated[int, Option(help="Family size; the cycle is C_{2s+1}.")],
    workers: WorkersOption = None,
    cross_check: Annotated[
        bool, Option(help="Also run the brute-force oracle on every family.")
    ] = False,
    max_s: Annotated[
        int, Option(help="Largest s accepted.", envvar="RAINBOW_MAX_S")
    ] = DEFAULT_MAX_S,
    metrics: MetricsOption = False,
    metrics_dir: MetricsDirOption = Path(DEFAULT_METRICS_DIR),
    runtime: RuntimeOption = True,
) -> None:
    """Solve and verify every rotation-reduced family of s arcs."""
    try:
        if not 1 <= s <= max_s:
            raise InvalidParameters(f"s must be in 1..{max_s}, got {s}.")
        scan = TheoremScan(
            s,
            cross_check=cross_check,
            workers=workers,
            enable_metrics=metrics,
            metrics_dir=str(metrics_dir),
        )
    except InvalidParameters as e:
        raise _fail(e, EXIT_USAGE)

    with _stderr().status(
        f"[grey50]Scanning {theorem_family_count(s):,} families "
        f"(s={s}, {scan.workers} workers) ..."
    ):
        report = scan.invoke()
    print(dumps(report_to_document(report, include_runtime=runtime)))
    if not report.ok:
        raise Exit(EXIT_FAILURE)


@app.command()
def conjecture(
    t: Annotated[int, Option(help="Cycle order.")],
    s: Annotated[int, Option(help="Set size and family size; s < t/2.")],
    workers: WorkersOption = None,
    slow: Annotated[
        bool, Option(help="Allow scans larger than --family-limit.")
    ] = False,
    family_limit: Annotated[
        int,
        Option(
            help="Largest scan run without --slow.",
            envvar="RAINBOW_FAMILY_LIMIT",
        ),
    ] = DEFAULT_FAMILY_LIMIT,
    metrics: MetricsOption = False,
    metrics_dir: MetricsDirOption = Path(DEFAULT_METRICS_DIR),
    runtime: RuntimeOption = True,
) -> None:
    """Brute-force every family of s independent s-sets of C_t."""
    try:
        scan = ConjectureScan(
            t,
            s,
            workers=workers,
            enable_metrics=metrics,
            metrics_dir=str(metrics_dir),
        )
        if not slow:
            # the bound needs no enumeration; the exact count may be huge
            _check_family_limit(
                conjecture_family_lower_bound(t, s), family_limit, "At least "
            )
        total = conjecture_family_count(t, s)
        if not slow:
            _check_family_limit(total, family_limit)
    except InvalidParameters as e:
        raise _fail(e, EXIT_USAGE)

    with _stderr().status(
        f"[grey50]Scanning {total:,} families "
        f"(t={t}, s={s}, {scan.workers} workers) ..."
    ):
        report = scan.invoke()
    print(dumps(report_to_document(report, include_runtime=runtime)))
    if not report.ok:
        raise Exit(EXIT_FAILURE)


@app.command("enumerate")
def enumerate_sets(
    t: Annotated[int, Option(help="Cycle order.")],
    m: Annotated[int, Option(help="Set size.")],
) -> None:
    """Print every independent m-set of C_t, one JSON list per line."""
    try:
        sets = iter_independent_sets(CycleContext(t), m)
        for S in sets:
            print(json.dumps(S.to_external()))
    except InvalidParameters as e:
        raise _fail(e, EXIT_USAGE)


@app.command("random")
def random_family(
    s: Annotated[int, Option(help="Family size; the cycle is C_{2s+1}.")],
    seed: Annotated[int, Option(help="Seed for the generator.")] = 0,
    max_s: Annotated[
        int, Option(help="Largest s accepted.", envvar="RAINBOW_MAX_S")
    ] = DEFAULT_MAX_S,
) -> None:
    """Print a seeded instance of s independent s-sets of C_{2s+1}."""
    try:
        if not 1 <= s <= max_s:
            raise InvalidParameters(f"s must be in 1..{max_s}, got {s}.")
        inst = random_instance(s, Random(seed))
    except InvalidParameters as e:
        raise _fail(e, EXIT_USAGE)
    print(dumps(instance_to_document(inst)))


@app.command()
def version() -> None:
    from importlib.metadata import version as get_version

    print(get_version("rainbow-cycles"))


def main():
    app()
