import json
import re
from typing import Any

from rainbow_cycles.cycle.model import CycleContext, VertexSet
from rainbow_cycles.errors import InvalidParameters, ParseError, RainbowError
from rainbow_cycles.oracle.scans import ScanReport
from rainbow_cycles.solver.instance import (
    Instance,
    RainbowCertificate,
    Verification,
)
from rainbow_cycles.util.schema import (
    CertificateDocument,
    ErrorDocument,
    InstanceDocument,
    ScanReportDocument,
    VerificationDocument,
)

_FENCED = re.compile(r"```(?:json)?\s*([\[{].*?[\]}])\s*```", re.DOTALL)


def extract_json(text: str) -> Any:
    """
    Parse a JSON document given raw or inside a fenced code block.

    Raises:
        ParseError: If no valid JSON is found.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        error = e

    # Documents pasted from notes often arrive inside ```json fences.
    block = _FENCED.search(text)
    if block:
        try:
            return json.loads(block.group(1))
        except json.JSONDecodeError as e:
            error = e
    raise ParseError(f"Not a JSON document: {error}.")


def dumps(doc: Any) -> str:
    # fixed key order and layout so identical runs print identical bytes
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_instance(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise ParseError("Instance document must be a JSON object.")
    t, sets = doc.get("t"), doc.get("sets")
    if not _is_int(t):
        raise ParseError(f"'t' must be an integer, got {t!r}.")
    if not isinstance(sets, list):
        raise ParseError("'sets' must be a list of vertex lists.")
    try:
        ctx = CycleContext(t)
    except InvalidParameters as e:
        raise ParseError(e.message) from e

    family = []
    for i, labels in enumerate(sets):
        if not isinstance(labels, list) or not all(map(_is_int, labels)):
            raise ParseError(
                f"Set {i + 1} must be a list of integers.", index=i
            )
        try:
            family.append(VertexSet.from_external(ctx, labels))
        except InvalidParameters as e:
            raise ParseError(f"Set {i + 1}: {e.message}", index=i) from e
    return Instance(ctx, tuple(family))


def instance_to_document(inst: Instance) -> InstanceDocument:
    return {
        "t": inst.context.t,
        "sets": [S.to_external() for S in inst.family],
    }


def parse_certificate(doc: Any, ctx: CycleContext) -> RainbowCertificate:
    """Read the assignment; the trace is not needed to verify."""
    if not isinstance(doc, dict) or not isinstance(doc.get("assignment"), list):
        raise ParseError("Certificate document needs an 'assignment' list.")
    assignment = {}
    for pair in doc["assignment"]:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(map(_is_int, pair))
        ):
            raise ParseError(f"Assignment entry {pair!r} is not [set, vertex].")
        index, label = pair
        if index < 1:
            raise ParseError(f"Set index {index} must be >= 1.")
        if index - 1 in assignment:
            raise ParseError(f"Set index {index} is assigned twice.")
        try:
            assignment[index - 1] = ctx.from_external(label)
        except InvalidParameters as e:
            raise ParseError(e.message) from e
    return RainbowCertificate(assignment=assignment)


def certificate_to_document(cert: RainbowCertificate) -> CertificateDocument:
    doc: CertificateDocument = {
        "assignment": [[i + 1, v + 1] for i, v in sorted(cert.assignment.items())]
    }
    if cert.trace is not None:
        tr = cert.trace
        doc["trace"] = {
            "rho": tr.rotation,
            "permutation": [i + 1 for i in tr.permutation],
            "k": tr.k,
            "case": int(tr.case),
            "r": tr.r,
            "window_start": tr.window_start,
        }
    return doc


def report_to_document(
    report: ScanReport, include_runtime: bool = True
) -> ScanReportDocument:
    doc: ScanReportDocument = {
        "kind": report.kind,
        "t": report.t,
        "s": report.s,
        "families": report.families,
        "failures": len(report.failures),
        "failing_families": [
            {"sets": [[v + 1 for v in S] for S in f.family], "reason": f.reason}
            for f in report.failures
        ],
    }
    if include_runtime:
        doc["runtime"] = {
            "elapsed_s": round(report.elapsed_s, 3),
            "workers": report.workers,
        }
    return doc


def error_to_document(err: RainbowError) -> ErrorDocument:
    return {
        "error": err.code,
        "message": err.message,
        "set_index": None if err.index is None else err.index + 1,
    }


def verification_to_document(result: Verification) -> VerificationDocument:
    if result:
        return {"verified": True}
    return {"verified": False, "reason": result.reason, "detail": result.detail}
