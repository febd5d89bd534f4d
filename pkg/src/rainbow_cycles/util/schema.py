from typing import List, Literal, Optional, TypedDict

# All vertices and set indices in documents are 1-based.


class InstanceDocument(TypedDict):
    t: int  # cycle order
    sets: List[List[int]]  # the family, repeats allowed


class TraceDocument(TypedDict):
    rho: int  # rotation added to arc starts
    permutation: List[int]  # original set index per normalized position
    k: int  # chosen shift
    case: Literal[1, 2]
    r: int
    window_start: int  # first window vertex, normalized frame


class CertificateDocument(TypedDict, total=False):
    assignment: List[List[int]]  # [set_index, vertex] pairs
    trace: TraceDocument  # optional when re-verifying


class ScanFailureDocument(TypedDict):
    sets: List[List[int]]  # the failing family
    reason: str  # error code or verification reason


class RuntimeDocument(TypedDict):
    elapsed_s: float
    workers: int


class ScanReportDocument(TypedDict, total=False):
    kind: Literal["theorem", "conjecture"]
    t: int
    s: int
    families: int  # number of families examined
    failures: int  # len(failing_families)
    failing_families: List[ScanFailureDocument]
    runtime: RuntimeDocument  # the only non-deterministic block


class ErrorDocument(TypedDict):
    error: str  # RainbowError code
    message: str
    set_index: Optional[int]


class VerificationDocument(TypedDict, total=False):
    verified: bool
    reason: str  # size | membership | distinctness | independence
    detail: str
