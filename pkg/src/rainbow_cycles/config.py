import os

# Largest s accepted by the exhaustive theorem scan; (2s+1)^(s-1) families
# at s = 7 is already 15^6.
DEFAULT_MAX_S = 7

# Conjecture scans with more families than this need --slow.
DEFAULT_FAMILY_LIMIT = 250_000

DEFAULT_METRICS_DIR = ".rainbow_metrics"


def default_workers() -> int:
    return os.cpu_count() or 1
