from .scans import BaseScan as BaseScan
from .scans import ConjectureScan as ConjectureScan
from .scans import ScanFailure as ScanFailure
from .scans import ScanReport as ScanReport
from .scans import TheoremScan as TheoremScan
from .scans import conjecture_family_count as conjecture_family_count
from .scans import (
    conjecture_family_lower_bound as conjecture_family_lower_bound,
)
from .scans import conjecture_scan as conjecture_scan
from .scans import exhaustive_theorem_check as exhaustive_theorem_check
from .scans import independent_set_count as independent_set_count
from .scans import partition as partition
from .scans import theorem_family_count as theorem_family_count
from .search import brute_force_rainbow as brute_force_rainbow
from .search import canonical_rotation as canonical_rotation
from .search import enumerate_independent_sets as enumerate_independent_sets
from .search import is_canonical as is_canonical
from .search import iter_independent_sets as iter_independent_sets
from .search import random_instance as random_instance
