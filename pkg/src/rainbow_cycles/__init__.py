from .cycle import Arc as Arc
from .cycle import CycleContext as CycleContext
from .cycle import DoublingMap as DoublingMap
from .cycle import VertexSet as VertexSet
from .cycle import adjacency as adjacency
from .cycle import arc_members as arc_members
from .cycle import arc_to_independent_set as arc_to_independent_set
from .cycle import independent_set_to_arc as independent_set_to_arc
from .cycle import is_independent as is_independent
from .errors import RainbowError as RainbowError
from .oracle import brute_force_rainbow as brute_force_rainbow
from .oracle import conjecture_scan as conjecture_scan
from .oracle import enumerate_independent_sets as enumerate_independent_sets
from .oracle import exhaustive_theorem_check as exhaustive_theorem_check
from .solver import Instance as Instance
from .solver import RainbowCertificate as RainbowCertificate
from .solver import solve as solve
from .solver import verify_certificate as verify_certificate
