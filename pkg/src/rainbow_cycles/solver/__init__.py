from .construction import NormalizedArcs as NormalizedArcs
from .construction import ShiftChoice as ShiftChoice
from .construction import admissible_shifts as admissible_shifts
from .construction import check_claims as check_claims
from .construction import choose_k as choose_k
from .construction import claim_violations as claim_violations
from .construction import classify_shift as classify_shift
from .construction import construct_assignment as construct_assignment
from .construction import forbidden_residues as forbidden_residues
from .construction import normalize as normalize
from .instance import CaseTag as CaseTag
from .instance import Instance as Instance
from .instance import RainbowCertificate as RainbowCertificate
from .instance import Trace as Trace
from .instance import Verification as Verification
from .instance import verify_certificate as verify_certificate
from .solve import solve as solve
