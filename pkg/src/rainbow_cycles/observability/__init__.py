from .timing import StageTimer as StageTimer
from .timing import Telemetry as Telemetry
from .timing import timed as timed
