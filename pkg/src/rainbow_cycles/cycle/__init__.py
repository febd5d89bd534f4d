from .model import Arc as Arc
from .model import CycleContext as CycleContext
from .model import Vertex as Vertex
from .model import VertexSet as VertexSet
from .model import adjacency as adjacency
from .model import arc_members as arc_members
from .model import arc_of as arc_of
from .model import is_independent as is_independent
from .transform import DoublingMap as DoublingMap
from .transform import arc_to_independent_set as arc_to_independent_set
from .transform import independent_set_to_arc as independent_set_to_arc
