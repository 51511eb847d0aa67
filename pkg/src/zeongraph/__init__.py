from . import json as json
from .algebra import CliffordElement as CliffordElement
from .algebra import MultiIndex as MultiIndex
from .algebra import ZeonElement as ZeonElement
from .app import CountResult as CountResult
from .app import Enumerator as Enumerator
from .app import VerificationReport as VerificationReport
from .config import Config as Config
from .errors import ZeonGraphError as ZeonGraphError
from .graphs import builtin_graph as builtin_graph
from .graphs import Graph as Graph
from .graphs import IntMatrix as IntMatrix
from .graphs import parse_edge_list as parse_edge_list
from .linalg import det as det
from .linalg import per as per
from .signals import count_finished as count_finished
from .signals import count_started as count_started
from .signals import verification_failed as verification_failed
