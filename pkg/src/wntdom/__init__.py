"""Small dominating sets of plane triangulations by reducing weak near-triangulations."""

from .coloring import ThreeColoring, nt_dominating_coloring, wnt_dominating_coloring
from .errors import DefectError, DomainError, WntdomError
from .generators import GenSpec, fixture
from .oracle import exact_domination_number, minimum_dominating_set, verify_dominating_set
from .pipeline import DominationResult, Strategy, bound, dominate
from .plane_graph import PlaneGraph, build, delete_vertices, induced
from .reduction import CaseTag, ReductionStep, apply_reduction, find_reduction
from .wnt import is_wnt, is_wnt_minus

__version__ = "0.1.0"

__all__ = [
    "CaseTag",
    "DefectError",
    "DomainError",
    "DominationResult",
    "GenSpec",
    "PlaneGraph",
    "ReductionStep",
    "Strategy",
    "ThreeColoring",
    "WntdomError",
    "apply_reduction",
    "bound",
    "build",
    "delete_vertices",
    "dominate",
    "exact_domination_number",
    "find_reduction",
    "fixture",
    "induced",
    "is_wnt",
    "is_wnt_minus",
    "minimum_dominating_set",
    "nt_dominating_coloring",
    "verify_dominating_set",
    "wnt_dominating_coloring",
]
