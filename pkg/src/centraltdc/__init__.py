"""Exact total dominator colorings of central graphs."""

from .central import CentralGraph, central
from .coloring import Coloring, SolveResult, chromatic_number, dominated_classes, is_proper, is_tdc, is_tds
from .errors import (
    BudgetExceeded,
    CapacityError,
    MalformedColoringError,
    ParameterError,
    ParseError,
    TDCError,
    UndefinedError,
)
from .graph import FamilySpec, Graph, build_family, classify, complement, components, disjoint_union, join
from .solvers import tdc_number, total_domination_number

__version__ = "0.1.0"
