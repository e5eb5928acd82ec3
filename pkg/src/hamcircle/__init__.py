"""Hamiltonicity toolkit: squares of graphs, outerplanar certification,
minor detection, and unique Hamilton circles in locally finite graphs."""

from .graphs import (
    FiniteGraph,
    GraphError,
    MultiGraph,
    enumerate_hamilton_cycles,
    enumerate_hamilton_paths,
    kth_power,
)
from .lazy import BudgetError, LazyGraph, double_ladder, lazy_power

__all__ = [
    "FiniteGraph",
    "GraphError",
    "MultiGraph",
    "BudgetError",
    "LazyGraph",
    "enumerate_hamilton_cycles",
    "enumerate_hamilton_paths",
    "kth_power",
    "double_ladder",
    "lazy_power",
]

__version__ = "0.1.0"
