"""Finite topological spaces, their discretizations and compactifications."""
from .errors import TopolabError, TooLarge
from .fintop import (
    FinSpace,
    Partition,
    PointMap,
    antidiscrete,
    discrete,
    enumerate_topologies,
    make_space,
    random_space,
    sierpinski,
)
from .io import load_space, space_from_json, space_to_json

__version__ = "0.1.0"

__all__ = [
    "FinSpace",
    "Partition",
    "PointMap",
    "TooLarge",
    "TopolabError",
    "antidiscrete",
    "discrete",
    "enumerate_topologies",
    "load_space",
    "make_space",
    "random_space",
    "sierpinski",
    "space_from_json",
    "space_to_json",
]
