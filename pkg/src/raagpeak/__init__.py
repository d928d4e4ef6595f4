"""Whitehead automorphisms, peak reduction and orbit questions for
right-angled Artin groups given by a finite simplicial graph."""

from ._kernels import JIT_ENABLED
from .errors import CapExceeded, InternalError, MalformedInput, NegativeDecision, RaagError
from .graph import Graph, complete, edgeless, parse_graph, path
from .whitehead import (
    Factorization,
    Type1,
    Type2,
    apply,
    compose,
    enumerate_omega,
    make_type1,
    make_type2,
)
from .words import parse_tuple, parse_word, reduce_cyclic, reduce_word

__version__ = "0.1.0"

__all__ = [
    "JIT_ENABLED", "CapExceeded", "InternalError", "MalformedInput", "NegativeDecision",
    "RaagError", "Graph", "complete", "edgeless", "parse_graph", "path", "Factorization",
    "Type1", "Type2", "apply", "compose", "enumerate_omega", "make_type1", "make_type2",
    "parse_tuple", "parse_word", "reduce_cyclic", "reduce_word",
]
