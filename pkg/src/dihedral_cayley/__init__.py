"""Cayley graphs of dihedral groups with four-element connection sets.

Exact modular arithmetic in D_2n, connection-set classification, graph
construction, automorphism groups by individualization-refinement with a
Schreier-Sims cross-check, structural decompositions and hypothesis-gated
theorem checkers.
"""

from .connset import ConnectionSet, Kind, parse_connection_set, validate
from .dihedral import AffineMap, DihedralElement, parse_element, parse_elements
from .graphs import Graph, cayley, circulant, isomorphic
from .permgroup import PermGroup
from .autsearch import automorphism_group, cayley_is_normal
from .structure import StructureReport, analyze, verify_structure
from .theorems import TheoremReport, Verdict

__all__ = [
    "AffineMap", "ConnectionSet", "DihedralElement", "Graph", "Kind", "PermGroup",
    "StructureReport", "TheoremReport", "Verdict", "analyze", "automorphism_group",
    "cayley", "cayley_is_normal", "circulant", "isomorphic", "parse_connection_set",
    "parse_element", "parse_elements", "validate", "verify_structure",
]
