"""Graded Betti numbers of the hyperedge ideal I_r(G) of the r-connectedness hypergraph.

Closed forms for joins and standard graph families live in ``formulas``;
``hochster`` recomputes any table by brute force over exact homology.
"""

from .complex import SimplicialComplex, con_r, ind_r
from .formulas import betti_join, reg_join
from .graph import Graph, join, make_graph
from .hochster import betti_hochster
from .homology import QQ, FieldSpec
from .table import BettiTable, projective_dimension, regularity, render_table

__all__ = [
    "BettiTable", "FieldSpec", "Graph", "QQ", "SimplicialComplex",
    "betti_hochster", "betti_join", "con_r", "ind_r", "join", "make_graph",
    "projective_dimension", "reg_join", "regularity", "render_table",
]
