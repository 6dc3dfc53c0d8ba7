"""Exact computations around sequentially Cohen-Macaulay edge ideals.

Monomial ideals, simplicial complexes, reduced homology over QQ or GF(p),
Betti numbers, graph predicates, and a harness that checks theorems about
them over enumerated graphs.
"""

from .complexes import SimplicialComplex
from .graphs import Graph, from_graph6
from .homology import reduced_homology
from .invariants import (
    BettiTable,
    associated_primes,
    betti_table,
    depth,
    is_cm,
    is_scm,
    is_scm_ideal,
    is_unmixed,
    proj_dim,
    regularity,
)
from .lab import CorpusSpec, TheoremId, VerificationReport, run_paper_examples, verify
from .linalg import GF2, RATIONALS, FieldSpec
from .monomial import MonomialIdeal, colon_ideal, parse_ideal_text, polarize, stanley_reisner

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "CorpusSpec",
    "FieldSpec",
    "GF2",
    "Graph",
    "MonomialIdeal",
    "RATIONALS",
    "SimplicialComplex",
    "TheoremId",
    "VerificationReport",
    "associated_primes",
    "betti_table",
    "colon_ideal",
    "depth",
    "from_graph6",
    "is_cm",
    "is_scm",
    "is_scm_ideal",
    "is_unmixed",
    "parse_ideal_text",
    "polarize",
    "proj_dim",
    "reduced_homology",
    "regularity",
    "run_paper_examples",
    "stanley_reisner",
    "verify",
]
