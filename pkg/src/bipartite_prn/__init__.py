"""Permutational representations of bipartite graphs via neighborhood posets and chain covers."""

__version__ = "0.1.0"

from .builder import (
    BoundsReport,
    BuildResult,
    ZetaCheck,
    bounds_report,
    check_zeta,
    choose_side,
    compose_disconnected,
    construct_best,
    construct_general,
    construct_zeta,
    default_cover,
    expand_twins,
    find_zeta_cover,
)
from .errors import *  # noqa: F401,F403
from .families import (
    ExtendedCrown,
    classify_width2,
    complete_bipartite,
    crown,
    crown_with_pendants,
    crown_with_universal,
    cycle_word,
    extended_crown,
    forbidden_prn2,
    largest_induced_crown,
    type2_word,
)
from .graph import BipartiteGraph, Graph, Reduction, contains_induced, detect_bipartition, reduce
from .oracle import OracleBudget, dimension, prn_exact, sweep_width2
from .poset import ChainCover, Poset, Realizer, dimension_bounds, neighborhood_poset, width_and_cover
from .words import PermSequence, Verdict, decode, is_uniform, represents
