"""Acyclic orientations, joins, meets and lattice tests for cyclic interval
hypergraphic posets."""

from ._kernels import active as kernel_backend
from .errors import (
    BudgetExceeded,
    EdgeShapeError,
    EmptyGroundError,
    HyperposetError,
    InputError,
    InternalDisagreement,
    InvalidSource,
    PseudoJoinCyclic,
    PseudoMeetCyclic,
)
from .hypergraph import (
    CyclicIntervalHypergraph,
    GroundInterval,
    HuggingQuadruple,
    Hyperedge,
    Hypergraph,
    Kind,
    complete_cyclic_interval_hypergraph,
    complete_interval_hypergraph,
    find_fix,
    has_fix,
    hugging_quadruples,
    intersection_gap,
    parse,
    regular_closed,
    restrict,
    satisfies_characterization,
)
from .lattice import (
    OrientationFamily,
    fold_check,
    lattice_verdict,
    pseudo_join,
    pseudo_meet,
    x_of,
)
from .orientation import (
    Orientation,
    enumerate_acyclic,
    find_cycle,
    is_acyclic,
    orientation_from_permutation,
)
from .poset import (
    SourcePoset,
    brute_join,
    brute_meet,
    build_poset,
    hasse,
    is_lattice_bruteforce,
    leq,
    restriction_embedding_check,
)
from .report import LatticeReport, Method

__version__ = "0.1.0"
