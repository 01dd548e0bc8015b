"""Lower bounds for the independence number of k-uniform hypergraphs."""

from .alpha import AlphaResult, SolverConfig, alpha_exact, alpha_naive
from .bounds import (
    BOUND_NAMES,
    BoundReport,
    NotApplicable,
    caro_tuza_bound,
    compute_report,
    cps_bound,
    ell_bound,
    ell_closed_form_k2,
    f_eval,
    falling_factorial,
    rising_factorial,
    turan_bound,
    turan_spencer_bound,
)
from .hypergraph import (
    Hypergraph,
    complete,
    complete_minus_one_edge,
    degree_sequence,
    empty,
    is_independent,
    random_regular,
    random_uniform,
    validate,
)
from .io import parse_hypergraph, serialize_hypergraph

__version__ = "0.1.0"
