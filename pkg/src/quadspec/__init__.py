"""quadspec: spectral supersaturation of quadrilaterals.

Counts 4-cycles by four mutually checking methods, runs the
small-eigenvalue-edge deletion algorithm with per-step certification,
verifies a family of spectral inequalities exhaustively on small graphs,
and searches for minimizers of the 4-cycle count under a spectral-radius
condition.
"""

__version__ = "0.1.0"

from .graphs import (  # noqa: F401
    Graph,
    DegreeStats,
    EdgeListResult,
    book,
    clique_join_independent,
    clique_plus_pendants,
    complete,
    complete_bipartite,
    construct,
    cycle,
    degree_stats,
    from_edge_list,
    from_graph6,
    is_star_with_isolated,
    read_graph6_stream,
    remove_isolated,
    star,
    to_edge_list,
    to_graph6,
)
from .spectral import (  # noqa: F401
    InterlacingReport,
    PerronResult,
    SpectrumResult,
    check_interlacing,
    full_spectrum,
    perron,
    spectral_radius,
)
from .quadcount import (  # noqa: F401
    C4Report,
    count_c4_codegree,
    count_c4_enumeration,
    count_c4_spectral,
    count_c4_walks,
    count_report,
)
from .dsee import (  # noqa: F401
    DseeStep,
    DseeTrace,
    HypothesisReport,
    check_lambda_decay,
    check_rayleigh_steps,
    dsee_run,
    dsee_step,
    lemma7_hypothesis,
)
from .verify import (  # noqa: F401
    CLAIM_IDS,
    SweepSummary,
    VerifyReport,
    sweep_small_graphs,
    verify_bipartite_bound,
    verify_degree_square_bound,
    verify_fm_bounds,
    verify_hofmeister,
    verify_interlacing,
    verify_thm11,
    verify_thm42,
)
from .search import (  # noqa: F401
    SearchRecord,
    bound_table,
    exhaustive_fmin,
    local_search_fmin,
)
from .enumeration import enumerate_graphs  # noqa: F401
