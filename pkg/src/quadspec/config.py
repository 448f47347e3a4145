"""Global numeric knobs.

One tolerance (epsilon) governs every spectral comparison in the library;
it can be overridden per call, via the CLI flag, or with the QS_EPSILON
environment variable.
"""

import os

DEFAULT_EPSILON = 1e-9

# Largest vertex count the bitset adjacency representation accepts.
VERTEX_CAP = 4096

# Largest n handled by the dense eigensolver (full_spectrum).
DENSE_BOUND = 512

# Largest n for the brute-force 4-subset cycle enumerator.
ENUM_BOUND = 20

# Largest n for the built-in isomorphism-class enumerator.
SMALL_GRAPH_MAX_N = 7

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 100_000


def get_epsilon(eps=None):
    """Resolve the spectral comparison tolerance.

    Explicit argument wins, then the QS_EPSILON environment variable,
    then the built-in default.
    """
    if eps is not None:
        return float(eps)
    env = os.environ.get("QS_EPSILON")
    if env is not None:
        return float(env)
    return DEFAULT_EPSILON
