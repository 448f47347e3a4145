"""Count 4-cycle subgraphs by four mutually checking methods.

Counts are unlabeled subgraph counts: one per vertex set plus cyclic
structure, so K4 holds exactly three.  The canonical count is the exact
integer codegree method; the eigenvalue evaluation is a floating-point
diagnostic cross-check.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .config import DENSE_BOUND, ENUM_BOUND
from .errors import InternalConsistencyError, SizeError
from .graphs import Graph, degree_stats
from .spectral import full_spectrum

SPECTRAL_REL_TOL = 1e-6


@dataclass(frozen=True)
class C4Report:
    """All applicable counts plus their agreement.

    closed_walks_4 is tr A^4; it ties the counts together through
    tr A^4 = 2m + 4*sum_u C(d_u,2) + 8*count.
    """
    count_codegree: int
    count_walks: int
    count_enumeration: Optional[int]
    count_spectral: Optional[float]
    closed_walks_4: int
    agreement: bool


def count_c4_codegree(graph: Graph) -> int:
    """Exact count: half the sum over vertex pairs of C(codegree, 2)."""
    return kernels.c4_codegree_count(graph)


def closed_walks_4(graph: Graph) -> int:
    """tr A^4, combinatorially (sum of squared codegrees, diagonal = degree)."""
    return kernels.closed_walk4_total(graph)


def count_c4_walks(graph: Graph) -> int:
    """Exact count via inversion of the closed-4-walk identity."""
    stats = degree_stats(graph)
    tr4 = kernels.closed_walk4_total(graph, np.array(stats.degrees, dtype=np.int64))
    paths = sum(d * (d - 1) // 2 for d in stats.degrees)
    numerator = tr4 - 2 * graph.m - 4 * paths
    if numerator % 8 or numerator < 0:
        raise InternalConsistencyError(
            f"walk inversion gave non-integer count: tr A^4={tr4}, m={graph.m}, "
            f"path pairs={paths}")
    return numerator // 8


def count_c4_enumeration(graph: Graph) -> int:
    """Brute-force count over all 4-subsets; limited to small graphs."""
    if graph.n > ENUM_BOUND:
        raise SizeError(f"n={graph.n} exceeds the enumeration bound {ENUM_BOUND}")
    return kernels.c4_enum_count(graph)


def count_c4_spectral(graph: Graph) -> float:
    """Eigenvalue identity: sum(lambda^4)/8 + m/4 - M/4."""
    spec = full_spectrum(graph)  # raises SizeError over the dense bound
    stats = degree_stats(graph)
    lam4 = float((spec.eigenvalues ** 4).sum())
    return lam4 / 8.0 + graph.m / 4.0 - stats.M / 4.0


def count_report(graph: Graph) -> C4Report:
    """Run every applicable method; disagreement is reported, never hidden."""
    codeg = count_c4_codegree(graph)
    walks = count_c4_walks(graph)
    tr4 = closed_walks_4(graph)
    enum = count_c4_enumeration(graph) if graph.n <= ENUM_BOUND else None
    spectral = count_c4_spectral(graph) if graph.n <= DENSE_BOUND else None

    stats = degree_stats(graph)
    paths = sum(d * (d - 1) // 2 for d in stats.degrees)
    walk_identity = tr4 == 2 * graph.m + 4 * paths + 8 * codeg

    agreement = codeg == walks and walk_identity
    if enum is not None:
        agreement = agreement and enum == codeg
    if spectral is not None:
        agreement = agreement and (
            abs(spectral - codeg) <= SPECTRAL_REL_TOL * max(1, codeg))
    return C4Report(
        count_codegree=codeg,
        count_walks=walks,
        count_enumeration=enum,
        count_spectral=spectral,
        closed_walks_4=tr4,
        agreement=bool(agreement),
    )
