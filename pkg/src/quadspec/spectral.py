"""Eigenvalue machinery: dominant eigenpair by shifted power iteration,
full spectra of small graphs by a dense symmetric solver, and eigenvalue
interlacing checks for principal submatrices.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .config import DEFAULT_MAX_ITER, DEFAULT_TOL, DENSE_BOUND
from .errors import ConvergenceError, DegenerateGraphError, SizeError
from .graphs import Graph


@dataclass(frozen=True)
class PerronResult:
    """Dominant eigenvalue and unit nonnegative eigenvector.

    residual is the infinity norm of A x - lambda x; on a disconnected
    graph the vector is supported on the dominant component(s) only.
    """
    lam: float
    vector: np.ndarray
    iterations: int
    residual: float


@dataclass(frozen=True)
class SpectrumResult:
    """All adjacency eigenvalues, sorted descending."""
    eigenvalues: np.ndarray


@dataclass(frozen=True)
class InterlacingReport:
    """Both spectra plus the two slack chains of the interlacing theorem.

    upper_slack[i] = lambda_i - mu_i, lower_slack[i] = mu_i - lambda_{i+n-r}
    (0-based i); passes iff every slack >= -tol.
    """
    full_spectrum: np.ndarray
    sub_spectrum: np.ndarray
    upper_slack: np.ndarray
    lower_slack: np.ndarray
    min_slack: float
    passes: bool


def perron(graph: Graph, tol: float = DEFAULT_TOL,
           max_iter: int = DEFAULT_MAX_ITER,
           x0: Optional[np.ndarray] = None) -> PerronResult:
    """Dominant eigenpair by power iteration on A + I.

    The unit shift breaks the +lambda/-lambda oscillation on bipartite
    graphs and keeps all iterates nonnegative.  The start vector is
    all-ones (or x0 for warm starts), which makes the limit deterministic;
    ties between components resolve to the mixture the start vector
    projects onto.
    """
    if graph.m < 1:
        raise DegenerateGraphError("perron needs at least one edge")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = graph.n
    a = graph.dense()
    if x0 is not None and len(x0) == n and np.any(x0 > 0):
        x = np.clip(np.asarray(x0, dtype=np.float64), 0.0, None)
        x /= np.linalg.norm(x)
        # keep some mass everywhere so a warm start can never lock onto a
        # component that is no longer dominant
        x += 1e-8
    else:
        x = np.ones(n, dtype=np.float64)
    x /= np.linalg.norm(x)
    lam = 0.0
    residual = np.inf
    iterations = 0
    for iterations in range(1, max_iter + 1):
        ax = a @ x
        lam = float(x @ ax)
        residual = float(np.max(np.abs(ax - lam * x)))
        if residual <= tol:
            break
        y = ax + x  # one step of (A + I) x
        x = y / np.linalg.norm(y)
    if residual > tol:
        raise ConvergenceError(
            f"power iteration: residual {residual:.3e} > tol {tol:.3e} "
            f"after {max_iter} iterations",
            last_lambda=lam, last_vector=x, residual=residual,
            iterations=iterations)
    return PerronResult(lam=lam, vector=x, iterations=iterations,
                        residual=residual)


def full_spectrum(graph: Graph, dense_bound: int = DENSE_BOUND) -> SpectrumResult:
    """All n adjacency eigenvalues, sorted descending.

    Bounded by the dense-solver limit; for larger graphs use perron, which
    provides the top eigenvalue only.
    """
    if graph.n > dense_bound:
        raise SizeError(
            f"n={graph.n} exceeds the dense solver bound {dense_bound}; "
            "use perron for the dominant eigenvalue")
    vals = kernels.dense_eigvals(graph.dense())
    return SpectrumResult(eigenvalues=np.asarray(vals, dtype=np.float64))


def spectral_radius(graph: Graph, dense_bound: int = DENSE_BOUND) -> float:
    """Largest adjacency eigenvalue (0 for an edgeless graph)."""
    if graph.m == 0:
        return 0.0
    if graph.n <= dense_bound:
        return float(full_spectrum(graph, dense_bound).eigenvalues[0])
    return perron(graph).lam


def check_interlacing(graph: Graph, vertex_subset,
                      tol: float = 1e-8) -> InterlacingReport:
    """Check that the induced-subgraph spectrum interlaces the full one."""
    subset = sorted(set(int(v) for v in vertex_subset))
    r = len(subset)
    if r == 0:
        raise ValueError("vertex_subset must be nonempty")
    if r >= graph.n:
        raise ValueError(f"subset size {r} must be smaller than n={graph.n}")
    full = full_spectrum(graph).eigenvalues
    sub = full_spectrum(graph.induced_subgraph(subset)).eigenvalues
    n = graph.n
    upper = full[:r] - sub
    lower = sub - full[n - r:]
    min_slack = float(min(upper.min(), lower.min()))
    return InterlacingReport(
        full_spectrum=full, sub_spectrum=sub,
        upper_slack=upper, lower_slack=lower,
        min_slack=min_slack, passes=bool(min_slack >= -tol))
