"""Small-product edge deletion with per-step certification.

The driver repeatedly deletes an edge uv whose Perron-component product
x_u * x_v is at most 1/(9 * sqrt(e)) where e is the current edge count,
stopping after floor(m/2) deletions or when no edge qualifies.  Every step
records the product, the threshold, the spectral radius before and after,
and the certified post-deletion floor sqrt(m - i - 1).

Isolated vertices are removed at the top of every iteration; deleted edges
are reported in the labeling of the input graph.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .config import DEFAULT_MAX_ITER, DEFAULT_TOL, get_epsilon
from .errors import ConvergenceError, DegenerateGraphError, StaleEigenpairError
from .graphs import Graph, is_star_with_isolated
from .quadcount import count_c4_codegree
from .spectral import PerronResult, perron

STOP_NO_SMALL_EDGE = "no_small_edge"
STOP_STEP_CAP = "step_cap"
STOP_DEGENERATE = "degenerate"

# size floor in the hypothesis behind the quadratic count conclusion
HYPOTHESIS_SIZE_FLOOR = 1.8e9


@dataclass(frozen=True)
class DseeStep:
    index: int
    u: int
    v: int
    product: float
    threshold: float
    lambda_before: float
    lambda_after: float
    claim8_bound: float
    claim8_ok: bool


@dataclass(frozen=True)
class DseeTrace:
    initial_m: int
    steps: Tuple[DseeStep, ...]
    k: int
    terminal_graph: Graph
    stop_reason: str
    terminal_is_star: bool


@dataclass(frozen=True)
class HypothesisReport:
    """Checks of the edge-product hypothesis and its counting conclusion.

    applicable means: spectral radius at least sqrt(m), every edge product
    above 1/(9 sqrt(m)), and the graph is not a star.  scale_ok records
    whether m reaches the hypothesis's stated size floor; below it a
    violated conclusion is a data point, not a refutation.
    """
    m: int
    lam: float
    sqrt_m: float
    lambda_ok: bool
    min_product: float
    min_product_edge: Optional[Tuple[int, int]]
    threshold: float
    products_ok: bool
    is_star: bool
    scale_ok: bool
    applicable: bool
    f_count: int
    bound_m2_over_500: float
    conclusion_satisfied: Optional[bool]


def _validate_eigenpair(graph: Graph, pr: PerronResult, stale_tol: float):
    if len(pr.vector) != graph.n:
        raise StaleEigenpairError(
            f"eigenvector has {len(pr.vector)} entries for a graph on {graph.n}")
    ax = graph.dense() @ pr.vector
    residual = float(np.max(np.abs(ax - pr.lam * pr.vector)))
    if residual > stale_tol:
        raise StaleEigenpairError(
            f"eigenpair residual {residual:.3e} exceeds {stale_tol:.3e}")


def dsee_step(graph: Graph, pr: PerronResult,
              eps: Optional[float] = None) -> Optional[Tuple[int, int, float]]:
    """Select the edge to delete, or None when no product is small enough.

    Among edges with x_u * x_v <= 1/(9 sqrt(m)) + eps, returns the one of
    minimum product; products within eps of the minimum count as tied and
    resolve to the lexicographically smallest (u, v).  The eps window makes
    the choice stable for automorphic edges, whose products tie exactly in
    exact arithmetic but differ by rounding noise here.
    """
    if graph.m < 1:
        raise DegenerateGraphError("dsee_step needs at least one edge")
    eps = get_epsilon(eps)
    _validate_eigenpair(graph, pr, stale_tol=max(eps, 1e-9))
    threshold = 1.0 / (9.0 * math.sqrt(graph.m))
    x = pr.vector
    qualifying = [(float(x[u] * x[v]), u, v) for u, v in graph.edges()
                  if float(x[u] * x[v]) <= threshold + eps]
    if not qualifying:
        return None
    p_min = min(p for p, _, _ in qualifying)
    u, v = min((u, v) for p, u, v in qualifying if p <= p_min + eps)
    return u, v, float(x[u] * x[v])


def dsee_run(graph: Graph, tol: float = DEFAULT_TOL,
             max_iter: int = DEFAULT_MAX_ITER,
             eps: Optional[float] = None,
             warm_start: bool = False) -> DseeTrace:
    """Run the deletion loop and certify every step.

    Stops at floor(m/2) deletions (step_cap), when no edge qualifies
    (no_small_edge), or if the graph runs out of edges (degenerate).  The
    Perron vector is recomputed from scratch each step unless warm_start
    is set; warm starting changes iteration counts only.
    """
    if graph.m < 1:
        raise DegenerateGraphError("dsee_run needs at least one edge")
    eps = get_epsilon(eps)
    m0 = graph.m
    cap = m0 // 2

    current, orig = _strip_isolated(graph, list(range(graph.n)))
    steps = []

    def _perron(g, x0):
        try:
            return perron(g, tol=tol, max_iter=max_iter,
                          x0=x0 if warm_start else None)
        except ConvergenceError as exc:
            exc.partial_trace = tuple(steps)
            raise

    pr = _perron(current, None)
    i = 0
    while True:
        if current.m == 0:
            stop = STOP_DEGENERATE
            break
        if i == cap:
            stop = STOP_STEP_CAP
            break
        sel = dsee_step(current, pr, eps=eps)
        if sel is None:
            stop = STOP_NO_SMALL_EDGE
            break
        u, v, product = sel
        threshold = 1.0 / (9.0 * math.sqrt(current.m))
        lambda_before = pr.lam

        nxt = current.delete_edge(u, v)
        keep = np.nonzero(nxt.degrees() > 0)[0].tolist()
        cleaned = nxt.induced_subgraph(keep) if len(keep) < nxt.n else nxt
        orig_next = [orig[j] for j in keep] if len(keep) < nxt.n else orig

        if cleaned.m > 0:
            x0 = pr.vector[keep] if len(keep) < nxt.n else pr.vector
            pr_next = _perron(cleaned, x0)
            lambda_after = pr_next.lam
        else:
            pr_next = None
            lambda_after = 0.0

        bound = math.sqrt(m0 - i - 1)
        steps.append(DseeStep(
            index=i, u=orig[u], v=orig[v], product=product,
            threshold=threshold, lambda_before=lambda_before,
            lambda_after=lambda_after, claim8_bound=bound,
            claim8_ok=bool(lambda_after >= bound - eps)))

        current, orig, pr = cleaned, orig_next, pr_next
        i += 1

    assert len(steps) <= cap
    assert current.m == m0 - len(steps)
    return DseeTrace(
        initial_m=m0, steps=tuple(steps), k=len(steps),
        terminal_graph=current, stop_reason=stop,
        terminal_is_star=is_star_with_isolated(current))


def _strip_isolated(graph: Graph, labels):
    keep = np.nonzero(graph.degrees() > 0)[0].tolist()
    if len(keep) == graph.n:
        return graph, labels
    return graph.induced_subgraph(keep), [labels[j] for j in keep]


def lemma7_hypothesis(graph: Graph, pr: PerronResult,
                      eps: Optional[float] = None) -> HypothesisReport:
    """Check the minimum-edge-product hypothesis and probe its conclusion."""
    eps = get_epsilon(eps)
    _validate_eigenpair(graph, pr, stale_tol=max(eps, 1e-9))
    m = graph.m
    sqrt_m = math.sqrt(m)
    threshold = 1.0 / (9.0 * sqrt_m) if m else math.inf
    x = pr.vector
    min_product, min_edge = math.inf, None
    for u, v in graph.edges():
        product = float(x[u] * x[v])
        if product < min_product:
            min_product, min_edge = product, (u, v)
    lambda_ok = pr.lam >= sqrt_m - eps
    products_ok = min_product > threshold - eps
    star = is_star_with_isolated(graph)
    applicable = lambda_ok and products_ok and not star
    f = count_c4_codegree(graph)
    conclusion = bool(500 * f >= m * m) if applicable else None
    return HypothesisReport(
        m=m, lam=pr.lam, sqrt_m=sqrt_m, lambda_ok=bool(lambda_ok),
        min_product=min_product, min_product_edge=min_edge,
        threshold=threshold, products_ok=bool(products_ok), is_star=star,
        scale_ok=bool(m >= HYPOTHESIS_SIZE_FLOOR), applicable=bool(applicable),
        f_count=f, bound_m2_over_500=m * m / 500.0,
        conclusion_satisfied=conclusion)


def check_lambda_decay(trace: DseeTrace, eps: Optional[float] = None) -> bool:
    """Certify the recorded spectral-radius decay of a finished trace.

    Each step i must satisfy both
      lambda_after >= lambda_before - 2/(9 sqrt(m - i))        (single step)
      lambda_after >= sqrt(m) - 2(i+1)/(9 sqrt(m - i - 1))     (cumulative)
    up to eps, where m is the initial edge count.
    """
    eps = get_epsilon(eps)
    m = trace.initial_m
    for step in trace.steps:
        i = step.index
        e_i = m - i
        per_step = step.lambda_before - 2.0 / (9.0 * math.sqrt(e_i))
        if step.lambda_after < per_step - eps:
            return False
        cumulative = math.sqrt(m) - 2.0 * (i + 1) / (9.0 * math.sqrt(m - i - 1))
        if step.lambda_after < cumulative - eps:
            return False
    return True


def check_rayleigh_steps(trace: DseeTrace, eps: Optional[float] = None) -> bool:
    """Sharper per-step certificate using the recorded product:
    lambda_after >= lambda_before - 2 * product, up to eps."""
    eps = get_epsilon(eps)
    return all(
        step.lambda_after >= step.lambda_before - 2.0 * step.product - eps
        for step in trace.steps)
