"""Structured pass/fail verifiers, one per spectral inequality, plus
exhaustive sweeps over all small-graph isomorphism classes.

Every verifier returns a VerifyReport whose signed slack is positive when
the inequality is satisfied; pass is equivalent to slack >= -eps by
construction.  Inputs that violate a claim's hypothesis raise
OutOfHypothesisError, which sweeps tally separately: a desk-scale probe of
an asymptotic bound must never masquerade as a refutation.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .config import get_epsilon
from .enumeration import enumerate_graphs
from .errors import OutOfHypothesisError, SizeError
from .graphs import (Graph, bipartition, connected_components, degree_stats,
                     is_complete_bipartite_core, is_star_with_isolated,
                     remove_isolated, to_graph6)
from .quadcount import count_c4_codegree
from .spectral import check_interlacing, spectral_radius

CLAIM_IDS = (
    "hofmeister",
    "degree_square_bound",
    "bipartite_bound",
    "interlacing",
    "thm11_c4_existence",
    "fm_lower_m32",
    "fm_lower_m2_2000",
    "fm_upper_prop14",
    "thm42_n4",
)

SIZE_FLOOR = 3.6e9

# the m/32 bound rests on finding K_{2,r+1} with r = sqrt(m)/4 >= 1
M32_FLOOR = 16


@dataclass(frozen=True)
class VerifyReport:
    claim_id: str
    passed: bool
    slack: float
    equality_case: Optional[bool] = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        eps = self.details["epsilon"]
        assert self.passed == (self.slack >= -eps), \
            f"{self.claim_id}: pass/slack inconsistency"
        return {
            "claim_id": self.claim_id,
            "pass": self.passed,
            "slack": self.slack,
            "equality_case": self.equality_case,
            "details": self.details,
        }


# -- structural equality classes -------------------------------------------


def _component_profile(comp: Graph):
    """(lambda^2 as exact int, kind) when the component is regular or
    bipartite semi-regular; None otherwise."""
    degs = comp.degrees()
    if len(set(degs.tolist())) == 1:
        d = int(degs[0])
        return d * d, "regular"
    color = bipartition(comp)
    if color is None:
        return None
    side0 = set(degs[color == 0].tolist())
    side1 = set(degs[color == 1].tolist())
    if len(side0) == 1 and len(side1) == 1:
        return side0.pop() * side1.pop(), "semiregular"
    return None


def equality_class_structure(graph: Graph) -> dict:
    """Structural test for equality in the degree-power bound.

    A graph (isolated vertices removed) achieves equality iff every
    component is regular or bipartite semi-regular and all components
    share the same spectral radius; for connected graphs this is exactly
    the regular / bipartite semi-regular dichotomy.
    """
    core, _ = remove_isolated(graph)
    degs = core.degrees()
    regular = core.n > 0 and len(set(degs.tolist())) == 1
    profiles = []
    for comp_vertices in connected_components(core):
        prof = _component_profile(core.induced_subgraph(comp_vertices))
        if prof is None:
            return {"regular": regular, "semiregular_bipartite": False,
                    "equality_class": False}
        profiles.append(prof)
    equality = len({p[0] for p in profiles}) == 1
    return {
        "regular": regular,
        "semiregular_bipartite": bool(
            equality and not regular and bipartition(core) is not None),
        "equality_class": bool(equality),
    }


# -- single-claim verifiers -------------------------------------------------


def verify_hofmeister(graph: Graph, eps: Optional[float] = None) -> VerifyReport:
    """lambda >= sqrt(M/n); isolated vertices removed first."""
    eps = get_epsilon(eps)
    core, removed = remove_isolated(graph)
    if core.m < 1:
        raise OutOfHypothesisError("hofmeister", "graph has no edges")
    stats = degree_stats(core)
    lam = spectral_radius(core)
    bound = math.sqrt(stats.M / core.n)
    slack = lam - bound
    numeric = abs(slack) <= eps
    structure = equality_class_structure(core)
    return VerifyReport(
        claim_id="hofmeister",
        passed=bool(slack >= -eps),
        slack=float(slack),
        equality_case=bool(numeric),
        details={
            "epsilon": eps,
            "lambda": lam, "bound": bound, "M": stats.M, "n": core.n,
            "isolated_removed": removed,
            "structural_equality": structure["equality_class"],
            "regular": structure["regular"],
            "semiregular_bipartite": structure["semiregular_bipartite"],
            "equality_agreement": bool(numeric == structure["equality_class"]),
        })


def verify_degree_square_bound(graph: Graph,
                               eps: Optional[float] = None) -> VerifyReport:
    """M <= m^2 + m in exact integers; equality exactly on stars."""
    stats = degree_stats(graph)
    m = graph.m
    slack = m * m + m - stats.M
    star = is_star_with_isolated(graph)
    # the bound is trivially tight at m = 0; the star classification only
    # speaks for m >= 1
    equality = (slack == 0) if m >= 1 else None
    agreement = (equality == star) if m >= 1 else True
    return VerifyReport(
        claim_id="degree_square_bound",
        passed=bool(slack >= 0),
        slack=float(slack),
        equality_case=equality,
        details={"epsilon": 0.0, "M": stats.M, "m": m, "is_star": star,
                 "equality_agreement": bool(agreement)})


def verify_bipartite_bound(graph: Graph,
                           eps: Optional[float] = None) -> VerifyReport:
    """For bipartite graphs with an edge: lambda <= sqrt(m)."""
    eps = get_epsilon(eps)
    if bipartition(graph) is None:
        raise OutOfHypothesisError("bipartite_bound", "graph is not bipartite")
    if graph.m < 1:
        raise OutOfHypothesisError("bipartite_bound", "graph has no edges")
    lam = spectral_radius(graph)
    slack = math.sqrt(graph.m) - lam
    numeric = abs(slack) <= eps
    structural = is_complete_bipartite_core(graph)
    return VerifyReport(
        claim_id="bipartite_bound",
        passed=bool(slack >= -eps),
        slack=float(slack),
        equality_case=bool(numeric),
        details={"epsilon": eps,
                 "lambda": lam, "sqrt_m": math.sqrt(graph.m),
                 "complete_bipartite": structural,
                 "equality_agreement": bool(numeric == structural)})


def verify_thm11(graph: Graph, eps: Optional[float] = None) -> VerifyReport:
    """m >= 10 and lambda >= sqrt(m) force a 4-cycle unless the graph is a
    star; the verifier reports which disjunct discharged the claim."""
    eps = get_epsilon(eps)
    m = graph.m
    if m < 10:
        raise OutOfHypothesisError("thm11_c4_existence", f"needs m >= 10, got {m}")
    lam = spectral_radius(graph)
    sqrt_m = math.sqrt(m)
    star = is_star_with_isolated(graph)
    count = count_c4_codegree(graph)
    if star:
        disjunct, slack = "star_exemption", 0.0
    elif count >= 1:
        disjunct, slack = "c4_present", float(count)
    elif lam < sqrt_m - eps:
        disjunct, slack = "hypothesis_not_met", float(sqrt_m - lam)
    else:
        disjunct, slack = "violated", -1.0
    return VerifyReport(
        claim_id="thm11_c4_existence",
        passed=disjunct != "violated",
        slack=slack,
        equality_case=None,
        details={"epsilon": eps,
                 "lambda": lam, "sqrt_m": sqrt_m, "c4_count": count,
                 "is_star": star, "disjunct": disjunct,
                 # the condition has strict and non-strict readings; this
                 # check uses the non-strict one
                 "spectral_condition": "nonstrict"})


def spectral_condition_met(lam, m, mode, eps):
    sqrt_m = math.sqrt(m)
    if mode == "strict":
        return lam > sqrt_m + eps
    if mode == "nonstrict":
        return lam >= sqrt_m - eps
    raise ValueError(f"mode must be 'strict' or 'nonstrict', got {mode!r}")


def detect_clique_plus_pendants(graph: Graph) -> Optional[int]:
    """Return s if (after isolated removal) the graph is a complete graph
    K_s with m - C(s,2) pendant edges at one clique vertex, for square m
    with s = sqrt(m) + 1; else None."""
    core, _ = remove_isolated(graph)
    m = core.m
    if m < 1:
        return None
    root = math.isqrt(m)
    if root * root != m:
        return None
    s = root + 1
    p = m - s * (s - 1) // 2
    if p < 0 or core.n != s + p:
        return None
    degs = core.degrees()
    pendants = np.nonzero(degs == 1)[0]
    if s == 2 and p == 0:
        return s if core.m == 1 else None
    if len(pendants) != p:
        return None
    rest = sorted(set(range(core.n)) - set(pendants.tolist()))
    if len(rest) != s:
        return None
    clique = core.induced_subgraph(rest)
    if clique.m != s * (s - 1) // 2:
        return None
    if p:
        centers = {int(core.neighbors(int(v))[0]) for v in pendants}
        if len(centers) != 1:
            return None
        center = centers.pop()
        if int(degs[center]) != s - 1 + p:
            return None
    return s


def verify_fm_bounds(graph: Graph, mode: str = "nonstrict",
                     eps: Optional[float] = None) -> list:
    """Probe the count lower bounds m/32 and m^2/2000 (and, on a
    clique-plus-pendants witness, the exact upper-bound value)."""
    eps = get_epsilon(eps)
    m = graph.m
    if m < 1:
        raise OutOfHypothesisError("fm_bounds", "graph has no edges")
    lam = spectral_radius(graph)
    sqrt_m = math.sqrt(m)
    if is_star_with_isolated(graph):
        raise OutOfHypothesisError("fm_bounds", "stars are exempt")
    if not spectral_condition_met(lam, m, mode, eps):
        raise OutOfHypothesisError(
            "fm_bounds",
            f"lambda={lam:.12g} fails the {mode} condition against sqrt(m)={sqrt_m:.12g}")
    f = count_c4_codegree(graph)
    reports = [
        VerifyReport(
            claim_id="fm_lower_m32",
            passed=bool(32 * f >= m),
            slack=float(f - m / 32.0),
            details={"epsilon": eps,
                     "f": f, "bound": m / 32.0, "lambda": lam, "mode": mode,
                     "out_of_hypothesis": bool(m < M32_FLOOR),
                     "size_floor": M32_FLOOR}),
        VerifyReport(
            claim_id="fm_lower_m2_2000",
            passed=bool(2000 * f >= m * m),
            slack=float(f - m * m / 2000.0),
            details={"epsilon": eps,
                     "f": f, "bound": m * m / 2000.0, "lambda": lam,
                     "mode": mode, "out_of_hypothesis": bool(m < SIZE_FLOOR),
                     "size_floor": SIZE_FLOOR}),
    ]
    s = detect_clique_plus_pendants(graph)
    if s is not None:
        expected = 3 * math.comb(s, 4)
        closed_form = Fraction((m - 1) * (m - 2 * math.isqrt(m)), 8)
        slack = -abs(f - expected)
        reports.append(VerifyReport(
            claim_id="fm_upper_prop14",
            passed=bool(f == expected),
            slack=float(slack),
            equality_case=bool(f == expected),
            details={"epsilon": eps,
                     "f": f, "s": s, "expected": expected,
                     "closed_form": f"{closed_form.numerator}/{closed_form.denominator}",
                     "closed_form_matches": closed_form == expected}))
    return reports


def verify_thm42(graph: Graph, eps: Optional[float] = None) -> VerifyReport:
    """Count at least n^4/32000 when m > n^2/4 (size clause unreachable at
    desk scale; the report carries the average-degree premise as well)."""
    eps = get_epsilon(eps)
    n, m = graph.n, graph.m
    if 4 * m <= n * n:
        raise OutOfHypothesisError("thm42_n4", f"needs m > n^2/4, got m={m}, n={n}")
    f = count_c4_codegree(graph)
    bound = n ** 4 / 32000.0
    lam = spectral_radius(graph)
    cs_bound = 2.0 * m / n
    return VerifyReport(
        claim_id="thm42_n4",
        passed=bool(f - bound >= -eps),
        slack=float(f - bound),
        details={"epsilon": eps,
                 "f": f, "bound": bound,
                 "out_of_hypothesis": bool(m < SIZE_FLOOR),
                 "size_floor": SIZE_FLOOR,
                 "collatz_sinogowitz_lambda": lam,
                 "collatz_sinogowitz_bound": cs_bound,
                 "collatz_sinogowitz_slack": float(lam - cs_bound)})


def verify_interlacing(graph: Graph, subset=None,
                       tol: float = 1e-8) -> VerifyReport:
    """Interlacing of the induced-subgraph spectrum; default subset drops
    the last vertex."""
    if graph.n < 2:
        raise OutOfHypothesisError("interlacing", "needs at least two vertices")
    if subset is None:
        subset = list(range(graph.n - 1))
    report = check_interlacing(graph, subset, tol=tol)
    return VerifyReport(
        claim_id="interlacing",
        passed=report.passes,
        slack=float(report.min_slack),
        details={"r": len(report.sub_spectrum), "n": graph.n,
                 "epsilon": tol})


# -- sweeps -----------------------------------------------------------------


@dataclass(frozen=True)
class SweepSummary:
    source: str
    n_max: Optional[int]
    universe_size: int
    claims: tuple
    counts: dict            # claim -> {"pass": int, "fail": int, "out_of_hypothesis": int}
    failures: tuple         # (claim, graph6, slack) sorted
    equality_mismatches: tuple  # (claim, graph6) sorted
    informational_violations: tuple  # (claim, graph6, slack) for desk-unreachable claims

    def to_dict(self):
        return {
            "source": self.source,
            "n_max": self.n_max,
            "universe_size": self.universe_size,
            "claims": list(self.claims),
            "counts": self.counts,
            "failures": [list(f) for f in self.failures],
            "equality_mismatches": [list(f) for f in self.equality_mismatches],
            "informational_violations": [list(f) for f in self.informational_violations],
        }


def claim_reports(graph: Graph, claim: str, eps=None, mode: str = "nonstrict"):
    if claim == "hofmeister":
        return [verify_hofmeister(graph, eps)]
    if claim == "degree_square_bound":
        return [verify_degree_square_bound(graph, eps)]
    if claim == "bipartite_bound":
        return [verify_bipartite_bound(graph, eps)]
    if claim == "interlacing":
        return [verify_interlacing(graph)]
    if claim == "thm11_c4_existence":
        return [verify_thm11(graph, eps)]
    if claim in ("fm_lower_m32", "fm_lower_m2_2000", "fm_upper_prop14"):
        reports = verify_fm_bounds(graph, mode=mode, eps=eps)
        matching = [r for r in reports if r.claim_id == claim]
        if not matching:
            raise OutOfHypothesisError(claim, "no clique-plus-pendants shape")
        return matching
    if claim == "thm42_n4":
        return [verify_thm42(graph, eps)]
    raise ValueError(f"unknown claim {claim!r}; choices: {CLAIM_IDS}")


def run_claim(graph: Graph, claim: str, eps=None):
    """(bucket, report) where bucket is 'pass', 'fail', or 'out_of_hypothesis'.

    A negative slack on a report whose hypothesis is not met (the
    out_of_hypothesis detail) is a data point, not a failure.
    """
    try:
        report = claim_reports(graph, claim, eps)[0]
    except OutOfHypothesisError:
        return "out_of_hypothesis", None
    if report.passed:
        return "pass", report
    if report.details.get("out_of_hypothesis"):
        return "out_of_hypothesis", report
    return "fail", report


def _sweep_chunk(args):
    g6_list, claims, eps = args
    from .graphs import from_graph6
    counts = {c: {"pass": 0, "fail": 0, "out_of_hypothesis": 0} for c in claims}
    failures, mismatches, informational = [], [], []
    for g6 in g6_list:
        graph = from_graph6(g6)
        for claim in claims:
            bucket, report = run_claim(graph, claim, eps)
            counts[claim][bucket] += 1
            if bucket == "fail":
                failures.append((claim, g6, report.slack))
            if report is not None and not report.passed and bucket == "out_of_hypothesis":
                informational.append((claim, g6, report.slack))
            if report is not None and not report.details.get("equality_agreement", True):
                mismatches.append((claim, g6))
    return counts, failures, mismatches, informational


def sweep_small_graphs(n_max: Optional[int] = None, claims=None, graphs=None,
                       workers: int = 1, eps: Optional[float] = None) -> SweepSummary:
    """Run the selected verifiers over a graph universe.

    Either enumerate all isomorphism classes on n_max <= 7 vertices with
    the built-in enumerator, or verify an explicit iterable of graphs
    (e.g. decoded from a graph6 stream).  Results are independent of the
    worker count: counters are commutative and lists are sorted.
    """
    claims = tuple(claims) if claims else CLAIM_IDS
    for claim in claims:
        if claim not in CLAIM_IDS:
            raise ValueError(f"unknown claim {claim!r}")
    if graphs is None:
        if n_max is None:
            raise ValueError("either n_max or graphs must be given")
        if n_max > 7:
            raise SizeError(
                "built-in enumerator handles n_max <= 7; "
                "supply a graph6 stream for larger universes")
        universe = [to_graph6(g).decode("ascii") for g in enumerate_graphs(n_max)]
        source = "builtin"
    else:
        universe = [to_graph6(g).decode("ascii") for g in graphs]
        source = "stream"

    chunks = _split(universe, workers)
    args = [(chunk, claims, eps) for chunk in chunks if chunk]
    if workers > 1 and len(args) > 1:
        import multiprocessing
        with multiprocessing.Pool(min(workers, len(args))) as pool:
            results = pool.map(_sweep_chunk, args)
    else:
        results = [_sweep_chunk(a) for a in args]

    counts = {c: {"pass": 0, "fail": 0, "out_of_hypothesis": 0} for c in claims}
    failures, mismatches, informational = [], [], []
    for chunk_counts, chunk_failures, chunk_mismatch, chunk_info in results:
        for c in claims:
            for bucket in counts[c]:
                counts[c][bucket] += chunk_counts[c][bucket]
        failures.extend(chunk_failures)
        mismatches.extend(chunk_mismatch)
        informational.extend(chunk_info)
    return SweepSummary(
        source=source, n_max=n_max, universe_size=len(universe),
        claims=claims, counts=counts,
        failures=tuple(sorted(failures)),
        equality_mismatches=tuple(sorted(mismatches)),
        informational_violations=tuple(sorted(informational)))


def _split(items, parts):
    parts = max(1, parts)
    k, r = divmod(len(items), parts)
    chunks, start = [], 0
    for i in range(parts):
        size = k + (1 if i < r else 0)
        chunks.append(items[start:start + size])
        start += size
    return chunks
