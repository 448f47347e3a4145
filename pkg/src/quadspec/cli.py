"""Command-line surface: every operation with machine-readable output.

Analysis subcommands print one JSON report envelope on stdout:
{command, input_digest, config, payload, elapsed_ms}.  The envelope is
byte-identical across runs (and across worker counts) except elapsed_ms.
`construct` emits the raw graph text and `bounds` emits CSV.

Exit codes: 0 success, 1 verification failure, 2 usage/input error,
3 numerical non-convergence.
"""

import argparse
import hashlib
import json
import sys
import time

from .config import (DEFAULT_MAX_ITER, DEFAULT_TOL, DENSE_BOUND,
                     SMALL_GRAPH_MAX_N, get_epsilon)
from .errors import (ConstructionError, ConvergenceError, FormatError,
                     OutOfHypothesisError, QuadspecError, SizeError)
from .graphs import (construct, from_edge_list, from_graph6,
                     read_graph6_stream, to_edge_list, to_graph6)
from .spectral import full_spectrum, perron
from .quadcount import count_report
from .dsee import check_lambda_decay, check_rayleigh_steps, dsee_run
from .verify import CLAIM_IDS, claim_reports, sweep_small_graphs
from .search import (bound_table, exhaustive_fmin, local_search_fmin,
                     render_bound_table_csv)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3


def _read_input(args):
    if args.infile and args.infile != "-":
        with open(args.infile, "rb") as fh:
            data = fh.read()
    else:
        data = sys.stdin.buffer.read()
    return data


def _detect_format(data: bytes) -> str:
    for line in data.decode("utf-8", errors="replace").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
            return "edgelist"
        return "graph6"
    raise FormatError("empty input")


def _parse_graph(data: bytes, fmt: str):
    if fmt == "auto":
        fmt = _detect_format(data)
    if fmt == "edgelist":
        return from_edge_list(data.decode("utf-8")).graph
    return from_graph6(data.strip().splitlines()[0])


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _config_dict(args):
    return {
        "epsilon": get_epsilon(args.epsilon),
        "tol": args.tol,
        "max_iter": args.max_iter,
        "mode": args.mode,
        "seed": args.seed,
    }


def _emit(command, digest, args, payload, t0):
    envelope = {
        "command": command,
        "input_digest": digest,
        "config": _config_dict(args),
        "payload": payload,
        "elapsed_ms": int(round((time.monotonic() - t0) * 1000)),
    }
    print(json.dumps(envelope, sort_keys=True, indent=2, allow_nan=False))


# -- subcommand handlers ------------------------------------------------------


def _cmd_spectrum(args, t0):
    data = _read_input(args)
    graph = _parse_graph(data, args.format)
    pr = perron(graph, tol=args.tol, max_iter=args.max_iter)
    payload = {
        "n": graph.n,
        "m": graph.m,
        "lambda": pr.lam,
        "iterations": pr.iterations,
        "residual": pr.residual,
        "eigenvalues": None,
    }
    if graph.n <= DENSE_BOUND:
        payload["eigenvalues"] = [float(v) for v in
                                  full_spectrum(graph).eigenvalues]
    if args.vector:
        payload["vector"] = [float(v) for v in pr.vector]
    _emit("spectrum", _digest(data), args, payload, t0)
    return EXIT_OK


def _cmd_count(args, t0):
    data = _read_input(args)
    graph = _parse_graph(data, args.format)
    report = count_report(graph)
    payload = {
        "n": graph.n,
        "m": graph.m,
        "count_codegree": report.count_codegree,
        "count_walks": report.count_walks,
        "count_enumeration": report.count_enumeration,
        "count_spectral": report.count_spectral,
        "closed_walks_4": report.closed_walks_4,
        "agreement": report.agreement,
    }
    _emit("count", _digest(data), args, payload, t0)
    return EXIT_OK if report.agreement else EXIT_VERIFY_FAIL


def _cmd_dsee(args, t0):
    data = _read_input(args)
    graph = _parse_graph(data, args.format)
    trace = dsee_run(graph, tol=args.tol, max_iter=args.max_iter,
                     eps=args.epsilon, warm_start=args.warm_start)
    decay_ok = check_lambda_decay(trace, eps=args.epsilon)
    rayleigh_ok = check_rayleigh_steps(trace, eps=args.epsilon)
    steps = [{
        "index": s.index, "u": s.u, "v": s.v,
        "product": s.product, "threshold": s.threshold,
        "lambda_before": s.lambda_before, "lambda_after": s.lambda_after,
        "claim8_bound": s.claim8_bound, "claim8_ok": s.claim8_ok,
    } for s in trace.steps]
    payload = {
        "initial_m": trace.initial_m,
        "k": trace.k,
        "stop_reason": trace.stop_reason,
        "terminal_graph": to_graph6(trace.terminal_graph).decode("ascii"),
        "terminal_is_star": trace.terminal_is_star,
        "steps": steps,
        "lambda_decay_ok": decay_ok,
        "rayleigh_ok": rayleigh_ok,
    }
    if args.trace_csv:
        _write_trace_csv(args.trace_csv, trace)
    _emit("dsee", _digest(data), args, payload, t0)
    certified = decay_ok and rayleigh_ok and all(s.claim8_ok for s in trace.steps)
    return EXIT_OK if certified else EXIT_VERIFY_FAIL


def _write_trace_csv(path, trace):
    lines = ["i,u,v,product,threshold,lambda_before,lambda_after,claim8_bound"]
    for s in trace.steps:
        lines.append(f"{s.index},{s.u},{s.v},{s.product!r},{s.threshold!r},"
                     f"{s.lambda_before!r},{s.lambda_after!r},{s.claim8_bound!r}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _cmd_verify(args, t0):
    data = _read_input(args)
    graph = _parse_graph(data, args.format)
    if args.claim == "interlacing" and args.subset:
        from .verify import verify_interlacing
        subset = [int(tok) for tok in args.subset.split(",")]
        report = verify_interlacing(graph, subset)
    else:
        reports = claim_reports(graph, args.claim, args.epsilon,
                                 mode=args.mode)
        report = reports[0]
    payload = report.to_dict()
    _emit("verify", _digest(data), args, payload, t0)
    if report.passed or report.details.get("out_of_hypothesis"):
        return EXIT_OK
    return EXIT_VERIFY_FAIL


def _cmd_sweep(args, t0):
    claims = tuple(args.claims.split(",")) if args.claims else None
    if args.stdin_stream:
        data = sys.stdin.buffer.read()
        graphs = list(read_graph6_stream(data))
        digest = _digest(data)
        summary = sweep_small_graphs(claims=claims, graphs=graphs,
                                     workers=args.workers, eps=args.epsilon)
    else:
        if args.n_max is None:
            raise FormatError("sweep needs --n-max or --stdin")
        if args.n_max > SMALL_GRAPH_MAX_N:
            raise SizeError(
                f"built-in enumerator handles n <= {SMALL_GRAPH_MAX_N}; "
                "pipe a graph6 stream with --stdin for larger universes")
        digest = _digest(f"builtin:n_max={args.n_max}".encode())
        summary = sweep_small_graphs(n_max=args.n_max, claims=claims,
                                     workers=args.workers, eps=args.epsilon)
    _emit("sweep", digest, args, summary.to_dict(), t0)
    return EXIT_OK if not summary.failures else EXIT_VERIFY_FAIL


def _cmd_fmin(args, t0):
    if args.method == "exhaustive":
        record = exhaustive_fmin(args.m, n_max=args.n_max, mode=args.mode,
                                 workers=args.workers, eps=args.epsilon)
    else:
        record = local_search_fmin(
            args.m, seed=args.seed, iterations=args.iterations,
            restarts=args.restarts, n_pool=args.n_pool, mode=args.mode,
            workers=args.workers, log_moves=args.log_moves, eps=args.epsilon)
    params = (f"fmin:m={args.m}:method={args.method}:mode={args.mode}:"
              f"seed={args.seed}:iterations={args.iterations}:"
              f"restarts={args.restarts}:n_pool={args.n_pool}:n_max={args.n_max}")
    _emit("fmin", _digest(params.encode()), args, record.to_dict(), t0)
    return EXIT_OK


def _cmd_bounds(args, t0):
    m_values = [int(tok) for tok in args.m_values.split(",")]
    rows = bound_table(m_values, mode=args.mode, seed=args.seed,
                       iterations=args.iterations, restarts=args.restarts,
                       workers=args.workers, eps=args.epsilon)
    sys.stdout.write(render_bound_table_csv(rows))
    return EXIT_OK


def _cmd_construct(args, t0):
    graph = construct(args.name, *args.params)
    if args.emit == "edgelist":
        sys.stdout.write(to_edge_list(graph))
    else:
        sys.stdout.write(to_graph6(graph).decode("ascii") + "\n")
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------


def _add_common(parser, graph_input=True):
    parser.add_argument("--epsilon", type=float, default=None,
                        help="spectral comparison tolerance "
                             "(default: QS_EPSILON or 1e-9)")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="power iteration residual tolerance")
    parser.add_argument("--max-iter", dest="max_iter", type=int,
                        default=DEFAULT_MAX_ITER)
    parser.add_argument("--mode", choices=("strict", "nonstrict"),
                        default="nonstrict",
                        help="spectral condition: lambda > sqrt(m) (strict) "
                             "or lambda >= sqrt(m)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1,
                        help="parallel workers; never changes results")
    if graph_input:
        parser.add_argument("--in", dest="infile", default=None,
                            help="input graph file (default: stdin)")
        parser.add_argument("--format", choices=("auto", "edgelist", "graph6"),
                            default="auto")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quadspec",
        description="Spectral supersaturation of quadrilaterals: counting, "
                    "edge-deletion certification, verification, search.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="dominant eigenpair and full spectrum")
    _add_common(p)
    p.add_argument("--vector", action="store_true",
                   help="include the unit eigenvector in the payload")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("count", help="4-cycle count by all applicable methods")
    _add_common(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("dsee", help="run the small-product edge deletion loop")
    _add_common(p)
    p.add_argument("--warm-start", action="store_true",
                   help="warm-start each eigenpair from the previous one")
    p.add_argument("--trace-csv", default=None,
                   help="also write one CSV row per deletion step")
    p.set_defaults(handler=_cmd_dsee)

    p = sub.add_parser("verify", help="check one claim against one graph")
    p.add_argument("claim", choices=CLAIM_IDS)
    _add_common(p)
    p.add_argument("--subset", default=None,
                   help="comma-separated vertex subset (interlacing only)")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("sweep", help="verify claims over a graph universe")
    _add_common(p, graph_input=False)
    p.add_argument("--n-max", dest="n_max", type=int, default=None,
                   help="built-in universe: all classes on n_max <= 7 vertices")
    p.add_argument("--claims", default=None,
                   help="comma-separated claim ids (default: all)")
    p.add_argument("--stdin", dest="stdin_stream", action="store_true",
                   help="read a graph6 stream from stdin instead")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("fmin", help="minimum 4-cycle count under the "
                                    "spectral condition")
    _add_common(p, graph_input=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=("exhaustive", "local"),
                   default="exhaustive")
    p.add_argument("--n-max", dest="n_max", type=int, default=7)
    p.add_argument("--iterations", type=int, default=1000)
    p.add_argument("--restarts", type=int, default=4)
    p.add_argument("--n-pool", dest="n_pool", type=int, default=None)
    p.add_argument("--log-moves", dest="log_moves", action="store_true")
    p.set_defaults(handler=_cmd_fmin)

    p = sub.add_parser("bounds", help="CSV bound table for a list of m values")
    _add_common(p, graph_input=False)
    p.add_argument("--m-values", dest="m_values", required=True,
                   help="comma-separated m values")
    p.add_argument("--iterations", type=int, default=1000)
    p.add_argument("--restarts", type=int, default=4)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("construct", help="emit a named construction")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--emit", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(handler=_cmd_construct)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.monotonic()
    try:
        return args.handler(args, t0)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (FormatError, SizeError, ConstructionError, OutOfHypothesisError,
            QuadspecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
