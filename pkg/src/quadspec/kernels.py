"""Kernel lane selection: compiled extension when available, numpy fallback
otherwise.

Set QS_KERNELS=pure to force the fallback even when the extension built;
QS_KERNELS=compiled raises if the extension is missing.  The active lane
is fixed at import time and reported by active_lane().
"""

import os

import numpy as np

from . import _corepy
from .errors import ConvergenceError

try:
    from . import _core
except ImportError:
    _core = None

_forced = os.environ.get("QS_KERNELS", "").strip().lower()
if _forced == "pure":
    _impl = _corepy
elif _forced == "compiled":
    if _core is None:
        raise ImportError("QS_KERNELS=compiled but quadspec._core is not built")
    _impl = _core
else:
    _impl = _core if _core is not None else _corepy


def active_lane():
    """'compiled' or 'pure'."""
    return _impl.LANE


def implementations():
    """Available kernel modules keyed by lane name (for tests/benchmarks)."""
    impls = {"pure": _corepy}
    if _core is not None:
        impls["compiled"] = _core
    return impls


def c4_codegree_count(graph):
    return int(_impl.c4_codegree_count(graph.words, graph.n))


def closed_walk4_total(graph, degrees=None):
    if degrees is None:
        degrees = graph.degrees()
    degrees = np.ascontiguousarray(degrees, dtype=np.int64)
    return int(_impl.closed_walk4_total(graph.words, degrees, graph.n))


def c4_enum_count(graph):
    return int(_impl.c4_enum_count(graph.words, graph.n))


def dense_eigvals(matrix):
    """Eigenvalues of a symmetric matrix, sorted descending."""
    try:
        return _impl.dense_eigvals(matrix)
    except RuntimeError as exc:
        raise ConvergenceError(str(exc)) from exc
