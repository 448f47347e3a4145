"""Immutable simple undirected graphs over fixed-width adjacency bit rows.

Vertices are 0-based contiguous integers.  Graphs are values: every
mutating operation (edge deletion, isolated-vertex removal, ...) returns a
new Graph and leaves its input untouched, so algorithm traces can retain
every intermediate graph.

Two text formats are supported.  Edge lists: first line ``n m``, then
exactly m lines ``u v`` (0 <= u,v < n, u != v); ``#``-prefixed lines are
comments.  graph6: the compact ASCII encoding used by the common graph
generators (byte values 63+x carrying 6-bit groups, size header N(n),
upper-triangle column-major bit order); a leading ``>>graph6<<`` header is
tolerated on input and never emitted.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import _bits
from .config import VERTEX_CAP
from .errors import ConstructionError, FormatError, SizeError

GRAPH6_HEADER = b">>graph6<<"


class Graph:
    """Simple undirected graph backed by n rows of n-bit adjacency masks."""

    __slots__ = ("n", "m", "_words")

    def __init__(self, n, edges=(), cap=VERTEX_CAP):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if n > cap:
            raise SizeError(f"n={n} exceeds the vertex cap {cap}")
        words = np.zeros((n, _bits.words_needed(n)), dtype=np.uint64)
        m = 0
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise FormatError(f"loop edge {u} {v} rejected")
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"endpoint out of range in edge {u} {v} (n={n})")
            if not (words[u, v >> 6] >> np.uint64(v & 63)) & np.uint64(1):
                words[u, v >> 6] |= np.uint64(1) << np.uint64(v & 63)
                words[v, u >> 6] |= np.uint64(1) << np.uint64(u & 63)
                m += 1
        self._finish(n, m, words)

    def _finish(self, n, m, words):
        words.setflags(write=False)
        self.n = n
        self.m = m
        self._words = words

    @classmethod
    def _from_words(cls, n, m, words):
        g = cls.__new__(cls)
        g._finish(n, m, words)
        return g

    @classmethod
    def from_dense(cls, dense, cap=VERTEX_CAP):
        """Build from a 0/1 symmetric matrix with zero diagonal."""
        dense = np.asarray(dense)
        n = dense.shape[0]
        if n > cap:
            raise SizeError(f"n={n} exceeds the vertex cap {cap}")
        if n and (dense != dense.T).any():
            raise ValueError("adjacency matrix must be symmetric")
        if n and np.diagonal(dense).any():
            raise ValueError("adjacency matrix must have zero diagonal")
        words = _bits.pack_rows(dense)
        m = int(np.count_nonzero(dense)) // 2
        return cls._from_words(n, m, words)

    # -- basic queries ----------------------------------------------------

    @property
    def words(self):
        """Read-only (n, w) uint64 adjacency rows."""
        return self._words

    def has_edge(self, u, v):
        return bool((self._words[u, v >> 6] >> np.uint64(v & 63)) & np.uint64(1))

    def degree(self, u):
        return int(_bits.popcount(self._words[u]).sum())

    def degrees(self):
        """Degree of every vertex as an int64 array."""
        if self.n == 0:
            return np.zeros(0, dtype=np.int64)
        return _bits.popcount(self._words).sum(axis=1).astype(np.int64)

    def neighbors(self, u):
        row = _bits.unpack_rows(self._words[u:u + 1], self.n)[0]
        return np.nonzero(row)[0]

    def edges(self):
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        dense = _bits.unpack_rows(self._words, self.n)
        iu, iv = np.nonzero(np.triu(dense, 1))
        return list(zip(iu.tolist(), iv.tolist()))

    def dense(self, dtype=np.float64):
        """Adjacency matrix as a dense (n, n) array."""
        return _bits.unpack_rows(self._words, self.n).astype(dtype)

    # -- value-semantic edits ---------------------------------------------

    def delete_edge(self, u, v):
        """New graph with edge uv removed; error if uv is not an edge."""
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        words = self._words.copy()
        words[u, v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))
        words[v, u >> 6] &= ~(np.uint64(1) << np.uint64(u & 63))
        return Graph._from_words(self.n, self.m - 1, words)

    def add_edge(self, u, v):
        """New graph with edge uv added; error on loops or existing edges."""
        if u == v:
            raise ValueError("loop edges are not allowed")
        if self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is already an edge")
        words = self._words.copy()
        words[u, v >> 6] |= np.uint64(1) << np.uint64(v & 63)
        words[v, u >> 6] |= np.uint64(1) << np.uint64(u & 63)
        return Graph._from_words(self.n, self.m + 1, words)

    def induced_subgraph(self, vertices):
        """Induced subgraph on the given vertices, relabeled in sorted order."""
        vertices = [int(v) for v in vertices]
        keep = sorted(set(vertices))
        if keep and not (0 <= keep[0] and keep[-1] < self.n):
            raise ValueError("subset vertex out of range")
        if len(keep) != len(vertices):
            raise ValueError("subset contains duplicate vertices")
        dense = _bits.unpack_rows(self._words, self.n)
        sub = dense[np.ix_(keep, keep)]
        return Graph.from_dense(sub)

    # -- equality ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._words, other._words)

    def __hash__(self):
        return hash((self.n, self._words.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeStats:
    """Exact integer degree statistics.

    M is the sum of squared degrees; delta/Delta the min/max degree.
    """
    degrees: tuple
    M: int
    delta: int
    Delta: int


class EdgeListResult(NamedTuple):
    graph: Graph
    duplicates: int


def degree_stats(graph: Graph) -> DegreeStats:
    degs = graph.degrees()
    if graph.n == 0:
        return DegreeStats(degrees=(), M=0, delta=0, Delta=0)
    M = int((degs.astype(object) ** 2).sum())
    return DegreeStats(
        degrees=tuple(int(d) for d in degs),
        M=M,
        delta=int(degs.min()),
        Delta=int(degs.max()),
    )


def from_edge_list(text: str, cap=VERTEX_CAP) -> EdgeListResult:
    """Parse the edge-list format; duplicate edges collapse with a count."""
    lines = text.splitlines()
    header = None
    header_line = 0
    body = []
    for idx, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line
            header_line = idx
        else:
            body.append((idx, line))
    if header is None:
        raise FormatError("line 1: missing 'n m' header line")
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(f"line {header_line}: header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"line {header_line}: header must be two integers") from None
    if n < 0 or m < 0:
        raise FormatError(f"line {header_line}: n and m must be non-negative")
    if n > cap:
        raise SizeError(f"n={n} exceeds the vertex cap {cap}")
    if len(body) != m:
        raise FormatError(f"expected {m} edge lines, found {len(body)}")

    words = np.zeros((n, _bits.words_needed(n)), dtype=np.uint64)
    edge_count = 0
    duplicates = 0
    one = np.uint64(1)
    for idx, line in body:
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {idx}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {idx}: endpoints must be integers") from None
        if u == v:
            raise FormatError(f"line {idx}: loop edge {u} {v} rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {idx}: endpoint out of range (n={n})")
        if (words[u, v >> 6] >> np.uint64(v & 63)) & one:
            duplicates += 1
            continue
        words[u, v >> 6] |= one << np.uint64(v & 63)
        words[v, u >> 6] |= one << np.uint64(u & 63)
        edge_count += 1
    return EdgeListResult(Graph._from_words(n, edge_count, words), duplicates)


def to_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


# -- graph6 ---------------------------------------------------------------

def _g6_size_header(n):
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise SizeError(f"n={n} not encodable in graph6")


def to_graph6(graph: Graph) -> bytes:
    """Encode; inverse of from_graph6 with the same vertex labeling."""
    n = graph.n
    out = bytearray(_g6_size_header(n))
    nbits = n * (n - 1) // 2
    if nbits:
        dense = _bits.unpack_rows(graph.words, n)
        bits = np.concatenate([dense[:v, v] for v in range(1, n)])
        pad = (-len(bits)) % 6
        if pad:
            bits = np.concatenate([bits, np.zeros(pad, dtype=bits.dtype)])
        groups = bits.reshape(-1, 6).astype(np.int64)
        vals = groups @ np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)
        out.extend((vals + 63).astype(np.uint8).tobytes())
    return bytes(out)


def from_graph6(data, cap=VERTEX_CAP) -> Graph:
    """Decode one graph6 record (optional ``>>graph6<<`` header tolerated)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise FormatError("byte 0: empty graph6 record")
    for off, b in enumerate(data):
        if not (63 <= b <= 126):
            raise FormatError(f"byte {off}: value {b} outside graph6 range 63..126")
    if data[0] != 126:
        n = data[0] - 63
        rest = data[1:]
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise FormatError(f"byte {len(data)}: truncated size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        rest = data[4:]
    else:
        if len(data) < 8:
            raise FormatError(f"byte {len(data)}: truncated size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        rest = data[8:]
    if n > cap:
        raise SizeError(f"n={n} exceeds the vertex cap {cap}")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(rest) != expected:
        raise FormatError(
            f"byte {len(data)}: expected {expected} data bytes for n={n}, got {len(rest)}")
    words = np.zeros((n, _bits.words_needed(n)), dtype=np.uint64)
    m = 0
    if nbits:
        vals = np.frombuffer(rest, dtype=np.uint8).astype(np.int64) - 63
        bits = ((vals[:, None] >> np.array([5, 4, 3, 2, 1, 0])) & 1).ravel()[:nbits]
        us, vs = _bits.triangle_pairs(n)
        one = np.uint64(1)
        for u, v in zip(us[bits == 1].tolist(), vs[bits == 1].tolist()):
            words[u, v >> 6] |= one << np.uint64(v & 63)
            words[v, u >> 6] |= one << np.uint64(u & 63)
            m += 1
    return Graph._from_words(n, m, words)


def read_graph6_stream(text):
    """Parse one graph6 record per non-empty line; yields Graphs."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield from_graph6(line)


# -- structural predicates ------------------------------------------------

def remove_isolated(graph: Graph):
    """Drop all degree-0 vertices, relabeling to a contiguous range.

    Returns (new_graph, removed_count); the edge count is unchanged.
    """
    degs = graph.degrees()
    keep = np.nonzero(degs > 0)[0]
    removed = graph.n - len(keep)
    if removed == 0:
        return graph, 0
    return graph.induced_subgraph(keep.tolist()), removed


def is_star_with_isolated(graph: Graph) -> bool:
    """True iff the graph is K_{1,m} (m >= 1) plus possibly isolated vertices."""
    if graph.m < 1:
        return False
    degs = graph.degrees()
    non_isolated = int((degs > 0).sum())
    return non_isolated == graph.m + 1 and int(degs.max()) == graph.m


def connected_components(graph: Graph):
    """Vertex sets of the connected components, as sorted lists."""
    seen = np.zeros(graph.n, dtype=bool)
    comps = []
    for start in range(graph.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in graph.neighbors(u).tolist():
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def bipartition(graph: Graph) -> Optional[np.ndarray]:
    """2-coloring as a 0/1 array, or None if the graph is not bipartite.

    Each component's lowest-indexed vertex gets color 0.
    """
    color = np.full(graph.n, -1, dtype=np.int8)
    for start in range(graph.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in graph.neighbors(u).tolist():
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def is_bipartite(graph: Graph) -> bool:
    return bipartition(graph) is not None


def is_complete_bipartite_core(graph: Graph) -> bool:
    """True iff after isolated-vertex removal the graph is some K_{a,b}.

    K_{a,b} is connected, so a disconnected edge-bearing graph never
    qualifies.
    """
    core, _ = remove_isolated(graph)
    if core.m == 0:
        return False
    if len(connected_components(core)) != 1:
        return False
    color = bipartition(core)
    if color is None:
        return False
    a = int((color == 0).sum())
    b = core.n - a
    return core.m == a * b


# -- named constructions --------------------------------------------------

def star(m: int) -> Graph:
    """K_{1,m}: center 0 joined to m leaves."""
    if m < 1:
        raise ConstructionError("star(m) needs m >= 1")
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def complete(s: int) -> Graph:
    if s < 1:
        raise ConstructionError("complete(s) needs s >= 1")
    return Graph(s, [(u, v) for u in range(s) for v in range(u + 1, s)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError("cycle(n) needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ConstructionError("complete_bipartite(a, b) needs a, b >= 1")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def book(r: int) -> Graph:
    """K_{2,r} plus the edge inside the 2-side (spine vertices 0 and 1)."""
    if r < 1:
        raise ConstructionError("book(r) needs r >= 1")
    edges = [(0, 1)]
    for p in range(r):
        edges.append((0, 2 + p))
        edges.append((1, 2 + p))
    return Graph(r + 2, edges)


def clique_join_independent(r: int, k: int) -> Graph:
    """Join of an r-clique (vertices 0..r-1) with k independent vertices."""
    if r < 1 or k < 1:
        raise ConstructionError("clique_join_independent(r, k) needs r, k >= 1")
    edges = [(u, v) for u in range(r) for v in range(u + 1, r)]
    edges += [(u, r + j) for u in range(r) for j in range(k)]
    return Graph(r + k, edges)


def clique_plus_pendants(m: int) -> Graph:
    """Complete graph on s = sqrt(m)+1 vertices plus m - C(s,2) pendant
    edges attached to vertex 0; total edge count exactly m.

    m must be a perfect square (the construction's arithmetic is exact
    only then); non-square m is rejected rather than rounded.
    """
    if m < 1:
        raise ConstructionError("clique_plus_pendants(m) needs m >= 1")
    root = math.isqrt(m)
    if root * root != m:
        raise ConstructionError(
            f"clique_plus_pendants needs a perfect square, got m={m}")
    s = root + 1
    clique_edges = s * (s - 1) // 2
    if m < clique_edges:
        raise ConstructionError(
            f"m={m} is smaller than C({s},2)={clique_edges}")
    pendants = m - clique_edges
    edges = [(u, v) for u in range(s) for v in range(u + 1, s)]
    edges += [(0, s + p) for p in range(pendants)]
    return Graph(s + pendants, edges)


CONSTRUCTIONS = {
    "star": (star, 1),
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "book": (book, 1),
    "clique_join_independent": (clique_join_independent, 2),
    "clique_plus_pendants": (clique_plus_pendants, 1),
}


def construct(name: str, *params: int) -> Graph:
    """Dispatch to a named construction; used by the CLI."""
    if name not in CONSTRUCTIONS:
        raise ConstructionError(
            f"unknown construction {name!r}; choices: {sorted(CONSTRUCTIONS)}")
    fn, arity = CONSTRUCTIONS[name]
    if len(params) != arity:
        raise ConstructionError(f"{name} takes {arity} parameter(s)")
    return fn(*[int(p) for p in params])
