"""Adjacency-array graphs with cross links, file I/O and degree-profile
space metrics.

Vertices are 1..n.  Each vertex owns an indexed sequence of incident-edge
slots; slot order follows input edge order, which fixes the lexicographic
DFS forest.  In directed mode a vertex's out-slots come first, then its
in-slots, all in one incidence array, so the directed search is a filter
on the undirected code path.  mate(u, i) is the slot index at the other
endpoint referring back to u (the cross link).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = "line %d: %s" % (line_no, message)
        super().__init__(message)
        self.line_no = line_no


class ModeError(GraphError):
    """Operation applied to a graph of the wrong mode."""


class AdjGraph:
    """Immutable adjacency-array graph.  Built via build_graph()."""

    __slots__ = ("n", "m", "directed", "off", "heads", "mates", "outdegs", "edges")

    def __init__(self, n, m, directed, off, heads, mates, outdegs, edges):
        self.n = n
        self.m = m
        self.directed = directed
        self.off = off          # off[u] .. off[u+1] flat slot range of vertex u
        self.heads = heads      # flat: neighbour per slot
        self.mates = mates      # flat: local slot index at the other endpoint
        self.outdegs = outdegs  # per vertex; == deg for undirected
        self.edges = edges      # input edge tuples, in input order

    def deg(self, u):
        return self.off[u + 1] - self.off[u]

    def outdeg(self, u):
        return self.outdegs[u]

    def indeg(self, u):
        return self.deg(u) - self.outdegs[u] if self.directed else self.deg(u)

    def head(self, u, i):
        return self.heads[self.off[u] + i]

    def mate(self, u, i):
        return self.mates[self.off[u] + i]

    def is_out(self, u, i):
        """True if slot i of u is an outgoing slot (always, if undirected)."""
        return (not self.directed) or i < self.outdegs[u]

    def slots(self, u):
        return range(self.deg(u))


def build_graph(n, edges, directed=False):
    if n < 1:
        raise GraphError("vertex count must be >= 1, got %d" % n)
    edges = [tuple(e) for e in edges]
    for u, v in edges:
        if u == v:
            raise GraphError("self-loop (%d,%d) not allowed" % (u, v))
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError("edge (%d,%d) has endpoint outside 1..%d" % (u, v, n))
    m = len(edges)
    degs = [0] * (n + 2)
    outdegs = [0] * (n + 1)
    for u, v in edges:
        degs[u] += 1
        degs[v] += 1
        outdegs[u] += 1
    off = [0] * (n + 2)
    for u in range(1, n + 1):
        off[u + 1] = off[u] + degs[u]
    total = off[n + 1]
    heads = [0] * total
    mates = [0] * total
    if directed:
        # out-slots first (in edge order), then in-slots (in edge order)
        nout = [0] * (n + 1)
        nin = [0] * (n + 1)
        for u, v in edges:
            su = nout[u]
            sv = outdegs[v] + nin[v]
            nout[u] += 1
            nin[v] += 1
            heads[off[u] + su] = v
            heads[off[v] + sv] = u
            mates[off[u] + su] = sv
            mates[off[v] + sv] = su
    else:
        fill = [0] * (n + 1)
        for u, v in edges:
            su = fill[u]
            fill[u] += 1
            sv = fill[v]
            fill[v] += 1
            heads[off[u] + su] = v
            heads[off[v] + sv] = u
            mates[off[u] + su] = sv
            mates[off[v] + sv] = su
        outdegs = [off[u + 1] - off[u] if u else 0 for u in range(n + 1)]
    return AdjGraph(n, m, directed, off, heads, mates, outdegs, tuple(edges))


@dataclass(frozen=True)
class SpaceMetric:
    k: int
    mode: str  # "total" | "in" | "out"
    value: int


def _degree(g, v, mode):
    if mode == "total":
        return g.deg(v)
    if mode == "in":
        return g.indeg(v)
    if mode == "out":
        return g.outdeg(v)
    raise ValueError("unknown mode %r" % mode)


def l_metric(g, k, mode="total"):
    """Sum over vertices with d_v + k >= 2 of ceil(log2(d_v + k)), where
    d_v is the total/in/out degree per mode."""
    if mode in ("in", "out") and not g.directed:
        raise ModeError("in/out metrics require a directed graph")
    total = 0
    for v in range(1, g.n + 1):
        d = _degree(g, v, mode) + k
        if d >= 2:
            total += (d - 1).bit_length()
    return SpaceMetric(k, mode, total)


def jensen_bound(g, mode="total"):
    """The convexity bound on the k=1 metric: n*log2(1 + 4m/n) for total
    degrees, n*log2(1 + 2m/n) for in/out degrees."""
    if mode in ("in", "out") and not g.directed:
        raise ModeError("in/out metrics require a directed graph")
    c = 4 if mode == "total" else 2
    return g.n * math.log2(1 + c * g.m / g.n)


def parse_graph(text):
    """Parse the graph file format: header "p <n> <m> <u|d>" then m lines
    "e <u> <v>".  Lines beginning with "c" are comments."""
    n = m = None
    directed = False
    edges = []
    seen_header = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if seen_header:
                raise GraphParseError("duplicate header", line_no)
            if len(tok) != 4 or tok[3] not in ("u", "d"):
                raise GraphParseError("malformed header %r" % line, line_no)
            try:
                n, m = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphParseError("malformed header %r" % line, line_no)
            directed = tok[3] == "d"
            seen_header = True
        elif tok[0] == "e":
            if not seen_header:
                raise GraphParseError("edge before header", line_no)
            if len(tok) != 3:
                raise GraphParseError("malformed edge line %r" % line, line_no)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphParseError("malformed edge line %r" % line, line_no)
            edges.append((u, v))
        else:
            raise GraphParseError("unrecognized line %r" % line, line_no)
    if not seen_header:
        raise GraphParseError("missing header")
    if len(edges) != m:
        raise GraphParseError(
            "edge count mismatch: header says %d, found %d" % (m, len(edges))
        )
    try:
        return build_graph(n, edges, directed=directed)
    except GraphError as exc:
        raise GraphParseError(str(exc))


def serialize_graph(g):
    lines = ["p %d %d %s" % (g.n, g.m, "d" if g.directed else "u")]
    lines.extend("e %d %d" % (u, v) for u, v in g.edges)
    return "\n".join(lines) + "\n"
