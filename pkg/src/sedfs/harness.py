"""Oracles, graph generators and instrumentation for the test suites.

The oracles here deliberately share no machinery with the bit-level
structures: the reference DFS uses an explicit list-of-(vertex, turn)
stack, SCCs come from an iterative Tarjan, cut vertices and bridges from
brute-force removal, biconnectivity classes from exhaustive simple-cycle
enumeration on tiny graphs.
"""

from __future__ import annotations

import random

from .dense import PRE, POST, TREE, RETREAT, BACK, _SH
from .graph import build_graph


# ---------------------------------------------------------------------------
# reference DFS (explicit stack, identical tie-breaking)

def oracle_dfs_events(g):
    """Encoded event list of a naive DFS with an explicit stack of
    (vertex, parent-slot, turn) frames."""
    n = g.n
    off = g.off
    heads = g.heads
    mates = g.mates
    outdegs = g.outdegs
    directed = g.directed
    white = [True] * (n + 1)
    out = []
    push = out.append
    for r in range(1, n + 1):
        if not white[r]:
            continue
        white[r] = False
        push(r << (2 * _SH))  # PRE
        stack = [(r, -1, -1)]  # vertex, parent slot at vertex, turn counter
        while stack:
            v, k, l = stack.pop()
            base = off[v]
            dv = off[v + 1] - base
            advanced = False
            while l + 1 < dv:
                l += 1
                s = k + l + 1
                if s >= dv:
                    s -= dv
                w = heads[base + s]
                if directed and s >= outdegs[v]:
                    continue  # incoming slot: silently skipped
                if white[w]:
                    white[w] = False
                    push(((TREE << _SH | v) << _SH | w) << _SH)
                    push(w << (2 * _SH))  # PRE
                    stack.append((v, k, l))
                    stack.append((w, mates[base + s], -1))
                    advanced = True
                    break
                push((((BACK << _SH | v) << _SH | w) << _SH) | l)
            if not advanced:
                push((POST << _SH | v) << (2 * _SH))
                if stack:
                    push(((RETREAT << _SH | stack[-1][0]) << _SH | v) << _SH)
    return out


def oracle_parents(g):
    """Lexicographic DFS forest parents from the reference DFS."""
    parents = [0] * (g.n + 1)
    for e in oracle_dfs_events(g):
        if e >> (3 * _SH) == TREE:
            u = (e >> (2 * _SH)) & ((1 << _SH) - 1)
            v = (e >> _SH) & ((1 << _SH) - 1)
            parents[v] = u
    return parents


# ---------------------------------------------------------------------------
# component oracles

def oracle_scc_tarjan(g):
    """Set of frozensets: the SCC partition (iterative Tarjan)."""
    if not g.directed:
        raise ValueError("Tarjan oracle needs a directed graph")
    n = g.n
    adj = [[] for _ in range(n + 1)]
    for u, v in g.edges:
        adj[u].append(v)
    index = [0] * (n + 1)
    low = [0] * (n + 1)
    on_stack = [False] * (n + 1)
    comp = []
    stack = []
    counter = [1]
    out = []

    def strongconnect(v0):
        work = [(v0, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for i in range(pi, len(adj[v])):
                w = adj[v][i]
                if index[w] == 0:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if recurse:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
            if low[v] == index[v]:
                c = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    c.append(w)
                    if w == v:
                        break
                out.append(frozenset(c))

    for v in range(1, n + 1):
        if index[v] == 0:
            strongconnect(v)
    return set(out)


def oracle_scc_reachability(g):
    """SCCs by pairwise reachability; for cross-checking tiny graphs."""
    n = g.n
    adj = [[] for _ in range(n + 1)]
    for u, v in g.edges:
        adj[u].append(v)
    reach = []
    for s in range(1, n + 1):
        seen = [False] * (n + 1)
        seen[s] = True
        stk = [s]
        while stk:
            x = stk.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stk.append(y)
        reach.append(seen)
    comps = {}
    for v in range(1, n + 1):
        key = frozenset(
            w for w in range(1, n + 1) if reach[v - 1][w] and reach[w - 1][v]
        )
        comps[min(key)] = key
    return set(comps.values())


def _components_count(n, edge_list):
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edge_list:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(v) for v in range(1, n + 1)})


def oracle_cut_vertices(g):
    """Vertices whose removal increases the component count (n <= 50)."""
    if g.n > 50:
        raise ValueError("removal oracle limited to n <= 50")
    base = _components_count(g.n, g.edges)
    cuts = set()
    for v in range(1, g.n + 1):
        if g.deg(v) == 0 or g.n == 1:
            continue
        kept = [(a, b) for a, b in g.edges if a != v and b != v]
        parent = {u: u for u in range(1, g.n + 1) if u != v}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in kept:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        rest = len({find(u) for u in parent})
        if rest > base:
            cuts.add(v)
    return cuts


def oracle_bridges(g):
    """Multiset of edge slots that are bridges, as a set of edge indices."""
    if g.n > 50:
        raise ValueError("removal oracle limited to n <= 50")
    base = _components_count(g.n, g.edges)
    bridges = set()
    for i in range(g.m):
        kept = [e for j, e in enumerate(g.edges) if j != i]
        if _components_count(g.n, kept) > base:
            bridges.add(i)
    return bridges


def _simple_cycles_edge_sets(g):
    """Edge-index sets of all simple cycles (multigraph aware; a pair of
    parallel edges forms a 2-cycle).  Tiny graphs only."""
    n, m = g.n, g.m
    if n > 12 or m > 16:
        raise ValueError("cycle enumeration limited to n <= 12, m <= 16")
    incident = [[] for _ in range(n + 1)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append((i, v))
        incident[v].append((i, u))
    cycles = set()

    def extend(start, v, used_edges, used_verts):
        for i, w in incident[v]:
            if i in used_edges:
                continue
            if w == start and len(used_edges) >= 1:
                if i > min(used_edges) or len(used_edges) == 1:
                    cycles.add(frozenset(used_edges | {i}))
                continue
            if w in used_verts:
                continue
            extend(start, w, used_edges | {i}, used_verts | {w})

    for i, (u, v) in enumerate(g.edges):
        extend(u, v, {i}, {u, v})
    # keep only genuine simple cycles: every vertex touched exactly twice
    out = set()
    for cyc in cycles:
        count = {}
        for i in cyc:
            a, b = g.edges[i]
            count[a] = count.get(a, 0) + 1
            count[b] = count.get(b, 0) + 1
        if all(c == 2 for c in count.values()):
            out.add(cyc)
    return out


def oracle_bcc_edge_classes(g):
    """Partition of edge indices under the simple-cycle relation."""
    cycles = _simple_cycles_edge_sets(g)
    parent = list(range(g.m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cyc in cycles:
        it = iter(cyc)
        first = next(it)
        for e in it:
            ra, rb = find(first), find(e)
            if ra != rb:
                parent[ra] = rb
    classes = {}
    for i in range(g.m):
        classes.setdefault(find(i), set()).add(i)
    return set(frozenset(c) for c in classes.values())


def oracle_2ecc_edge_classes(g):
    """Partition of edge indices under the general-cycle relation: bridges
    are singletons, everything else groups by bridge-free component."""
    bridges = oracle_bridges(g)
    parent = {u: u for u in range(1, g.n + 1)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (u, v) in enumerate(g.edges):
        if i in bridges:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    classes = {}
    for i, (u, v) in enumerate(g.edges):
        if i in bridges:
            classes[("b", i)] = {i}
        else:
            classes.setdefault(find(u), set()).add(i)
    return set(frozenset(c) for c in classes.values())


def oracle_p_values(g):
    """P(w) for every vertex: w has a parent v in the lexicographic DFS
    forest and some edge joins a descendant of w to a proper ancestor of
    v.  Exhaustive evaluation from the oracle forest."""
    parents = oracle_parents(g)
    n = g.n
    ancestors = [set() for _ in range(n + 1)]
    for v in range(1, n + 1):
        a = parents[v]
        seen = set()
        while a and a not in seen:
            seen.add(a)
            a = parents[a]
        ancestors[v] = seen  # proper ancestors of v
    desc = [set([v]) for v in range(n + 1)]
    order = sorted(range(1, n + 1), key=lambda v: -len(ancestors[v]))
    for v in order:
        if parents[v]:
            desc[parents[v]] |= desc[v]
    p = [False] * (n + 1)
    for w in range(1, n + 1):
        v = parents[w]
        if not v:
            continue
        anc_v = ancestors[v]
        hit = False
        for a, b in g.edges:
            if (a in desc[w] and b in anc_v) or (b in desc[w] and a in anc_v):
                hit = True
                break
        p[w] = hit
    return p


def oracle_components(g, kind):
    """Canonical component results: 'scc' (vertex partition), 'cut',
    'bridge' (edge-index set), 'bcc'/'2ecc' (edge-index partitions)."""
    if kind == "scc":
        return oracle_scc_tarjan(g)
    if kind == "cut":
        return oracle_cut_vertices(g)
    if kind == "bridge":
        return oracle_bridges(g)
    if kind == "bcc":
        return oracle_bcc_edge_classes(g)
    if kind == "2ecc":
        return oracle_2ecc_edge_classes(g)
    raise ValueError("unknown kind %r" % kind)


# ---------------------------------------------------------------------------
# generators (all deterministic under the given seed)

def gen_uniform(n, m, directed=False, seed=0):
    if n < 2 and m > 0:
        raise ValueError("no self-loops: n=1 admits no edges")
    rng = random.Random(seed)
    edges = []
    for _ in range(m):
        while True:
            u = rng.randint(1, n)
            v = rng.randint(1, n)
            if u != v:
                break
        edges.append((u, v))
    return build_graph(n, edges, directed=directed)


def gen_path(n):
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def gen_cycle(n):
    edges = [(i, i + 1) for i in range(1, n)]
    edges.append((n, 1))
    return build_graph(n, edges)


def gen_complete(n):
    return build_graph(
        n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    )


def gen_star(leaves):
    return build_graph(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def gen_ladder(rungs):
    """Two parallel paths of `rungs` vertices each, joined by rungs."""
    n = 2 * rungs
    edges = []
    for i in range(1, rungs):
        edges.append((i, i + 1))  # top rail
    for i in range(1, rungs):
        edges.append((rungs + i, rungs + i + 1))  # bottom rail
    for i in range(1, rungs + 1):
        edges.append((i, rungs + i))
    return build_graph(n, edges)


def gen_bowtie(triangles=2):
    """`triangles` triangles sharing the hub vertex 3 (labels 1..5 for the
    classic two-triangle bowtie)."""
    if triangles == 2:
        edges = [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]
        return build_graph(5, edges)
    hub = 3
    edges = []
    nxt = 1
    labels = []
    for _ in range(triangles):
        pair = []
        for _ in range(2):
            if nxt == hub:
                nxt += 1
            pair.append(nxt)
            nxt += 1
        labels.append(pair)
    n = max(hub, nxt - 1)
    for a, b in labels:
        edges += [(a, b), (a, hub), (b, hub)]
    return build_graph(n, edges)


def gen_dag(n, m, seed=0):
    rng = random.Random(seed)
    edges = []
    for _ in range(m):
        while True:
            u = rng.randint(1, n)
            v = rng.randint(1, n)
            if u != v:
                break
        edges.append((min(u, v), max(u, v)))
    return build_graph(n, edges, directed=True)


def gen_digraph(n, m, seed=0):
    return gen_uniform(n, m, directed=True, seed=seed)


def gen_degree_sequence(seq, seed=0):
    """Pairing-model graph on degrees seq (1-based vertices); self-loop
    pairings are rejected by reshuffling."""
    rng = random.Random(seed)
    stubs = []
    for v, d in enumerate(seq, start=1):
        stubs.extend([v] * d)
    if len(stubs) % 2:
        raise ValueError("degree sum must be even")
    for _ in range(1000):
        rng.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        if all(a != b for a, b in pairs):
            return build_graph(len(seq), pairs)
    raise ValueError("could not realize degree sequence without self-loops")


def gen_connected(n, m, seed=0):
    """Random connected graph: a random spanning tree plus extra edges."""
    rng = random.Random(seed)
    if m < n - 1:
        raise ValueError("need m >= n-1 for connectivity")
    edges = []
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    for i in range(1, n):
        edges.append((verts[rng.randint(0, i - 1)], verts[i]))
    while len(edges) < m:
        u = rng.randint(1, n)
        v = rng.randint(1, n)
        if u != v:
            edges.append((u, v))
    rng.shuffle(edges)
    return build_graph(n, edges)


# ---------------------------------------------------------------------------
# instrumentation entry point

def measure(g, algorithm, **kwargs):
    """Run a traversal/algorithm with a fresh BitMeter and counter dict;
    returns {"space": meter report, "counters": {...}}."""
    from .bits import BitMeter

    meter = BitMeter()
    counters = {}
    if algorithm == "dfs_dense":
        from .dense import run_dfs

        run_dfs(g, None, meter=meter, counters=counters, **kwargs)
    elif algorithm == "dfs_grouped":
        from .dense import run_dfs

        run_dfs(g, None, variant="grouped", meter=meter, counters=counters, **kwargs)
    elif algorithm == "dfs_loglog":
        from .sparse import dfs_loglog

        dfs_loglog(g, None, meter=meter, counters=counters, **kwargs)
    elif algorithm == "dfs_logstar":
        from .sparse import dfs_logstar

        dfs_logstar(g, None, meter=meter, counters=counters, **kwargs)
    elif algorithm == "dfs_fixed_k":
        from .sparse import dfs_fixed_k

        dfs_fixed_k(g, kwargs.pop("k"), None, meter=meter, counters=counters, **kwargs)
    else:
        raise ValueError("unknown algorithm %r" % algorithm)
    return {"space": meter.report(), "counters": counters}
