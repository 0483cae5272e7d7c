"""Density-dependent applications of the traversal: strongly connected
components (two algorithms), topological sorting, cut vertices, bridges,
biconnected and 2-edge-connected components, and single-component queries.

The SCC algorithms follow the two-pass scheme: a first traversal of the
input graph produces either an Euler bit sequence (2m bits; 1 = discover
or withdraw, 0 = skip) or succinct parent references, from which the
second traversal of the reversed graph draws its roots in reverse
postorder.  The biconnectivity family reduces to the predicate P(w): "w
has a parent v and some edge joins a descendant of w to a proper ancestor
of v", computed by climbing marking walks over the stored forest.
"""

from __future__ import annotations

from .bits import BitVec, ChoiceDict, StaticAllocArray, TernaryArray, ceil_log2
from .dense import DfsEvents, run_dfs
from .graph import ModeError


class CyclicGraphError(ValueError):
    def __init__(self, vertex):
        super().__init__("input graph is cyclic (vertex %d never freed)" % vertex)
        self.vertex = vertex


class UnknownEdgeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# component stream

class ComponentStream:
    """Ordered emission of vertices/edges with running component ids.

    Items are (key, kind, payload); kind is "v" (vertex), "e" (edge) or
    "x" (inter-component edge).  Keys map to consecutive ids in order of
    first appearance; key None means "no component" (cut/bridge listings).
    """

    def __init__(self):
        self.items = []
        self._auto = 0

    def new_component(self):
        self._auto += 1
        return self._auto

    def emit(self, key, kind, payload):
        self.items.append((key, kind, payload))

    def component_ids(self):
        ids = {}
        for key, _kind, _payload in self.items:
            if key is not None and key not in ids:
                ids[key] = len(ids) + 1
        return ids

    def components(self):
        """Ordered dict id -> {"vertices": [...], "edges": [...],
        "inter": [...]} plus id 0 for id-less items."""
        ids = self.component_ids()
        out = {}
        for key, kind, payload in self.items:
            cid = 0 if key is None else ids[key]
            ent = out.setdefault(cid, {"vertices": [], "edges": [], "inter": []})
            if kind == "v":
                ent["vertices"].append(payload)
            elif kind == "e":
                ent["edges"].append(payload)
            else:
                ent["inter"].append(payload)
        return out

    def canonical(self, directed=False):
        """Multiset of components as (vertex set, edge multiset) pairs."""
        from collections import Counter

        def norm(e):
            return e if directed else (min(e), max(e))

        comps = self.components()
        parts = []
        for cid, ent in comps.items():
            if cid == 0:
                continue
            parts.append(
                (
                    frozenset(ent["vertices"]),
                    tuple(sorted(norm(e) for e in ent["edges"])),
                )
            )
        return Counter(parts)

    def vertex_partition(self):
        return set(
            frozenset(ent["vertices"])
            for cid, ent in self.components().items()
            if cid != 0
        )

    def inter_edges(self):
        out = []
        for _key, kind, payload in self.items:
            if kind == "x":
                out.append(payload)
        return out

    def to_text(self):
        lines = []
        comps = self.components()
        for cid in comps:
            if cid == 0:
                continue
            lines.append("c %d" % cid)
            ent = comps[cid]
            lines.extend("v %d" % v for v in ent["vertices"])
            lines.extend("e %d %d" % e for e in ent["edges"])
            lines.extend("x %d %d" % e for e in ent["inter"])
        if 0 in comps:
            ent = comps[0]
            lines.extend("v %d" % v for v in ent["vertices"])
            lines.extend("e %d %d" % e for e in ent["edges"])
        return "\n".join(lines) + ("\n" if lines else "")

    def to_json(self):
        import json

        comps = self.components()
        payload = {"components": [], "items": []}
        for cid, ent in comps.items():
            if cid == 0:
                payload["items"] = {
                    "vertices": ent["vertices"],
                    "edges": [list(e) for e in ent["edges"]],
                }
                continue
            payload["components"].append(
                {
                    "id": cid,
                    "vertices": ent["vertices"],
                    "edges": [list(e) for e in ent["edges"]],
                    "inter_edges": [list(e) for e in ent["inter"]],
                }
            )
        return json.dumps(payload, sort_keys=True)


# ---------------------------------------------------------------------------
# parent references (the succinct DFS forest)

class ParentArray:
    """Per-vertex parent reference of ceil(log2(d+1)) bits (d = degree,
    or indegree when directed): the slot position of the parent edge at
    the child, plus a reserved no-parent value (0)."""

    def __init__(self, g, meter=None, category="parent_refs"):
        self.g = g
        if g.directed:
            widths = [g.indeg(v).bit_length() for v in range(1, g.n + 1)]
        else:
            widths = [g.deg(v).bit_length() for v in range(1, g.n + 1)]
        self.arr = StaticAllocArray(widths, meter, category)

    def is_root(self, v):
        return self.arr.read(v) == 0

    def set_parent_slot(self, v, local_slot):
        """local_slot: among in-slots when directed, among all otherwise."""
        self.arr.write(v, local_slot + 1)

    def parent_slot_global(self, v):
        raw = self.arr.read(v)
        if raw == 0:
            return -1
        if self.g.directed:
            return self.g.outdeg(v) + raw - 1
        return raw - 1

    def parent(self, v):
        s = self.parent_slot_global(v)
        return 0 if s < 0 else self.g.head(v, s)

    def bit_size(self):
        return self.arr.bit_size()


def compute_parents(g, meter=None):
    """Parents of the lexicographic DFS forest, computed without a turn
    stack: withdrawal follows the freshly written parent reference."""
    n = g.n
    off = g.off
    heads = g.heads
    mates = g.mates
    outdegs = g.outdegs
    directed = g.directed
    parents = ParentArray(g, meter)
    arr = parents.arr
    ww = [0] * ((n + 63) >> 6)  # bit set = discovered
    if meter is not None:
        meter.set_bits("white", n)

    for r in range(1, n + 1):
        i = r - 1
        if (ww[i >> 6] >> (i & 63)) & 1:
            continue
        ww[i >> 6] |= 1 << (i & 63)
        v = r
        dv = off[v + 1] - off[v]
        sv = 0
        stop = dv  # the root scans linearly over slots 0..deg-1
        while True:
            if sv == stop:
                if v == r:
                    break
                kg = parents.parent_slot_global(v)
                base = off[v]
                u = heads[base + kg]
                mt = mates[base + kg]
                v = u
                dv = off[v + 1] - off[v]
                if v == r:
                    sv = mt + 1
                    stop = dv
                else:
                    sv = mt + 1
                    if sv == dv:
                        sv = 0
                    stop = parents.parent_slot_global(v)
                continue
            s = sv
            sv += 1
            if v != r and sv == dv:
                sv = 0
            if directed and s >= outdegs[v]:
                continue
            w = heads[off[v] + s]
            iw = w - 1
            if (ww[iw >> 6] >> (iw & 63)) & 1:
                continue
            ww[iw >> 6] |= 1 << (iw & 63)
            mt = mates[off[v] + s]
            if directed:
                arr.write(w, mt - outdegs[w] + 1)
            else:
                arr.write(w, mt + 1)
            v = w
            dv = off[v + 1] - off[v]
            sv = mt + 1
            if sv == dv:
                sv = 0
            stop = mt
            if dv == 0:
                stop = sv  # unreachable: discovered vertices have deg >= 1
        # tree rooted at r complete
    return parents


# ---------------------------------------------------------------------------
# strongly connected components

class _TernaryWhite1:
    """Phase-1 store: 0 white, 1 discovered, 2 discovered root."""

    def __init__(self, color):
        self.color = color

    def is_white(self, v):
        return self.color.read(v) == 0

    def set_nonwhite(self, v):
        self.color.write(v, 1)


class _TernaryWhite2:
    """Phase-2 store over the reused ternary array: 1 is plain white, 2 is
    an unprocessed root (white) at or below the current tree root and "in
    an older tree" above it, 0 is "in the current tree"."""

    def __init__(self, color):
        self.color = color
        self.cur_root = 0

    def is_white(self, v):
        c = self.color.read(v)
        return c == 1 or (c == 2 and v <= self.cur_root)

    def set_nonwhite(self, v):
        self.color.write(v, 0)


class _RemapWhite:
    """Re-run store: treats "in the current tree" (0) as white and
    replaces it by "in an older tree" (2)."""

    def __init__(self, color):
        self.color = color

    def is_white(self, v):
        return self.color.read(v) == 0

    def set_nonwhite(self, v):
        self.color.write(v, 2)


def scc_euler(g, with_edges=False, meter=None, counters=None):
    """Kosaraju-Sharir SCCs with the Euler bit sequence as the reverse
    postorder carrier: n*log2(3) + (14/5)m + O((log n)^2) bits."""
    if not g.directed:
        raise ModeError("scc requires a directed graph")
    n = g.n
    color = TernaryArray(n, meter, "color_ternary")
    store1 = _TernaryWhite1(color)
    euler = BitVec()
    append = euler.append_bits
    depth = [0]
    pending_root = [True]

    def pre(v):
        if depth[0] == 0:
            color.write(v, 2)  # roots are certainly not white

    def tree(v, w):
        append(1, 1)
        depth[0] += 1

    def back(v, w, turn):
        append(0, 1)

    def retreat(u, v):
        append(1, 1)
        depth[0] -= 1

    def skip(v, w, turn):
        # the parent slot's bit is the later withdrawal 1
        if not (depth[0] > 0 and turn == g.deg(v) - 1):
            append(0, 1)

    run_dfs(
        g,
        DfsEvents(preprocess=pre, explore_tree_edge=tree, handle_back_edge=back,
                  retreat_tree_edge=retreat),
        variant="grouped",
        white_store=store1,
        on_skip=skip,
        meter=meter,
        counters=counters,
    )
    assert euler.nbits == 2 * g.m
    if meter is not None:
        meter.set_bits("euler_bits", euler.nbits)

    store2 = _TernaryWhite2(color)
    deg = g.deg
    head = g.head
    mate = g.mate

    def reverse_postorder():
        pos = euler.nbits
        r = n
        while True:
            while r >= 1 and color.read(r) != 2:
                r -= 1
            if r == 0:
                return
            store2.cur_root = r
            yield r
            cur = r
            s = deg(r) - 1
            while not (cur == r and s < 0):
                pos -= 1
                if euler.get_bit(pos):
                    dc = deg(cur)
                    sl = s % dc
                    w = head(cur, sl)
                    mt = mate(cur, sl)
                    yield w
                    cur = w
                    s = mt - 1
                else:
                    s -= 1
            r -= 1

    sink = ComponentStream()
    comp_key = [None]

    def pre2(v):
        sink.emit(comp_key[0], "v", v)

    ev2 = DfsEvents(preprocess=pre2)
    if with_edges:
        def tree2(v, w):
            sink.emit(comp_key[0], "e", (w, v))

        def back2(v, w, turn):
            c = color.read(w)
            sink.emit(comp_key[0], "x" if c == 2 else "e", (w, v))

        ev2 = DfsEvents(preprocess=pre2, explore_tree_edge=tree2,
                        handle_back_edge=back2)

    remap = _RemapWhite(color)
    for w in reverse_postorder():
        if store2.is_white(w):
            comp_key[0] = sink.new_component()
            run_dfs(g, ev2, variant="grouped", reverse=True, white_store=store2,
                    roots=(w,), meter=meter, counters=counters)
            if with_edges:
                run_dfs(g, None, variant="grouped", reverse=True,
                        white_store=remap, roots=(w,), meter=meter,
                        counters=counters)
            if w == store2.cur_root:
                # the tree root is processed; later tour arrivals at it
                # must read as "in an older tree", not as a root mark
                store2.cur_root = w - 1
    return sink


def scc_parent(g, meter=None, counters=None):
    """SCCs via succinct parent references instead of the bit sequence:
    (2n + L_{-1} + 2 L_1^in)(1+o(1)) bits."""
    if not g.directed:
        raise ModeError("scc requires a directed graph")
    n = g.n
    parents = compute_parents(g, meter)
    deg = g.deg
    head = g.head
    mate = g.mate
    outdeg = g.outdeg

    def walk_tree(r):
        yield r
        v = r
        s = deg(r) - 1
        while True:
            while s >= 0:
                if s < outdeg(v):  # children hang off out-slots
                    w = head(v, s)
                    if (not parents.is_root(w)
                            and parents.parent_slot_global(w) == mate(v, s)):
                        yield w
                        v = w
                        s = deg(w) - 1
                        continue
                s -= 1
            if v == r:
                return
            kg = parents.parent_slot_global(v)
            u = head(v, kg)
            s = mate(v, kg) - 1
            v = u

    def reverse_postorder():
        for r in range(n, 0, -1):
            if parents.is_root(r):
                yield from walk_tree(r)

    white2 = BitVec(n)
    if meter is not None:
        meter.set_bits("white2", n)

    class _W2:
        @staticmethod
        def is_white(v):
            return not white2.get_bit(v - 1)

        @staticmethod
        def set_nonwhite(v):
            white2.set_bit(v - 1)

    sink = ComponentStream()
    comp_key = [None]

    def pre2(v):
        sink.emit(comp_key[0], "v", v)

    ev2 = DfsEvents(preprocess=pre2)
    store = _W2()
    for w in reverse_postorder():
        if store.is_white(w):
            comp_key[0] = sink.new_component()
            run_dfs(g, ev2, variant="plain", reverse=True, white_store=store,
                    roots=(w,), meter=meter, counters=counters)
    return sink


# ---------------------------------------------------------------------------
# topological sorting

def toposort(g, meter=None):
    """Repeatedly remove a vertex of indegree 0; residual indegrees are
    kept one-off in a static allocation (a vertex of original indegree d
    only needs d distinguishable values), the zero-indegree set in a
    choice dictionary."""
    if not g.directed:
        raise ModeError("topological sorting requires a directed graph")
    n = g.n
    indegs = [0] * (n + 1)
    for v in range(1, n + 1):
        indegs[v] = g.indeg(v)
    widths = [(indegs[v] - 1).bit_length() if indegs[v] >= 1 else 0
              for v in range(1, n + 1)]
    residual = StaticAllocArray(widths, meter, "residual_indegrees")
    zero = ChoiceDict(n, meter, "zero_indegree_set")
    for v in range(1, n + 1):
        if indegs[v] == 0:
            zero.insert(v)
        else:
            residual.write(v, indegs[v] - 1)
    order = []
    off = g.off
    heads = g.heads
    outdegs = g.outdegs
    while len(zero):
        v = zero.choice()
        zero.delete(v)
        order.append(v)
        base = off[v]
        for s in range(outdegs[v]):
            w = heads[base + s]
            cur = residual.read(w)
            if cur == 0:
                zero.insert(w)
            else:
                residual.write(w, cur - 1)
    if len(order) < n:
        done = set(order)
        for v in range(1, n + 1):
            if v not in done:
                raise CyclicGraphError(v)
    return order


# ---------------------------------------------------------------------------
# the P(w) marking machinery

class _SeparateAQ:
    """Edge-output mode: separate ancestor and mark arrays (2n bits)."""

    has_gray = True

    def __init__(self, n, meter=None):
        self.a = BitVec(n)
        self.q = BitVec(n)
        if meter is not None:
            meter.set_bits("mark_q", n)
            meter.set_bits("mark_a", n)

    def q_get(self, v):
        return self.q.get_bit(v - 1)

    def q_set(self, v):
        self.q.set_bit(v - 1)

    def skip(self, y):
        return self.a.get_bit(y - 1) or self.q.get_bit(y - 1)

    def set_gray(self, v):
        self.a.set_bit(v - 1)

    def clear_gray(self, v):
        self.a.clear_bit(v - 1)

    def is_gray(self, v):
        return self.a.get_bit(v - 1)

    def on_visit(self, v):
        pass


class _FusedTernary:
    """Vertex-output mode: one ternary array; 0 = neither, 1 = gray with
    q false, 2 = q true (grayness then immaterial)."""

    has_gray = False

    def __init__(self, n, meter=None):
        self.t = TernaryArray(n, meter, "mark_ternary")

    def q_get(self, v):
        return self.t.read(v) == 2

    def q_set(self, v):
        self.t.write(v, 2)

    def skip(self, y):
        return self.t.read(y) != 0

    def set_gray(self, v):
        if self.t.read(v) == 0:
            self.t.write(v, 1)

    def clear_gray(self, v):
        if self.t.read(v) == 1:
            self.t.write(v, 0)

    def is_gray(self, v):
        raise ModeError("vertex-output mode stores no exact ancestor bits")

    def on_visit(self, v):
        pass


class _ArtificialQ:
    """Cut/bridge mode: a single mark array; arriving at v sets Q[v] so
    the ancestor test can consult Q instead of a separate array."""

    has_gray = False

    def __init__(self, n, meter=None):
        self.q = BitVec(n)
        if meter is not None:
            meter.set_bits("mark_q", n)

    def q_get(self, v):
        return self.q.get_bit(v - 1)

    def q_set(self, v):
        self.q.set_bit(v - 1)

    def skip(self, y):
        return self.q.get_bit(y - 1)

    def set_gray(self, v):
        pass

    def clear_gray(self, v):
        pass

    def is_gray(self, v):
        raise ModeError("cut/bridge mode stores no ancestor bits")

    def on_visit(self, v):
        self.q.set_bit(v - 1)


class MarkArray:
    """Final P values, extracted from a completed marking pass."""

    def __init__(self, p):
        self._p = p

    def p(self, w):
        return self._p[w]

    def as_list(self):
        return list(self._p)


def _process_nontree(g, parents, store, v, kglob, counters=None):
    """Process every nontree edge {v, y} with y a descendant: climb from y
    toward v marking Q, omitting the last two vertices, stopping early at
    an already-true vertex."""
    off = g.off
    heads = g.heads
    mates = g.mates
    base = off[v]
    dv = off[v + 1] - base
    steps = 0
    for s in range(dv):
        if s == kglob:
            continue
        y = heads[base + s]
        steps += 1
        if (not parents.is_root(y)
                and parents.parent_slot_global(y) == mates[base + s]):
            continue  # tree edge to a child
        if store.skip(y):
            continue
        z = y
        while True:
            pz = parents.parent(z)
            steps += 1
            if pz == v or pz == 0:
                break
            if store.q_get(z):
                break
            store.q_set(z)
            z = pz
    if counters is not None:
        counters["mark_steps"] = counters.get("mark_steps", 0) + steps


def _children(g, parents, v):
    """Slots of v's tree children, in cyclic order from the parent slot."""
    off = g.off
    heads = g.heads
    mates = g.mates
    base = off[v]
    dv = off[v + 1] - base
    kglob = parents.parent_slot_global(v)
    out = []
    for j in range(dv):
        s = (kglob + 1 + j) % dv
        if s == kglob:
            continue
        w = heads[base + s]
        if not parents.is_root(w) and parents.parent_slot_global(w) == mates[base + s]:
            out.append((s, w))
    return out


def _forest_traverse(g, parents, store, *, phase_of=None, on_visit=None,
                     on_withdraw=None, on_tree_done=None, counters=None):
    """Walk the stored forest in preorder, processing nontree edges at
    each vertex before its children.  phase_of(v, w) returns 0 or 1; all
    phase-0 children are visited before phase-1 children (both in cyclic
    slot order).  State per level is recomputed from parent references,
    so the walk itself needs O(log n) bits."""
    off = g.off
    heads = g.heads
    mates = g.mates
    two_phase = phase_of is not None
    for r in range(1, g.n + 1):
        if not parents.is_root(r):
            continue
        v = r
        kv = -1
        store.on_visit(v)
        store.set_gray(v)
        _process_nontree(g, parents, store, v, kv, counters)
        if on_visit is not None:
            on_visit(v)
        j = 0
        phase = 0
        while True:
            base = off[v]
            dv = off[v + 1] - base
            if j >= dv:
                if two_phase and phase == 0:
                    phase = 1
                    j = 0
                    continue
                # withdraw
                store.clear_gray(v)
                if v == r:
                    break
                kg = kv
                u = heads[base + kg]
                mt = mates[base + kg]
                ku = parents.parent_slot_global(u)
                if on_withdraw is not None:
                    on_withdraw(u, v)
                du = off[u + 1] - off[u]
                # resume one past the traversed slot of u
                j = (mt - ku) % du if ku >= 0 else mt + 1
                phase = phase_of(u, v) if two_phase else 0
                v = u
                kv = ku
                continue
            s = (kv + 1 + j) % dv if kv >= 0 else j
            j += 1
            if s == kv:
                continue
            w = heads[base + s]
            if parents.is_root(w) or parents.parent_slot_global(w) != mates[base + s]:
                continue  # not a tree child
            if two_phase and phase_of(v, w) != phase:
                continue
            # descend
            store.on_visit(w)
            store.set_gray(w)
            _process_nontree(g, parents, store, w, parents.parent_slot_global(w),
                             counters)
            if on_visit is not None:
                on_visit(w)
            v = w
            kv = parents.parent_slot_global(w)
            j = 0
            phase = 0
        if on_tree_done is not None:
            on_tree_done(r)


def mark_pass(g, parents=None, fused=False, meter=None, counters=None):
    """Compute P(w) for all w over the lexicographic DFS forest."""
    if g.directed:
        raise ModeError("the marking pass is defined for undirected graphs")
    if parents is None:
        parents = compute_parents(g, meter)
    store = _FusedTernary(g.n, meter) if fused else _SeparateAQ(g.n, meter)
    _forest_traverse(g, parents, store, counters=counters)
    return MarkArray([False] + [store.q_get(v) for v in range(1, g.n + 1)])


# ---------------------------------------------------------------------------
# cut vertices, bridges, BCC and 2ECC emission

def _bridge_test(g, parents, store, v, w):
    """Is the tree edge {v, w} (w the child) a bridge?  P(w) must be false,
    so must P(c) for every child c of w (the preliminary visit), and no
    parallel copy of {v, w} may exist (parallel edges form a 2-cycle)."""
    if store.q_get(w):
        return False
    for _s, c in _children(g, parents, w):
        if store.q_get(c):
            return False
    base = g.off[w]
    kg = parents.parent_slot_global(w)
    for s in range(g.deg(w)):
        if s != kg and g.heads[base + s] == v:
            return False
    return True


def bcc_suite(g, which, output="both", meter=None, counters=None):
    """which: cut | bridge | bcc | 2ecc.  output: vertices | edges | both
    (bcc/2ecc only).  Returns a ComponentStream."""
    if g.directed:
        raise ModeError("biconnectivity is defined for undirected graphs")
    if which not in ("cut", "bridge", "bcc", "2ecc"):
        raise ValueError("unknown computation %r" % which)
    if output not in ("vertices", "edges", "both"):
        raise ValueError("unknown output selector %r" % output)
    parents = compute_parents(g, meter)
    sink = ComponentStream()

    if which in ("cut", "bridge"):
        store = _ArtificialQ(g.n, meter)
        emitted = set()

        def on_visit(v):
            kids = _children(g, parents, v)
            if which == "cut":
                if any(not store.q_get(w) for _s, w in kids):
                    if not parents.is_root(v) or len(kids) >= 2:
                        if v not in emitted:
                            emitted.add(v)
                            sink.emit(None, "v", v)
            else:
                for _s, w in kids:
                    if _bridge_test(g, parents, store, v, w):
                        sink.emit(None, "e", (v, w))

        # the artificial Q write happens in store.on_visit, which the
        # traversal calls before processing nontree edges; child marks are
        # still clean at that point
        _forest_traverse(g, parents, store, on_visit=on_visit, counters=counters)
        return sink

    want_edges = output in ("edges", "both")
    want_vertices = output in ("vertices", "both")
    store = _SeparateAQ(g.n, meter) if want_edges else _FusedTernary(g.n, meter)

    def emit_lower_edges(key, v, w):
        """Edges with lower endpoint w: the parent edge plus every edge to
        a gray (ancestor) vertex."""
        base = g.off[w]
        kg = parents.parent_slot_global(w)
        for s in range(g.deg(w)):
            z = g.heads[base + s]
            if s == kg:
                sink.emit(key, "e", (v, w))
            elif (not (not parents.is_root(z)
                       and parents.parent_slot_global(z) == g.mates[base + s])
                  and store.is_gray(z)):
                sink.emit(key, "e", (z, w))

    # Items are attributed to the component of the lowest vertex u on the
    # path to the root whose parent edge starts a new component (P(u)
    # false for BCCs, a bridge for 2ECCs), kept on a stack of such
    # vertices.  Running ids by first appearance replace the separator
    # convention: with bridges hanging off two different internal
    # vertices of one block, no sibling order keeps a block's emission
    # contiguous, so separators alone cannot delimit components.
    names = []

    if which == "bcc":
        def phase_of(v, w):
            return 0 if not store.q_get(w) else 1

        def on_visit(w):
            if not parents.is_root(w) and not store.q_get(w):
                names.append(w)

        def on_withdraw(v, w):
            false_p = not store.q_get(w)
            k = w if false_p else names[-1]
            if want_edges:
                emit_lower_edges(k, v, w)
            if want_vertices:
                sink.emit(k, "v", w)
            if false_p:
                if want_vertices:
                    sink.emit(k, "v", v)
                names.pop()

        def on_tree_done(r):
            # isolated vertices become zero-edge components in vertex mode
            if g.deg(r) == 0 and want_vertices:
                sink.emit(("i", r), "v", r)

        _forest_traverse(g, parents, store, phase_of=phase_of,
                         on_visit=on_visit, on_withdraw=on_withdraw,
                         on_tree_done=on_tree_done, counters=counters)
        return sink

    # 2-edge-connected components
    def phase_of(v, w):
        return 0 if _bridge_test(g, parents, store, v, w) else 1

    def nonbridge_incident(w):
        kids = _children(g, parents, w)
        tree_slots = len(kids) + (0 if parents.is_root(w) else 1)
        if g.deg(w) > tree_slots:
            return True  # nontree edges always lie on a cycle
        if not parents.is_root(w):
            if not _bridge_test(g, parents, store, parents.parent(w), w):
                return True
        return any(not _bridge_test(g, parents, store, w, c) for _s, c in kids)

    def on_visit(w):
        if parents.is_root(w):
            names.append(w)
        elif _bridge_test(g, parents, store, parents.parent(w), w):
            names.append(w)

    def on_withdraw(v, w):
        is_bridge = _bridge_test(g, parents, store, v, w)
        k = w if is_bridge else names[-1]
        if nonbridge_incident(w) and want_vertices:
            sink.emit(k, "v", w)
        if is_bridge:
            kb = ("b", w)  # the bridge forms its own one-edge component
            if want_vertices:
                sink.emit(kb, "v", v)
                sink.emit(kb, "v", w)
            if want_edges:
                sink.emit(kb, "e", (v, w))
            names.pop()
        elif want_edges:
            emit_lower_edges(k, v, w)

    def on_tree_done(r):
        if g.deg(r) == 0:
            if want_vertices:
                sink.emit(("i", r), "v", r)
        else:
            if nonbridge_incident(r) and want_vertices:
                sink.emit(r, "v", r)
        names.pop()

    _forest_traverse(g, parents, store, phase_of=phase_of,
                     on_visit=on_visit, on_withdraw=on_withdraw,
                     on_tree_done=on_tree_done, counters=counters)
    return sink


# ---------------------------------------------------------------------------
# single-component queries

class ComponentQuery:
    """Preprocessed structure answering "output the BCC (or 2ECC) that
    contains a given edge" in time proportional to the output size.

    Keeps the parent references, the final P values, and per-vertex
    choice dictionaries over incident slots holding the tree-child slots
    and the nontree slots whose lower endpoint is the owning vertex
    (2m + O(m/64) bits for the dictionaries)."""

    def __init__(self, g, meter=None):
        if g.directed:
            raise ModeError("component queries are defined for undirected graphs")
        self.g = g
        self.parents = compute_parents(g, meter)
        store = _SeparateAQ(g.n, meter)
        dicts = [None] * (g.n + 1)
        parents = self.parents

        def on_visit(w):
            d = g.deg(w)
            if d == 0:
                return
            cd = ChoiceDict(d)
            base = g.off[w]
            kg = parents.parent_slot_global(w)
            for s in range(d):
                z = g.heads[base + s]
                if s == kg:
                    continue
                if (not parents.is_root(z)
                        and parents.parent_slot_global(z) == g.mates[base + s]):
                    cd.insert(s + 1)  # tree edge to a child
                elif store.is_gray(z):
                    cd.insert(s + 1)  # nontree edge, lower endpoint w
            dicts[w] = cd

        _forest_traverse(g, parents, store, on_visit=on_visit)
        self.q = store.q
        self.dicts = dicts
        if meter is not None:
            meter.set_bits(
                "edge_choice_dicts",
                sum(d.bit_size() for d in dicts if d is not None),
            )

    def _p(self, w):
        return self.q.get_bit(w - 1)

    def _is_child_slot(self, w, s):
        z = self.g.head(w, s)
        return (not self.parents.is_root(z)
                and self.parents.parent_slot_global(z) == self.g.mate(w, s))

    def _bridge(self, v, w, work):
        """Bridge test for the tree edge {v, w} (w the child).  A lower
        nontree member at w (including a parallel copy of {v, w}) puts the
        edge on a cycle."""
        if self._p(w):
            return False
        cd = self.dicts[w]
        if cd is not None:
            for s1 in cd.iterate():
                work[0] += 1
                s = s1 - 1
                if self._is_child_slot(w, s):
                    if self._p(self.g.head(w, s)):
                        return False
                else:
                    return False
        return True

    def _lower_endpoint(self, x, y):
        """Follow parent references in parallel from both endpoints until
        one search hits the other endpoint or a root; the descendant is
        the lower endpoint."""
        a, b = x, y
        while True:
            if a != 0:
                a = self.parents.parent(a)
                if a == y:
                    return x
            if b != 0:
                b = self.parents.parent(b)
                if b == x:
                    return y
            if a == 0 and b == 0:
                raise AssertionError("endpoints in different trees")

    def query(self, u, v, kind="bcc", output="both", counters=None):
        g = self.g
        found = any(g.head(u, s) == v for s in range(g.deg(u))) if 1 <= u <= g.n else False
        if not found:
            raise UnknownEdgeError("edge {%d,%d} not in graph" % (u, v))
        work = [0]
        want_edges = output in ("edges", "both")
        want_vertices = output in ("vertices", "both")
        sink = ComponentStream()
        key = 1
        parents = self.parents

        if kind not in ("bcc", "2ecc"):
            raise ValueError("unknown kind %r" % kind)

        # orient the queried edge
        if parents.parent(v) == u or parents.parent(u) == v:
            z0 = v if parents.parent(v) == u else u
        else:
            z0 = self._lower_endpoint(u, v)

        if kind == "2ecc":
            zp = parents.parent(z0)
            other = u if z0 == v else v
            if zp == other and self._bridge(zp, z0, work):
                # a bridge is its own one-edge component
                if want_vertices:
                    sink.emit(key, "v", zp)
                    sink.emit(key, "v", z0)
                if want_edges:
                    sink.emit(key, "e", (zp, z0))
                if counters is not None:
                    counters["query_work"] = work[0]
                return sink

        def allowed_up(w):
            if parents.is_root(w):
                return False
            if kind == "bcc":
                return self._p(w)
            return not self._bridge(parents.parent(w), w, work)

        def allowed_down(w, c):
            if kind == "bcc":
                return self._p(c)
            return not self._bridge(w, c, work)

        def emit_vertex(w):
            if want_vertices:
                sink.emit(key, "v", w)

        def emit_lower(w, include_parent):
            if not want_edges:
                return
            cd = self.dicts[w]
            pw = parents.parent(w)
            if pw and include_parent:
                sink.emit(key, "e", (pw, w))
            if cd is not None:
                for s1 in cd.iterate():
                    work[0] += 1
                    s = s1 - 1
                    if not self._is_child_slot(w, s):
                        sink.emit(key, "e", (g.head(w, s), w))

        # climb from z0 to the top of the component, then walk down
        top = z0
        while allowed_up(top):
            work[0] += 1
            top = parents.parent(top)

        if kind == "bcc":
            # top is the unique visited vertex with P false; also output
            # its parent, the component's root, without traversing it
            root_of_comp = parents.parent(top)
            if root_of_comp and want_vertices:
                sink.emit(key, "v", root_of_comp)

        # iterative tree walk from `top`, never crossing disallowed edges
        stack = [top]
        while stack:
            w = stack.pop()
            work[0] += 1
            emit_vertex(w)
            # the parent edge belongs to the component except above `top`
            # in 2ECC mode, where it is a bridge (or absent)
            emit_lower(w, kind == "bcc" or w != top)
            cd = self.dicts[w]
            if cd is not None:
                for s1 in cd.iterate():
                    work[0] += 1
                    s = s1 - 1
                    if self._is_child_slot(w, s):
                        c = g.head(w, s)
                        if allowed_down(w, c):
                            stack.append(c)
        if counters is not None:
            counters["query_work"] = work[0]
        return sink
