"""Density-dependent depth-first search with the turn-value stack.

The traversal keeps, for each internal vertex v of the gray path with
degree d >= 3, one stack entry of ceil(log2(d-1)) bits: the number of
edges already explored with v as the current vertex.  Knowing the current
vertex, the slot of its gray-path predecessor and that entry, popping
recovers the predecessor's scan state, so the stack never exceeds
L_{-1}(G) bits (plain variant) or (4/5)m + O(1) bits (grouped variant).

Root order is 1..n (or caller-supplied) and edges are explored in
adjacency-array order, which makes the forest lexicographic.  In directed
mode the merged incidence array is scanned the same way but incoming
slots are skipped silently (they still advance the turn counter).

Event vocabulary: preprocess, postprocess, explore_tree_edge,
retreat_tree_edge, handle_back_edge.  The parent edge of v resurfaces as
a final handle_back_edge(v, parent, deg(v)-1) in undirected mode; the
turn value is passed so callers can recognize and skip it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .bits import BitStack, GroupedStack, ceil_log2

PRE, POST, TREE, RETREAT, BACK = range(5)

_SH = 20
_FIELD = (1 << _SH) - 1

# register inventory of the traversal loop (criterion: at most 64 words)
REGISTER_COUNT = 24


def encode_event(kind, a, b=0, t=0):
    return (((kind << _SH | a) << _SH | b) << _SH) | t


def decode_event(e):
    t = e & _FIELD
    e >>= _SH
    b = e & _FIELD
    e >>= _SH
    a = e & _FIELD
    return e >> _SH, a, b, t


def format_event(e, g=None, parents=None):
    kind, a, b, t = decode_event(e)
    if kind == PRE:
        return "pre %d" % a
    if kind == POST:
        return "post %d" % a
    if kind == TREE:
        return "tree %d %d" % (a, b)
    if kind == RETREAT:
        return "retreat %d %d" % (a, b)
    suffix = ""
    if g is not None and parents is not None:
        if parents[a] == b and t == g.deg(a) - 1 and not g.directed:
            suffix = " (parent)"
    return "back %d %d%s" % (a, b, suffix)


@dataclass
class DfsEvents:
    """User procedures driven by every traversal variant.  Any field may
    be None.  handle_back_edge receives (v, w, turn)."""

    preprocess: Optional[Callable] = None
    postprocess: Optional[Callable] = None
    explore_tree_edge: Optional[Callable] = None
    retreat_tree_edge: Optional[Callable] = None
    handle_back_edge: Optional[Callable] = None


def run_dfs(
    g,
    events=None,
    *,
    variant="plain",
    record=None,
    reverse=False,
    white_store=None,
    roots=None,
    meter=None,
    counters=None,
    on_skip=None,
):
    """Run the traversal.  record, if given, is a list receiving encoded
    events (fast path).  white_store replaces the internal white array
    (duck type: is_white(v), set_nonwhite(v)).  roots supplies candidate
    roots lazily (default 1..n).  on_skip(v, w, turn) fires for
    direction-filtered slots in directed mode."""
    n = g.n
    off = g.off
    heads = g.heads
    mates = g.mates
    outdegs = g.outdegs
    directed = g.directed
    if reverse and not directed:
        raise ValueError("reverse traversal requires a directed graph")

    if variant == "plain":
        stack = BitStack(meter, "turn_stack")
    elif variant == "grouped":
        stack = GroupedStack(meter, "turn_stack")
    else:
        raise ValueError("unknown variant %r" % variant)

    internal = white_store is None
    if internal:
        ww = [0] * ((n + 63) >> 6)  # bit set = discovered
        is_white = set_nonwhite = None
    else:
        is_white = white_store.is_white
        set_nonwhite = white_store.set_nonwhite

    if roots is None:
        roots = range(1, n + 1)

    if meter is not None:
        meter.set_bits("white", n if internal else 0)
        meter.set_bits("registers", REGISTER_COUNT * ceil_log2(n + 2))

    ev = events
    pre_cb = ev.preprocess if ev else None
    post_cb = ev.postprocess if ev else None
    tree_cb = ev.explore_tree_edge if ev else None
    retreat_cb = ev.retreat_tree_edge if ev else None
    back_cb = ev.handle_back_edge if ev else None
    rec = record.append if record is not None else None

    slot_insp = 0

    for v0 in roots:
        if internal:
            i = v0 - 1
            if (ww[i >> 6] >> (i & 63)) & 1:
                continue
            ww[i >> 6] |= 1 << (i & 63)
        else:
            if not is_white(v0):
                continue
            set_nonwhite(v0)
        root = v0
        v = v0
        k = -1
        l = -1
        l0 = -1
        if rec is not None:
            rec(v << (2 * _SH))  # PRE
        if pre_cb is not None:
            pre_cb(v)
        base = off[v]
        dv = off[v + 1] - base
        odv = outdegs[v]
        while True:
            l += 1
            if l < dv:
                slot_insp += 1
                s = k + l + 1
                if s >= dv:
                    s -= dv
                w = heads[base + s]
                if directed and (s < odv) == reverse:
                    if on_skip is not None:
                        on_skip(v, w, l)
                    continue
                if internal:
                    iw = w - 1
                    white_w = not (ww[iw >> 6] >> (iw & 63)) & 1
                else:
                    white_w = is_white(w)
                if white_w:
                    if rec is not None:
                        rec(((TREE << _SH | v) << _SH | w) << _SH)
                    if tree_cb is not None:
                        tree_cb(v, w)
                    if v == root:
                        l0 = l
                    elif dv > 2:
                        stack.push(l, dv)
                    k = mates[base + s]
                    l = -1
                    v = w
                    if internal:
                        ww[iw >> 6] |= 1 << (iw & 63)
                    else:
                        set_nonwhite(w)
                    if rec is not None:
                        rec(v << (2 * _SH))  # PRE
                    if pre_cb is not None:
                        pre_cb(v)
                    base = off[v]
                    dv = off[v + 1] - base
                    odv = outdegs[v]
                else:
                    if rec is not None:
                        rec((((BACK << _SH | v) << _SH | w) << _SH) | l)
                    if back_cb is not None:
                        back_cb(v, w, l)
            else:
                if v == root:
                    break
                u = heads[base + k]
                du = off[u + 1] - off[u]
                if u == root:
                    l = l0
                elif du <= 2:
                    l = 0
                else:
                    l = stack.pop(du)
                k = mates[base + k] - (l + 1)
                if k < 0:
                    k += du
                if rec is not None:
                    rec((POST << _SH | v) << (2 * _SH))
                if post_cb is not None:
                    post_cb(v)
                if rec is not None:
                    rec(((RETREAT << _SH | u) << _SH | v) << _SH)
                if retreat_cb is not None:
                    retreat_cb(u, v)
                v = u
                base = off[v]
                dv = du
                odv = outdegs[v]
        if rec is not None:
            rec((POST << _SH | v) << (2 * _SH))
        if post_cb is not None:
            post_cb(v)

    if counters is not None:
        counters["slot_inspections"] = counters.get("slot_inspections", 0) + slot_insp


def dfs(g, events, variant="plain", *, meter=None, counters=None):
    """Traverse g, driving the user procedures in events."""
    run_dfs(g, events, variant=variant, meter=meter, counters=counters)


def collect_events(g, variant="plain", *, meter=None, counters=None):
    """Return the traversal's encoded event list (comparison fast path)."""
    record = []
    run_dfs(g, None, variant=variant, record=record, meter=meter, counters=counters)
    return record


def dfs_forest_parents(g, variant="plain"):
    """parent[v] = u iff explore_tree_edge(u, v) fired; 0 for roots."""
    parents = [0] * (g.n + 1)

    def tree(u, v):
        parents[v] = u

    run_dfs(g, DfsEvents(explore_tree_edge=tree), variant=variant)
    return parents
