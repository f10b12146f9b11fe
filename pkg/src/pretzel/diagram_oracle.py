"""Brute-force ground truth on explicit oriented link diagrams.

A :class:`Diagram` is a list of oriented crossings.  Each crossing records the
edge ids entering and leaving along its under and over strands, plus its sign
(+1 right-handed).  Edges are crossing-free arcs; each id appears once as an
outgoing and once as an incoming slot.  Crossing-free closed curves are counted
in ``loops``.

Nothing here knows about the computation tree or the closed forms: the
Conway polynomial comes from skein resolution, the Jones polynomial from the
Kauffman bracket, the canonical genus from Seifert circles.
"""

from __future__ import annotations

import itertools
import json
import os
import threading
from dataclasses import dataclass, field
from typing import Sequence

from .poly_core import HalfLaurent

ZP = HalfLaurent({2: 1}, "z")


class OracleBudgetError(RuntimeError):
    """Raised when a brute-force evaluation would exceed its configured budget."""


class MalformedDiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Diagram:
    """Oriented crossing list.

    ``crossings[i] = (under_in, under_out, over_in, over_out)``, ``signs[i] = ±1``.
    """

    crossings: tuple
    signs: tuple
    loops: int = 0

    def __post_init__(self):
        if len(self.crossings) != len(self.signs):
            raise MalformedDiagramError("one sign per crossing required")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def writhe(self) -> int:
        return sum(self.signs)

    def validate(self) -> None:
        ins, outs = {}, {}
        for i, (ui, uo, oi, oo) in enumerate(self.crossings):
            for e in (ui, oi):
                if e in ins:
                    raise MalformedDiagramError(f"edge {e} enters twice")
                ins[e] = i
            for e in (uo, oo):
                if e in outs:
                    raise MalformedDiagramError(f"edge {e} leaves twice")
                outs[e] = i
        if set(ins) != set(outs):
            bad = sorted(set(ins) ^ set(outs), key=str)
            raise MalformedDiagramError(f"edges without both ends: {bad}")
        for s in self.signs:
            if s not in (1, -1):
                raise MalformedDiagramError("signs must be +1 or -1")

    # -- PD code ---------------------------------------------------------
    def to_pd(self) -> list[list]:
        """PD quadruples, counterclockwise from the incoming under edge."""
        out = []
        for (ui, uo, oi, oo), s in zip(self.crossings, self.signs):
            out.append([ui, oo, uo, oi] if s > 0 else [ui, oi, uo, oo])
        return out

    def to_json(self) -> str:
        return json.dumps({"pd": self.to_pd(), "signs": list(self.signs), "loops": self.loops})

    @classmethod
    def from_pd(cls, pd: Sequence[Sequence[int]], signs: Sequence[int], loops: int = 0) -> "Diagram":
        crossings = []
        for (a, b, c, d), s in zip(pd, signs):
            if s > 0:
                crossings.append((a, c, d, b))
            else:
                crossings.append((a, c, b, d))
        diag = cls(tuple(crossings), tuple(int(s) for s in signs), loops)
        diag.validate()
        return diag

    @classmethod
    def from_json(cls, text: str) -> "Diagram":
        data = json.loads(text)
        return cls.from_pd(data["pd"], data["signs"], data.get("loops", 0))


# ---------------------------------------------------------------------------
# Building diagrams from crossing tiles
# ---------------------------------------------------------------------------

_POS = {"UL": (-1, 1), "UR": (1, 1), "LL": (-1, -1), "LR": (1, -1)}
_THROUGH = {"UL": "LR", "LR": "UL", "UR": "LL", "LL": "UR"}
_STRAND = {"UL": "\\", "LR": "\\", "UR": "/", "LL": "/"}


class _Layout:
    """Planar tiles: crossings with four corner ports, joined by arcs.

    Arc endpoints are crossing ports ``("x", c, port)`` or waypoints
    ``("w", name)``; waypoints have exactly two arcs.
    """

    def __init__(self):
        self.over: list[str] = []  # "/" or "\\" per crossing
        self.arcs: list[tuple] = []
        self.incident: dict = {}

    def add_crossing(self, over: str) -> int:
        self.over.append(over)
        return len(self.over) - 1

    def join(self, a, b) -> None:
        idx = len(self.arcs)
        self.arcs.append((a, b))
        self.incident.setdefault(a, []).append(idx)
        self.incident.setdefault(b, []).append(idx)

    def _other(self, arc_id, node):
        a, b = self.arcs[arc_id]
        return b if a == node else a

    def trace(self):
        """Return components as cyclic visit lists.

        Each component is ``(visits, waypoints)`` where ``visits`` is a list of
        ``(crossing, in_port, out_port)`` and ``waypoints[k]`` lists the waypoints
        crossed after visit ``k``.  Crossing-free loops have ``visits == []``.
        """
        for c in range(len(self.over)):
            for port in _POS:
                if len(self.incident.get(("x", c, port), [])) != 1:
                    raise MalformedDiagramError(f"port {c}:{port} needs exactly one arc")
        seen_ports = set()
        seen_arcs = set()
        comps = []
        for c in range(len(self.over)):
            for start_port in ("UL", "UR", "LL", "LR"):
                start = ("x", c, start_port)
                if start in seen_ports:
                    continue
                # start_port is treated as an out-port
                visits, wps = [], []
                node = start
                while True:
                    seen_ports.add(node)
                    arc = self.incident[node][0]
                    seen_arcs.add(arc)
                    cur = self._other(arc, node)
                    chain = []
                    while cur[0] == "w":
                        chain.append(cur[1])
                        nxt_arcs = [a for a in self.incident[cur] if a != arc]
                        if len(self.incident[cur]) != 2:
                            raise MalformedDiagramError(f"waypoint {cur[1]} is not degree 2")
                        arc = nxt_arcs[0] if nxt_arcs else arc
                        seen_arcs.add(arc)
                        cur = self._other(arc, cur)
                    _, cc, in_port = cur
                    seen_ports.add(cur)
                    out_port = _THROUGH[in_port]
                    wps.append(chain)
                    visits.append((cc, in_port, out_port))
                    node = ("x", cc, out_port)
                    if node == start:
                        break
                # rotate so visits[k] is followed by wps[k]
                wps = wps[1:] + wps[:1]
                comps.append((visits, wps))
        # free loops made only of waypoints
        for idx, (a, b) in enumerate(self.arcs):
            if idx in seen_arcs:
                continue
            chain = []
            arc, node = idx, a
            while arc not in seen_arcs:
                seen_arcs.add(arc)
                nxt = self._other(arc, node)
                chain.append(nxt[1])
                others = [x for x in self.incident[nxt] if x != arc]
                arc = others[0] if others else arc
                node = nxt
            comps.append(([], [chain]))
        return comps


def _reverse_component(comp):
    visits, wps = comp
    if not visits:
        return [], [list(reversed(wps[0]))]
    n = len(visits)
    # visit k is followed by wps[k]; reversed order: visit k preceded by wps[k-1]
    rv = [(c, o, i) for (c, i, o) in reversed(visits)]
    rw = [list(reversed(wps[(n - 2 - j) % n])) for j in range(n)]
    return rv, rw


def _crossing_sign(over_dir, under_dir) -> int:
    rot = (-over_dir[1], over_dir[0])
    return 1 if rot == under_dir else -1


def _assemble(layout: _Layout, comps, flips):
    """Assign edge ids along oriented components; return (Diagram, visits, wps)."""
    oriented = [(_reverse_component(c) if f else c) for c, f in zip(comps, flips)]
    nx = len(layout.over)
    slots = [dict() for _ in range(nx)]  # strand -> {"in": (port, edge), "out": ...}
    edge = 0
    loops = 0
    for visits, _ in oriented:
        if not visits:
            loops += 1
            continue
        n = len(visits)
        first_edge = edge
        for k, (c, in_port, out_port) in enumerate(visits):
            in_edge = first_edge + (k - 1) % n
            out_edge = first_edge + k
            slots[c][_STRAND[in_port]] = (in_port, out_port, in_edge, out_edge)
        edge += n
    crossings, signs = [], []
    for c in range(nx):
        over_strand = layout.over[c]
        under_strand = "\\" if over_strand == "/" else "/"
        o_in, o_out, oi, oo = slots[c][over_strand]
        u_in, u_out, ui, uo = slots[c][under_strand]
        odir = tuple(b - a for a, b in zip(_POS[o_in], _POS[o_out]))
        udir = tuple(b - a for a, b in zip(_POS[u_in], _POS[u_out]))
        odir = (odir[0] // 2, odir[1] // 2)
        udir = (udir[0] // 2, udir[1] // 2)
        crossings.append((ui, uo, oi, oo))
        signs.append(_crossing_sign(odir, udir))
    return Diagram(tuple(crossings), tuple(signs), loops), oriented


# Positive box entries use "/" over "\": with both strands running upward this
# makes a right-handed (+1) crossing.
POSITIVE_OVER = "/"


@dataclass(frozen=True)
class PretzelDiagram:
    """A built pretzel diagram plus the per-box direction marks it realizes."""

    p: tuple
    flips: tuple
    diagram: Diagram
    eps: tuple
    n_components: int
    component_of_box: tuple = field(default=())


def _pretzel_layout(p: Sequence[int]):
    lay = _Layout()
    n = len(p)
    boxes = []
    for i, v in enumerate(p):
        over = POSITIVE_OVER if v > 0 else ("\\" if POSITIVE_OVER == "/" else "/")
        cs = [lay.add_crossing(over) for _ in range(abs(v))]
        boxes.append(cs)
        TL, TR, BL, BR = (("w", (i, s)) for s in ("TL", "TR", "BL", "BR"))
        if not cs:
            lay.join(TL, BL)
            lay.join(TR, BR)
            continue
        lay.join(TL, ("x", cs[0], "UL"))
        lay.join(TR, ("x", cs[0], "UR"))
        for a, b in zip(cs, cs[1:]):
            lay.join(("x", a, "LL"), ("x", b, "UL"))
            lay.join(("x", a, "LR"), ("x", b, "UR"))
        lay.join(("x", cs[-1], "LL"), BL)
        lay.join(("x", cs[-1], "LR"), BR)
    for i in range(n - 1):
        lay.join(("w", (i, "TR")), ("w", (i + 1, "TL")))
        lay.join(("w", (i, "BR")), ("w", (i + 1, "BL")))
    lay.join(("w", (0, "TL")), ("w", (n - 1, "TR")))
    lay.join(("w", (0, "BL")), ("w", (n - 1, "BR")))
    return lay, boxes


_TRACE_CACHE: dict = {}


def _pretzel_components(p: tuple):
    hit = _TRACE_CACHE.get(p)
    if hit is None:
        lay, boxes = _pretzel_layout(p)
        hit = (lay, boxes, lay.trace())
        if len(_TRACE_CACHE) < 100_000:
            _TRACE_CACHE[p] = hit
    return hit


def count_components(p: Sequence[int]) -> int:
    """Number of closed strand cycles in the standard diagram of L(p)."""
    if len(p) == 0:
        raise ValueError("a pretzel vector needs at least one entry")
    return len(_pretzel_components(tuple(p))[2])


def orientation_classes(p: Sequence[int]):
    """Component flip vectors with the first component fixed: 2^(mu-1) of them."""
    mu = count_components(p)
    for rest in itertools.product((0, 1), repeat=mu - 1):
        yield (0,) + rest


def build_diagram(p: Sequence[int], flips: Sequence[int] | None = None) -> PretzelDiagram:
    """Standard diagram of L(p_1, ..., p_n) oriented by per-component flips."""
    p = tuple(int(x) for x in p)
    if not p:
        raise ValueError("a pretzel vector needs at least one entry")
    lay, boxes, comps = _pretzel_components(p)
    if flips is None:
        flips = (0,) * len(comps)
    flips = tuple(int(bool(f)) for f in flips)
    if len(flips) != len(comps):
        raise ValueError(f"expected {len(comps)} orientation flips, got {len(flips)}")
    diag, oriented = _assemble(lay, comps, flips)

    # direction marks: compare the vertical motion of the two strands in each box
    vertical = {}  # (box, side) -> +1 up / -1 down, side in {"L","R"} for empty boxes
    first_cross_dirs = {}
    comp_of_box = [set() for _ in p]
    box_of_cross = {}
    for i, cs in enumerate(boxes):
        for c in cs:
            box_of_cross[c] = i
    for ci, (visits, wps) in enumerate(oriented):
        for (c, i_port, o_port) in visits:
            b = box_of_cross[c]
            comp_of_box[b].add(ci)
            if c == boxes[b][0]:
                first_cross_dirs.setdefault(b, []).append(_POS[o_port][1] - _POS[i_port][1])
        for chain in wps:
            if not visits:
                chain = chain + chain[:1]  # a crossing-free loop is cyclic
            for a, b in zip(chain, chain[1:]):
                (ia, sa), (ib, sb) = a, b
                if ia == ib and not boxes[ia] and sa[1] == sb[1]:
                    vertical[(ia, sa[1])] = 1 if sa[0] == "B" else -1
                    comp_of_box[ia].add(ci)
    eps = []
    for i, cs in enumerate(boxes):
        if cs:
            d1, d2 = first_cross_dirs[i]
            eps.append(1 if (d1 > 0) == (d2 > 0) else -1)
        else:
            eps.append(1 if vertical[(i, "L")] == vertical[(i, "R")] else -1)
    return PretzelDiagram(p, flips, diag, tuple(eps), len(comps),
                          tuple(tuple(sorted(s)) for s in comp_of_box))


def build_braid_closure(strands: int, word: Sequence[int]) -> Diagram:
    """Closure of a braid word (``k`` = sigma_k, ``-k`` its inverse), strands oriented upward."""
    lay = _Layout()
    bottom = [("w", ("B", j)) for j in range(strands)]
    current = list(bottom)
    for g in word:
        k = abs(g) - 1
        if not 0 <= k < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        c = lay.add_crossing("/" if g > 0 else "\\")
        lay.join(current[k], ("x", c, "LL"))
        lay.join(current[k + 1], ("x", c, "LR"))
        current[k] = ("x", c, "UL")
        current[k + 1] = ("x", c, "UR")
    for j in range(strands):
        top = ("w", ("T", j))
        lay.join(current[j], top)
        lay.join(top, bottom[j])
    comps = lay.trace()
    flips = []
    for visits, _ in comps:
        if not visits:
            flips.append(0)
            continue
        _, i_port, o_port = visits[0]
        flips.append(0 if _POS[o_port][1] > _POS[i_port][1] else 1)
    diag, _ = _assemble(lay, comps, flips)
    return diag


# ---------------------------------------------------------------------------
# Structural helpers
# ---------------------------------------------------------------------------

def _successor(crossings):
    nxt = {}
    for ui, uo, oi, oo in crossings:
        nxt[ui] = uo
        nxt[oi] = oo
    return nxt


def trace_components(d: Diagram):
    """Return ``(count, labels)``; labels maps each edge id to its component index."""
    d.validate()
    nxt = _successor(d.crossings)
    labels = {}
    count = 0
    for e in sorted(nxt, key=str):
        if e in labels:
            continue
        cur = e
        while cur not in labels:
            labels[cur] = count
            cur = nxt[cur]
        if cur != e:
            raise MalformedDiagramError("edge successor map is not a permutation")
        count += 1
    return count + d.loops, labels


def _is_connected(crossings) -> bool:
    n = len(crossings)
    if n <= 1:
        return True
    where = {}
    for i, quad in enumerate(crossings):
        for e in quad:
            where.setdefault(e, []).append(i)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for e in crossings[i]:
            for j in where[e]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return len(seen) == n


def _remove(crossings, signs, loops, removed, joins):
    """Delete crossings and identify edges according to ``joins``."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = set()
    for idx in removed:
        touched.update(crossings[idx])
    for a, b in joins:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    keep = [i for i in range(len(crossings)) if i not in removed]
    new_c, new_s = [], []
    referenced = set()
    for i in keep:
        quad = tuple(find(e) if e in touched else e for e in crossings[i])
        new_c.append(quad)
        new_s.append(signs[i])
        referenced.update(quad)
    roots = {find(e) for e in touched}
    loops += sum(1 for r in roots if r not in referenced)
    return tuple(new_c), tuple(new_s), loops


def smooth(d: Diagram, i: int) -> Diagram:
    ui, uo, oi, oo = d.crossings[i]
    c, s, l = _remove(d.crossings, d.signs, d.loops, {i}, [(ui, oo), (oi, uo)])
    return Diagram(c, s, l)


def switch(d: Diagram, i: int) -> Diagram:
    ui, uo, oi, oo = d.crossings[i]
    cs = list(d.crossings)
    ss = list(d.signs)
    cs[i] = (oi, oo, ui, uo)
    ss[i] = -ss[i]
    return Diagram(tuple(cs), tuple(ss), d.loops)


def _straighten(d: Diagram, idxs) -> Diagram:
    joins = []
    for i in idxs:
        ui, uo, oi, oo = d.crossings[i]
        joins += [(ui, uo), (oi, oo)]
    c, s, l = _remove(d.crossings, d.signs, d.loops, set(idxs), joins)
    return Diagram(c, s, l)


def _ends(crossings):
    """tail[e] = (crossing, 'u'|'o'), head[e] likewise."""
    tail, head = {}, {}
    for i, (ui, uo, oi, oo) in enumerate(crossings):
        head[ui] = (i, "u")
        head[oi] = (i, "o")
        tail[uo] = (i, "u")
        tail[oo] = (i, "o")
    return tail, head


def _two_cycles(crossings):
    """Yield ``(c1, c2, removable)`` for pairs joined by two edges on distinct strands.

    ``removable`` is True when one edge is over at both ends (a Reidemeister II pair).
    """
    tail, head = _ends(crossings)
    links = {}
    for e, (c1, r1) in tail.items():
        c2, r2 = head[e]
        if c1 == c2:
            continue
        key = (min(c1, c2), max(c1, c2))
        role_lo = r1 if c1 < c2 else r2
        role_hi = r2 if c1 < c2 else r1
        links.setdefault(key, []).append((role_lo, role_hi))
    for (a, b), roles in sorted(links.items()):
        for (ra, rb), (sa, sb) in itertools.combinations(roles, 2):
            if ra != sa and rb != sb:
                yield a, b, ra == rb


def simplify(d: Diagram) -> Diagram:
    """Apply Reidemeister I and II removals until none applies."""
    while True:
        changed = False
        for i, (ui, uo, oi, oo) in enumerate(d.crossings):
            if uo == oi or oo == ui:
                d = _straighten(d, [i])
                changed = True
                break
        if changed:
            continue
        for a, b, removable in _two_cycles(d.crossings):
            if removable:
                d = _straighten(d, [a, b])
                changed = True
                break
        if not changed:
            return d


def canonical_key(d: Diagram):
    """Relabeling-invariant serialization of a connected diagram."""
    cr = d.crossings
    if not cr:
        return ((), d.loops)
    nxt = _successor(cr)
    tail, head = _ends(cr)
    in_edges = {}
    for i, (ui, uo, oi, oo) in enumerate(cr):
        in_edges[i] = (ui, oi)
    best = None
    for start in nxt:
        lab = {}
        order = []

        def walk(e):
            while e not in lab:
                lab[e] = len(lab)
                order.append(e)
                e = nxt[e]

        walk(start)
        pos = 0
        while len(lab) < len(nxt):
            while True:
                e = order[pos]
                c = head[e][0]
                fresh = [x for x in in_edges[c] if x not in lab]
                if fresh:
                    walk(fresh[0])
                    break
                pos += 1
        enc = tuple(sorted(
            (lab[ui], lab[uo], lab[oi], lab[oo], s) for (ui, uo, oi, oo), s in zip(cr, d.signs)
        ))
        if best is None or enc < best:
            best = enc
    return (best, d.loops)


# ---------------------------------------------------------------------------
# Conway polynomial by skein resolution
# ---------------------------------------------------------------------------

class SkeinEvaluator:
    """Memoized skein-tree evaluator for the Conway polynomial.

    At every node the diagram is reduced by Reidemeister I/II removals.  If two
    crossings form an alternating bigon, the skein relation is applied at one of
    them, so the switched child loses two crossings and the smoothed child one.
    Otherwise a crossing that is bad for the descending order (basepoint = the
    smallest edge id of each component) is resolved; a diagram with no bad
    crossing is a stacked unlink.  Every branch lowers (crossings, bad crossings)
    lexicographically, so the recursion halts on every input.
    """

    def __init__(self, max_crossings: int = 60, max_nodes: int = 5_000_000, use_bigons: bool = True):
        self.max_crossings = max_crossings
        self.max_nodes = max_nodes
        self.use_bigons = use_bigons
        self.memo: dict = {}
        self.nodes = 0
        self._lock = threading.Lock()

    def __call__(self, d: Diagram) -> HalfLaurent:
        if d.n_crossings > self.max_crossings:
            raise OracleBudgetError(
                f"{d.n_crossings} crossings exceeds the skein budget of {self.max_crossings}")
        d.validate()
        self.nodes = 0
        return self._eval(d)

    def _eval(self, d: Diagram) -> HalfLaurent:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise OracleBudgetError(f"skein tree exceeded {self.max_nodes} nodes")
        d = simplify(d) if self.use_bigons else _simplify_r1(d)
        if not d.crossings:
            return HalfLaurent({0: 1} if d.loops == 1 else {}, "z")
        if d.loops or not _is_connected(d.crossings):
            return HalfLaurent({}, "z")
        key = canonical_key(d)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        pivot = None
        if self.use_bigons:
            for a, _b, _ in _two_cycles(d.crossings):
                pivot = a
                break
        if pivot is None:
            pivot = _first_bad_crossing(d)
            if pivot is None:
                mu, _ = trace_components(d)
                val = HalfLaurent({0: 1} if mu == 1 else {}, "z")
                with self._lock:
                    self.memo[key] = val
                return val
        sign = d.signs[pivot]
        val = self._eval(switch(d, pivot)) + ZP * self._eval(smooth(d, pivot)) * sign
        with self._lock:
            self.memo[key] = val
        return val


def _simplify_r1(d: Diagram) -> Diagram:
    while True:
        for i, (ui, uo, oi, oo) in enumerate(d.crossings):
            if uo == oi or oo == ui:
                d = _straighten(d, [i])
                break
        else:
            return d


def _first_bad_crossing(d: Diagram):
    """First crossing met from below in the descending traversal, or None."""
    nxt = _successor(d.crossings)
    role = {}
    for i, (ui, uo, oi, oo) in enumerate(d.crossings):
        role[ui] = (i, "u")
        role[oi] = (i, "o")
    comps = []
    seen = set()
    for e in sorted(nxt, key=lambda x: (str(type(x)), x)):
        if e in seen:
            continue
        cyc = []
        cur = e
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = nxt[cur]
        comps.append(cyc)  # each cycle starts at its smallest edge id
    met = set()
    for cyc in comps:
        for e in cyc:
            c, r = role[e]
            if c in met:
                continue
            met.add(c)
            if r == "u":
                return c
    return None


_default_skein = SkeinEvaluator()


def conway_skein(d: Diagram, evaluator: SkeinEvaluator | None = None) -> HalfLaurent:
    """Conway polynomial of an oriented diagram by skein resolution."""
    return (evaluator or _default_skein)(d)


# ---------------------------------------------------------------------------
# Jones polynomial via the Kauffman bracket
# ---------------------------------------------------------------------------

DEFAULT_JONES_BUDGET = int(os.environ.get("PRETZEL_JONES_BUDGET", "24"))
_LOOP = HalfLaurent({4: -1, -4: -1}, "A")  # -A^2 - A^-2 (doubled exponents)


def _crossing_order(pd):
    """Greedy order that keeps the open boundary small."""
    remaining = list(range(len(pd)))
    order = []
    open_edges: set = set()
    while remaining:
        best = max(remaining, key=lambda i: (sum(1 for e in pd[i] if e in open_edges), -i))
        remaining.remove(best)
        order.append(best)
        for e in pd[best]:
            if e in open_edges:
                open_edges.discard(e)
            else:
                open_edges.add(e)
    return order


def _add_pair(match: dict, x, y):
    """Add an arc x-y to a partial matching; return (new matching, closed loops)."""
    m = dict(match)
    if x == y:
        return m, 1
    ex, ey = m.pop(x, None), m.pop(y, None)
    if ex is not None:
        m.pop(ex, None)
    if ey is not None:
        m.pop(ey, None)
    if ex is None and ey is None:
        m[x] = y
        m[y] = x
        return m, 0
    if ex is not None and ey is None:
        if ex == y:
            return m, 1
        m[ex] = y
        m[y] = ex
        return m, 0
    if ey is not None and ex is None:
        m[ey] = x
        m[x] = ey
        return m, 0
    if ex == y:  # x and y were already joined to each other
        return m, 1
    m[ex] = ey
    m[ey] = ex
    return m, 0


def kauffman_bracket(d: Diagram, budget: int | None = None) -> HalfLaurent:
    """Normalized bracket (unknot = 1) in the variable A, exponents doubled."""
    budget = DEFAULT_JONES_BUDGET if budget is None else budget
    if d.n_crossings > budget:
        raise OracleBudgetError(
            f"{d.n_crossings} crossings exceeds the bracket budget of {budget}")
    pd = d.to_pd()
    states = {frozenset(): HalfLaurent({0: 1}, "A")}
    for i in _crossing_order(pd):
        a, b, c, e = pd[i]
        new: dict = {}
        for key, poly in states.items():
            match = {}
            for u, v in key:
                match[u] = v
                match[v] = u
            for weight, pairs in ((2, ((a, b), (c, e))), (-2, ((a, e), (b, c)))):
                m, loops = match, 0
                for x, y in pairs:
                    m, k = _add_pair(m, x, y)
                    loops += k
                val = poly.shift(weight) * (_LOOP ** loops if loops else 1)
                nk = frozenset(tuple(sorted((u, v), key=str)) for u, v in m.items())
                new[nk] = new.get(nk, HalfLaurent({}, "A")) + val
        states = {k: v for k, v in new.items() if not v.is_zero()}
    total = sum(states.values(), HalfLaurent({}, "A"))
    total = total * (_LOOP ** d.loops)
    if d.n_crossings == 0:
        return total.divexact(_LOOP)
    return total.divexact(_LOOP)


def kauffman_jones(d: Diagram, budget: int | None = None) -> HalfLaurent:
    """Jones polynomial in t from the bracket with writhe normalization (A = t^{-1/4})."""
    br = kauffman_bracket(d, budget)
    w = d.writhe()
    # (-A^3)^{-w}
    factor = HalfLaurent({-6 * w: (-1) ** (w % 2)}, "A")
    f = br * factor
    out = {}
    for k2, c in f.terms.items():
        # A^{k2/2} = t^{-k2/8}; doubled t-exponent is -k2/4
        if k2 % 4:
            raise ArithmeticError("bracket produced a non half-integer power of t")
        out[-k2 // 4] = c
    return HalfLaurent(out, "t")


# ---------------------------------------------------------------------------
# Seifert circles and canonical genus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeifertData:
    V: int
    E: int
    F: int
    genus: object  # int, or a tuple of per-piece values for disconnected diagrams

    @property
    def canonical_genus_of_diagram(self):
        return self.genus


def seifert_circles(d: Diagram) -> int:
    smooth_next = {}
    for ui, uo, oi, oo in d.crossings:
        smooth_next[ui] = oo
        smooth_next[oi] = uo
    seen = set()
    count = 0
    for e in smooth_next:
        if e in seen:
            continue
        count += 1
        while e not in seen:
            seen.add(e)
            e = smooth_next[e]
    return count + d.loops


def seifert_data(d: Diagram) -> SeifertData:
    """Seifert circles V, crossings E, components F and (2 - V + E - F)/2."""
    d.validate()
    V = seifert_circles(d)
    E = d.n_crossings
    F, _ = trace_components(d)
    if (d.crossings and not d.loops and _is_connected(d.crossings)) or (not d.crossings and d.loops <= 1):
        chi2 = 2 - V + E - F
        if chi2 % 2:
            raise MalformedDiagramError("odd 2 - V + E - F on a connected diagram")
        return SeifertData(V, E, F, chi2 // 2)
    pieces = _split_pieces(d)
    return SeifertData(V, E, F, tuple(seifert_data(p).genus for p in pieces))


def _split_pieces(d: Diagram):
    n = len(d.crossings)
    where = {}
    for i, quad in enumerate(d.crossings):
        for e in quad:
            where.setdefault(e, []).append(i)
    seen = set()
    pieces = []
    for s in range(n):
        if s in seen:
            continue
        grp = {s}
        stack = [s]
        while stack:
            i = stack.pop()
            for e in d.crossings[i]:
                for j in where[e]:
                    if j not in grp:
                        grp.add(j)
                        stack.append(j)
        seen |= grp
        idx = sorted(grp)
        pieces.append(Diagram(tuple(d.crossings[i] for i in idx), tuple(d.signs[i] for i in idx)))
    pieces.extend(Diagram((), (), 1) for _ in range(d.loops))
    return pieces
