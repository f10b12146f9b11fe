"""Conway polynomials of pretzel links: computation tree and closed forms.

A node of the computation tree is a tuple of ``(p_i, eps_i)`` pairs.  ``eps_i = +1``
means both strands run through box ``i`` in the same direction, ``-1`` opposite.
Crossing signs follow the diagram oracle: a same-direction box with ``p > 0``
has positive crossings, an opposite-direction box with ``p > 0`` negative ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .pretzel_model import OrientedPretzel, PretzelSpec, as_spec, parity_profile, realize, sign
from .poly_core import HalfLaurent

Z = HalfLaurent({2: 1}, "z")
ONE = HalfLaurent({0: 1}, "z")
ZERO = HalfLaurent({}, "z")


class ShapeError(ValueError):
    """The input does not have the shape a closed-form formula covers."""


@lru_cache(maxsize=None)
def conway_torus2(n: int) -> HalfLaurent:
    """Conway polynomial of the closed 2-braid sigma_1^n (strands parallel)."""
    if n == 0:
        return ZERO
    if n == 1 or n == -1:
        return ONE
    if n == 2:
        return Z
    if n == -2:
        return -Z
    if n > 0:
        return Z * conway_torus2(n - 1) + conway_torus2(n - 2)
    return conway_torus2(n + 2) - Z * conway_torus2(n + 1)


def box_closure(p: int, eps: int) -> HalfLaurent:
    """Conway polynomial of the box closed off by itself, i.e. T(2, p) as oriented in the box."""
    if eps == 1:
        return conway_torus2(p)
    if p % 2:
        raise ShapeError("an odd box cannot carry opposite strands when closed alone")
    return Z * (-(p // 2))


def horizontal_leaf(m: int, eps: int) -> HalfLaurent:
    """Value of a vector whose entries are all +-1, with ``m`` the sum of entries.

    The boxes then form one horizontal 2-braid.  Opposite-direction boxes make
    its strands parallel (closed braid with |m| crossings of sign -sign(m)).
    Same-direction boxes make them antiparallel: a knot when m is odd, otherwise
    two components with linking number m/2.
    """
    if eps == -1:
        return conway_torus2(-m)
    if m % 2:
        return conway_torus2(m)
    return Z * (m // 2)


# ---------------------------------------------------------------------------
# Computation tree
# ---------------------------------------------------------------------------

def _leaf(vec: tuple):
    """Leaf value, or None if the vector still needs expanding."""
    if not vec:
        return ZERO
    if len(vec) == 1:
        return ONE
    zeros = [i for i, (p, _) in enumerate(vec) if p == 0]
    if len(zeros) >= 2:
        return ZERO
    if any(abs(p) >= 2 for p, _ in vec):
        return None
    if len(zeros) == 1:
        out = ONE
        for j, (p, e) in enumerate(vec):
            if j != zeros[0]:
                out = out * box_closure(p, e)
        return out
    epss = {e for _, e in vec}
    if len(epss) != 1:
        raise ShapeError(f"mixed directions in a leaf vector {vec}")
    return horizontal_leaf(sum(p for p, _ in vec), epss.pop())


def reduce_opposite_box(vec: Sequence, i: int):
    """Eliminate an opposite-direction even box.

    Returns ``(term, weight, child)``: the value equals
    ``term + weight * value(child)``, where ``term`` is the product of the other
    boxes' closures and ``child`` is the vector with box ``i`` deleted.
    """
    vec = tuple((int(p), int(e)) for p, e in vec)
    p, e = vec[i]
    if e != -1 or p % 2:
        raise ShapeError("reduce_opposite_box needs an even box with opposite strands")
    term = ONE
    for j, (q, f) in enumerate(vec):
        if j != i:
            term = term * box_closure(q, f)
    weight = Z * (-(p // 2))
    return term, weight, vec[:i] + vec[i + 1:]


@dataclass
class TreeNode:
    vector: tuple
    weight: HalfLaurent
    children: list = field(default_factory=list)
    value: HalfLaurent | None = None

    def to_dict(self) -> dict:
        return {
            "vector": [[p, e] for p, e in self.vector],
            "weight": str(self.weight),
            "value": None if self.value is None else str(self.value),
            "children": [c.to_dict() for c in self.children],
        }


def _expand(vec: tuple):
    """One expansion step: list of (weight, child) or None for a leaf.

    Opposite even boxes go first, then the leftmost entry with |p| >= 2.
    """
    for i, (p, e) in enumerate(vec):
        if e == -1 and p % 2 == 0 and p != 0 and len(vec) > 1:
            term, weight, child = reduce_opposite_box(vec, i)
            zeroed = vec[:i] + ((0, -1),) + vec[i + 1:]
            return [(ONE, zeroed), (weight, child)]
    for i, (p, e) in enumerate(vec):
        if abs(p) >= 2:
            s = sign(p)
            if e == 1:
                return [(ONE, vec[:i] + ((p - 2 * s, e),) + vec[i + 1:]),
                        (Z * s, vec[:i] + ((p - s, e),) + vec[i + 1:])]
            return [(ONE, vec[:i] + ((p - 2 * s, e),) + vec[i + 1:]),
                    (Z * (-s), vec[:i] + vec[i + 1:])]
    return None


@lru_cache(maxsize=200_000)
def _tree_value(vec: tuple) -> HalfLaurent:
    leaf = _leaf(vec)
    if leaf is not None:
        return leaf
    total = ZERO
    for w, child in _expand(vec):
        if not w.is_zero():
            total = total + w * _tree_value(child)
    return total


def _as_vector(v) -> tuple:
    if isinstance(v, OrientedPretzel):
        return tuple(zip(v.spec.p, v.eps))
    return tuple((int(p), int(e)) for p, e in v)


def computation_tree_conway(v) -> HalfLaurent:
    """Conway polynomial of an oriented pretzel from its computation tree.

    ``v`` is an :class:`OrientedPretzel` or a sequence of ``(p, eps)`` pairs.
    """
    return _tree_value(_as_vector(v))


def computation_tree(v, max_nodes: int = 5000) -> TreeNode:
    """Explicit tree (for ``--trace``); stops expanding after ``max_nodes`` nodes."""
    budget = [max_nodes]

    def build(vec, weight):
        node = TreeNode(vec, weight)
        budget[0] -= 1
        leaf = _leaf(vec)
        if leaf is not None:
            node.value = leaf
            return node
        if budget[0] > 0:
            for w, child in _expand(vec):
                if not w.is_zero():
                    node.children.append(build(child, w))
        node.value = _tree_value(vec)
        return node

    return build(_as_vector(v), ONE)


def trace_json(v, max_nodes: int = 5000) -> str:
    return json.dumps(computation_tree(v, max_nodes).to_dict())


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def _prime(p: int) -> int:
    return sign(p) * (abs(p) - 1)


def _open_coeff(p: int) -> HalfLaurent:
    """Coefficient of the opened (0-crossing) tangle when a same-direction box is expanded."""
    return ONE if p == 0 else conway_torus2(_prime(p))


def _parallel_block(entries: Sequence[int]) -> HalfLaurent:
    """Value of a vector whose boxes all carry same-direction strands.

    Each box expands as nabla_{p'} (box opened) plus nabla_p (one crossing), so
    the value is prod(nabla_p) * [leaf(sum of signs) + sum nabla_{p'}/nabla_p],
    with the quotients cleared by replacing one factor at a time.
    """
    if not entries:
        return ZERO
    if len(entries) == 1:
        return ONE
    prod = ONE
    for p in entries:
        prod = prod * conway_torus2(p)
    out = prod * horizontal_leaf(sum(sign(p) for p in entries), 1)
    for i, p in enumerate(entries):
        term = _open_coeff(p)
        for j, q in enumerate(entries):
            if j != i:
                term = term * conway_torus2(q)
        out = out + term
    return out


def _closed_general(p: Sequence[int], eps: Sequence[int]) -> HalfLaurent:
    """Closed form for vectors whose opposite boxes are all even.

    With O the opposite boxes (p = 2l) and S the rest:
    [sum_k prod_{j != k} (-l_j)] z^{|O|-1} prod_S nabla_p
      + prod_O (-l_j) z^{|O|} * (parallel block of S).
    """
    opp = [x for x, e in zip(p, eps) if e == -1]
    same = [x for x, e in zip(p, eps) if e == 1]
    if any(x % 2 for x in opp):
        raise ShapeError("opposite odd boxes are not covered by this formula")
    ls = [x // 2 for x in opp]
    t = len(ls)
    prod_same = ONE
    for x in same:
        prod_same = prod_same * conway_torus2(x)
    lead = ONE
    for l in ls:
        lead = lead * (-l)
    out = lead * Z**t * _parallel_block(same)
    if t:
        corr = 0
        for k in range(t):
            c = 1
            for j, l in enumerate(ls):
                if j != k:
                    c *= -l
            corr += c
        out = out + Z ** (t - 1) * prod_same * corr
    return out


def _resolve_orientation(spec: PretzelSpec, orientation) -> OrientedPretzel:
    if isinstance(orientation, OrientedPretzel):
        return orientation
    if orientation is None:
        from .pretzel_model import realizations

        return next(realizations(spec))
    return realize(spec, tuple(orientation))


def conway_closed_knot(spec, orientation=None) -> HalfLaurent:
    """Closed-form Conway polynomial for the knot-type shapes.

    Covers one even box among odd boxes (a knot, either parity of n) and the
    all-odd, even-n link oriented with same-direction boxes.  The all-odd
    shapes with opposite boxes only have a parity statement and raise
    :class:`ShapeError`.
    """
    spec = as_spec(spec)
    prof = parity_profile(spec)
    op = _resolve_orientation(spec, orientation)
    if prof.s == 1:
        e = prof.even_entries[0]
        odd = [spec.p[i] for i in prof.odd_entries]
        l = spec.p[e] // 2
        alpha = prof.alpha
        prod = ONE
        for o in odd:
            prod = prod * conway_torus2(o)
        cleared = ZERO  # prod * sum nabla_{o'} / nabla_o
        for i, o in enumerate(odd):
            term = _open_coeff(o)
            for j, q in enumerate(odd):
                if j != i:
                    term = term * conway_torus2(q)
            cleared = cleared + term
        lead = horizontal_leaf(alpha, 1) if odd else ZERO
        if op.eps[e] == -1:
            # prod [1 - l z (leaf(alpha) + sum o'/o)]
            if not odd:
                return ONE
            return prod - Z * l * (prod * lead + cleared)
        # same-direction even box: the even box joins the parallel block
        beta = sign(spec.p[e])
        e_prime = _open_coeff(spec.p[e])
        e_full = conway_torus2(spec.p[e])
        return (prod * e_prime
                + e_full * (prod * horizontal_leaf(alpha + beta, 1) + cleared))
    if prof.s == 0 and spec.n % 2 == 0:
        if any(x == -1 for x in op.eps):
            raise ShapeError("opposite-direction all-odd links only have a parity statement; "
                             "use computation_tree_conway")
        return _parallel_block(spec.p)
    raise ShapeError("shape not covered by the knot formulas; use computation_tree_conway")


def conway_closed_link(spec, orientation=None) -> HalfLaurent:
    """Closed-form Conway polynomial for pretzel links with at least one even box.

    ``orientation`` may be an OrientedPretzel, an eps vector, or None.  None
    picks eps = -1 on all even boxes (or all but the distinguished box p_t when
    the number of odd boxes is odd).
    """
    spec = as_spec(spec)
    prof = parity_profile(spec)
    if prof.s < 1:
        raise ShapeError("needs at least one even box")
    if orientation is None:
        from .pretzel_model import orientation_opposite_all, orientation_opposite_except_pt

        if len(prof.odd_entries) % 2 == 0:
            op = orientation_opposite_all(spec)
        else:
            op = orientation_opposite_except_pt(spec)
    else:
        op = _resolve_orientation(spec, orientation)
    if any(e == -1 and x % 2 for x, e in zip(spec.p, op.eps)):
        raise ShapeError("opposite odd boxes are not covered by the link formulas")
    return _closed_general(spec.p, op.eps)


def closed_form_conway(spec, orientation=None) -> HalfLaurent:
    """Whichever closed form applies to this spec and orientation."""
    spec = as_spec(spec)
    prof = parity_profile(spec)
    op = _resolve_orientation(spec, orientation)
    if prof.s == 1 or (prof.s == 0 and spec.n % 2 == 0):
        return conway_closed_knot(spec, op)
    if prof.s >= 1:
        return conway_closed_link(spec, op)
    raise ShapeError("all-odd knots only have a parity statement")
