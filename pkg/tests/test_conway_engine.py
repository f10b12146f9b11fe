import json

import pytest
from hypothesis import given, settings, strategies as st

from pretzel.conway_engine import (
    ShapeError,
    box_closure,
    closed_form_conway,
    computation_tree,
    computation_tree_conway,
    conway_closed_knot,
    conway_closed_link,
    conway_torus2,
    horizontal_leaf,
    reduce_opposite_box,
)
from pretzel.diagram_oracle import build_braid_closure, conway_skein
from pretzel.poly_core import Z, parse
from pretzel.pretzel_model import (
    orientation_opposite_all,
    orientation_opposite_except_pt,
    realizations,
)

small = st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=4).map(tuple)


def zpoly(text):
    return parse(text, "z")


@pytest.mark.parametrize("n", range(-6, 7))
def test_conway_torus2_matches_braid_closure(n):
    word = [1 if n > 0 else -1] * abs(n)
    assert conway_torus2(n) == conway_skein(build_braid_closure(2, word))


def test_box_closure_and_leaf_values():
    assert box_closure(4, 1) == zpoly("z^3 + 2z")
    assert box_closure(4, -1) == zpoly("-2z")
    assert horizontal_leaf(3, -1) == conway_torus2(-3)
    assert horizontal_leaf(4, 1) == 2 * Z
    with pytest.raises(ShapeError):
        box_closure(3, -1)


def test_reduce_opposite_box_identity():
    vec = ((4, -1), (2, -1), (3, 1), (5, 1))
    term, weight, child = reduce_opposite_box(vec, 0)
    assert computation_tree_conway(vec) == term + weight * computation_tree_conway(child)
    assert child == vec[1:]
    with pytest.raises(ShapeError):
        reduce_opposite_box(vec, 2)


@settings(max_examples=80, deadline=None)
@given(small, st.data())
def test_tree_matches_oracle(p, data):
    ops = list(realizations(p))
    op = ops[data.draw(st.integers(0, len(ops) - 1))]
    assert computation_tree_conway(op) == conway_skein(op.diagram())


@settings(max_examples=80, deadline=None)
@given(small, st.data())
def test_closed_forms_match_tree(p, data):
    ops = list(realizations(p))
    op = ops[data.draw(st.integers(0, len(ops) - 1))]
    try:
        closed = closed_form_conway(p, op)
    except ShapeError:
        return
    assert closed == computation_tree_conway(op)


def test_spot_values():
    assert computation_tree_conway(orientation_opposite_all((2, 4))) == zpoly("-3z")
    assert conway_closed_link((2, 4, 3, 5)) == zpoly("2z^9 + 9z^7 + 8z^5 - 4z^3 - 3z")
    k = conway_closed_knot((-2, 3, 7))
    assert k == zpoly("z^10 + 9z^8 + 27z^6 + 31z^4 + 12z^2 + 1")


def test_knot_closed_form_on_torus_example():
    # K(-2,3,3) is the (3,4) torus knot, the closure of (s1 s2)^4
    assert conway_closed_knot((-2, 3, 3)) == conway_skein(build_braid_closure(3, [1, 2] * 4))


def test_link_default_orientation():
    spec = (2, -2, 3)
    assert conway_closed_link(spec) == computation_tree_conway(orientation_opposite_except_pt(spec))


def test_shape_errors():
    with pytest.raises(ShapeError):
        conway_closed_knot((3, 5, 7))
    with pytest.raises(ShapeError):
        conway_closed_link((3, 5, 7, 9))
    with pytest.raises(ShapeError):
        closed_form_conway((3, 5, 7))


@pytest.mark.parametrize("p", [(3, 5, 7), (1, -3, 5, 7, -9), (3, 3, 3)])
def test_all_odd_knots_have_even_powers(p):
    nabla = computation_tree_conway(next(realizations(p)))
    assert all(k % 4 == 0 for k, _ in nabla.items())


@pytest.mark.parametrize("p", [(3, 5), (3, -5, 7, 9), (1, 1, 3, -3)])
def test_all_odd_opposite_links_have_odd_powers(p):
    op = next(o for o in realizations(p) if all(e == -1 for e in o.eps))
    nabla = computation_tree_conway(op)
    assert all(k % 4 == 2 for k, _ in nabla.items())


def test_trace_json_is_consistent():
    vec = ((2, -1), (3, 1), (-3, 1))
    root = computation_tree(vec)
    d = json.loads(json.dumps(root.to_dict()))
    assert d["value"] == str(computation_tree_conway(vec))
    assert len(d["children"]) == 2
