import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pretzel.alexander_jones import jones_torus
from pretzel.classify_genus_basket import (
    SplitLinkError,
    basket_number,
    classify_classical,
    genus_classical_knot,
    genus_classical_link,
    genus_npretzel,
    oracle_min_genus,
    torres_bound,
)
from pretzel.diagram_oracle import build_diagram, kauffman_jones
from pretzel.poly_core import HalfLaurent, parse
from pretzel.pretzel_model import parity_profile, reduce_minus_one, symmetries

triples = st.tuples(*[st.integers(min_value=-7, max_value=7)] * 3)


def jones(p):
    return kauffman_jones(build_diagram(p).diagram)


# -- classification ---------------------------------------------------------

@pytest.mark.parametrize("p, kind, mn", [
    ((5, 1, -1), "Unknot", None),
    ((1, 1, 1), "Torus", (2, -3)),
    ((-1, -1, -1), "Torus", (2, 3)),
    ((2, -1, 7), "Torus", (2, 5)),
    ((-2, 1, -9), "Torus", (2, -7)),
    ((2, -1, 3), "Unknot", None),
    ((-2, 3, 3), "Torus", (3, 4)),
    ((2, -3, -3), "Torus", (3, -4)),
    ((-2, 5, 3), "Torus", (3, 5)),
    ((-2, 3, 7), "Hyperbolic", None),
    ((3, 5, 7), "Hyperbolic", None),
    ((0, 3, 5), "Composite", None),
    ((2, 4, 3), "NotAKnot", None),
])
def test_classify_examples(p, kind, mn):
    c = classify_classical(p)
    assert c.kind == kind
    if mn:
        assert (c.m, c.n) == mn
        assert jones(p) == jones_torus(*mn)


@settings(max_examples=150, deadline=None)
@given(triples)
def test_classification_symmetry_invariance(p):
    base = classify_classical(p)
    for sym in symmetries(p):
        c = classify_classical(sym.spec)
        assert c.kind == base.kind
        if base.kind == "Torus":
            assert (c.m, c.n) == (base.m, -base.n if sym.mirror else base.n)
    if base.kind != "NotAKnot" and (1 in p or -1 in p):
        assert classify_classical(reduce_minus_one(p)).kind == base.kind


def test_hyperbolic_knots_do_not_share_small_torus_jones():
    known = {jones_torus(2, 1)}
    for m, n in [(2, 3), (2, 5), (2, 7), (2, 9), (3, 4), (3, 5)]:
        known |= {jones_torus(m, n), jones_torus(m, -n)}
    for p in itertools.product(range(-5, 6), repeat=3):
        if classify_classical(p).kind == "Hyperbolic":
            assert jones(p) not in known, p


# -- classical genus lists --------------------------------------------------

@pytest.mark.parametrize("p, g, case", [
    ((3, 5, 7), 1, "case 2"),
    ((2, -1, 7), 2, "case 3"),
    ((-4, 3, 5), 4, "case 4"),
    ((-4, 3, -5), 3, "case 5"),
    ((5, 1, -1), 0, "case 1"),
    ((2, -1, 3), 0, "case 1"),
])
def test_genus_classical_knot(p, g, case):
    rep = genus_classical_knot(p)
    assert (rep.genus, rep.case) == (g, case)
    assert rep.oracle_genus == g
    assert rep.agrees


def test_trivial_alexander_knot_keeps_case_value():
    # K(-3,5,7) has Alexander polynomial 1 but is a nontrivial genus-one knot
    rep = genus_classical_knot((-3, 5, 7))
    assert rep.genus == 1
    assert rep.oracle_genus == 0
    assert rep.warnings


def test_genus_classical_link_agrees_with_oracle_on_small_grid():
    disagreements = []
    for l1, l2, r in itertools.product(range(-3, 4), range(-3, 4), range(-5, 6)):
        if not l1 or not l2 or not r or abs(l1) < abs(l2):
            continue
        rep = genus_classical_link(l1, l2, r)
        if not rep.agrees:
            disagreements.append((2 * l1, 2 * l2, r))
    # only the split link L(-+2,-+2,+-1), and rotations of L(+-4,+-4,-+2) whose
    # polynomial vanishes under O_1
    allowed = {(-2, -2, 1), (2, 2, -1)}
    for v in [(4, 4, -2), (-4, -4, 2)]:
        allowed |= {v[k:] + v[:k] for k in range(3)}
    assert set(disagreements) <= allowed


# -- n-pretzel genus and basket numbers -------------------------------------

@pytest.mark.parametrize("p, g, bk", [((-2, 3, 7), 5, 10), ((2, 3, -3, 5), 5, 10)])
def test_genus_and_basket_examples(p, g, bk):
    rep = genus_npretzel(p)
    assert rep.genus == g and rep.agrees
    b = basket_number(p)
    assert b.basket_number == bk and b.case_value == bk


def test_genus_npretzel_link_example():
    rep = genus_npretzel((2, -2, 3, 3), verify=True)
    assert rep.case_value == rep.genus == rep.oracle_genus


def test_genus_npretzel_outside_hypothesis_uses_oracle():
    rep = genus_npretzel((3, 5, 7))
    assert rep.case == "oracle" and rep.genus == 1
    assert genus_npretzel((2, -1, 7)).genus == 2


def test_degenerate_cancellation_is_reported():
    # alpha + beta = 0 and the next coefficient cancels too: the degree drops by 4
    rep = genus_npretzel((2, 3, -3, -3))
    assert rep.genus == 2
    assert rep.case_value == 3
    assert rep.warnings


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from([-4, -3, -2, 2, 3, 4]), min_size=1, max_size=4).map(tuple))
def test_genus_report_invariants(p):
    if parity_profile(p).s == 0:
        return
    try:
        rep = genus_npretzel(p)
    except SplitLinkError:
        return
    if rep.certificate == "torres":
        assert 2 * rep.genus == rep.conway_degree - rep.mu + 1
    if rep.canonical_genus is not None:
        assert rep.genus <= rep.canonical_genus
    b = basket_number(p)
    assert (b.basket_number - (b.components - 1)) % 2 == 0
    assert b.basket_number == 2 * b.genus + b.components - 1


def test_vanishing_polynomial_with_planar_surface():
    rep = genus_npretzel((-4, -4, 2))
    assert rep.certificate == "surface"
    assert rep.genus == rep.case_value == 0
    assert basket_number((-4, -4, 2)).basket_number == 2


def test_torres_bound():
    assert torres_bound(parse("t - 1 + t^{-1}"), 1) == 2
    assert torres_bound(parse("1"), 1) == 0
    with pytest.raises(SplitLinkError):
        torres_bound(HalfLaurent(), 2)


def test_split_link_has_no_oracle_genus():
    with pytest.raises(SplitLinkError):
        oracle_min_genus((2, -2))
