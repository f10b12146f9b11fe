import pytest
from hypothesis import given, strategies as st

from pretzel.diagram_oracle import build_diagram, conway_skein
from pretzel.pretzel_model import (
    PretzelSpec,
    choose_pt,
    orientation_opposite_all,
    orientation_opposite_except_pt,
    parity_profile,
    parse_spec,
    realizations,
    reduce_minus_one,
    symmetries,
)

entries = st.integers(min_value=-5, max_value=5)
vectors = st.lists(entries, min_size=1, max_size=5).map(tuple)


@pytest.mark.parametrize("text", ["-2,3,7", "K(-2,3,7)", "L(-2, 3, 7)", " -2 , 3,7 "])
def test_parse_spec_forms(text):
    assert parse_spec(text) == PretzelSpec((-2, 3, 7))


def test_parse_spec_rejects_garbage():
    with pytest.raises(ValueError):
        parse_spec("2,x")
    with pytest.raises(ValueError):
        parse_spec("")


def test_parity_profile():
    prof = parity_profile((2, 4, 3, -5))
    assert prof.s == 2
    assert prof.odd_entries == (2, 3)
    assert prof.alpha == 0
    assert prof.component_count == 2
    assert parity_profile((3, 5, 7)).component_count == 1
    assert parity_profile((3, 5, 7, 9)).component_count == 2


@given(vectors)
def test_component_count_matches_diagram(p):
    d = build_diagram(p)
    assert d.n_components == parity_profile(p).component_count


@pytest.mark.parametrize("p, t", [((2, -2, 3, 5), 0), ((-2, 4, 3), 0), ((2, -2, 3), 1), ((4, 2, 3), 1)])
def test_choose_pt(p, t):
    assert choose_pt(p) == t


def test_choose_pt_needs_even_entry():
    with pytest.raises(ValueError):
        choose_pt((3, 5, 7))


def test_opposite_builders():
    assert orientation_opposite_all((2, 4, 3, 5)).eps == (-1, -1, 1, 1)
    assert orientation_opposite_all((2, 3, 5, 4)).eps == (-1, 1, 1, -1)
    assert orientation_opposite_except_pt((2, 4, 3), 0).eps == (1, -1, 1)
    assert orientation_opposite_except_pt((2, -2, 3)).eps == (-1, 1, 1)
    with pytest.raises(ValueError):
        orientation_opposite_all((2, 3))
    with pytest.raises(ValueError):
        orientation_opposite_except_pt((2, 4, 3), 2)


@given(vectors)
def test_realizations_are_distinct_classes(p):
    ops = list(realizations(p))
    assert len(ops) == 2 ** (parity_profile(p).component_count - 1)
    assert len({op.eps for op in ops}) == len(ops)
    if parity_profile(p).s:
        # with an even box present, every odd box is same-direction
        assert all(e == 1 for op in ops for x, e in zip(p, op.eps) if x % 2)


@pytest.mark.parametrize("p, q", [
    ((3, -1, 5), (1, 1, 3)),
    ((2, 1, 1), (3, -1, -1)),
    ((4, 1, 3), (6, -1, 5)),
])
def test_reduce_minus_one(p, q):
    assert reduce_minus_one(p).p == q


@given(st.tuples(entries, entries, entries))
def test_reduce_minus_one_preserves_conway(p):
    if 1 not in p and -1 not in p:
        return
    if parity_profile(p).component_count != 1:
        return
    q = reduce_minus_one(p).p
    assert conway_skein(build_diagram(p).diagram) == conway_skein(build_diagram(q).diagram)


def test_symmetries_contains_rotations_and_mirrors():
    syms = symmetries((1, 2, 3))
    vecs = {(s.spec.p, s.mirror) for s in syms}
    assert ((2, 3, 1), False) in vecs
    assert ((3, 2, 1), False) in vecs
    assert ((-1, -2, -3), True) in vecs
