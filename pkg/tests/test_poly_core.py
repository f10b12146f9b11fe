import pytest
from hypothesis import given, strategies as st

from pretzel.poly_core import (
    HalfLaurent,
    T,
    Z,
    equal_up_to_unit,
    parse,
    render,
    span,
    substitute_z,
    symmetrize,
)

coeffs = st.integers(min_value=-50, max_value=50)
polys = st.dictionaries(st.integers(min_value=-12, max_value=12), coeffs, max_size=6).map(
    lambda d: HalfLaurent(d, "t"))
z_polys = st.dictionaries(st.integers(min_value=0, max_value=6).map(lambda k: 2 * k), coeffs,
                          max_size=5).map(lambda d: HalfLaurent(d, "z"))


def test_render_examples():
    assert render(HalfLaurent({6: -1, 5: 1, 0: 1})) == "-t^3 + t^{5/2} + 1"
    assert render(HalfLaurent({-2: 2, 2: -1})) == "-t + 2t^{-1}"
    assert render(HalfLaurent({})) == "0"
    assert str(Z * Z + 1) == "z^2 + 1"


@given(polys)
def test_render_parse_roundtrip(p):
    assert parse(render(p)) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == HalfLaurent()


@given(polys, polys)
def test_divexact_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).divexact(b) == a


def test_divexact_rejects_remainder():
    with pytest.raises(ValueError):
        (T + 1).divexact(T * T + 1)
    with pytest.raises(ZeroDivisionError):
        T.divexact(HalfLaurent())


def test_power_and_units():
    assert (T + 1) ** 3 == parse("t^3 + 3t^2 + 3t + 1")
    assert T ** -2 == parse("t^{-2}")
    with pytest.raises(ValueError):
        (T + 1) ** -1


def test_substitute_z_small_cases():
    # z^2 + 1 is the trefoil: t - 1 + t^{-1}
    assert substitute_z(Z * Z + 1) == parse("t - 1 + t^{-1}")
    # z alone: t^{1/2} - t^{-1/2}
    assert substitute_z(Z) == HalfLaurent({1: 1, -1: -1})
    assert substitute_z(HalfLaurent({}, "z")).is_zero()


@given(z_polys, z_polys)
def test_substitute_z_is_a_ring_map(a, b):
    assert substitute_z(a * b) == substitute_z(a) * substitute_z(b)
    assert substitute_z(a + b) == substitute_z(a) + substitute_z(b)


@given(z_polys)
def test_span_of_substitution_is_degree(p):
    if p.is_zero():
        return
    assert span(substitute_z(p)) == p.degree()


def test_span_values():
    assert span(parse("t - 1 + t^{-1}")) == 2
    assert span(HalfLaurent({1: 1, -2: 1})) == 1.5
    with pytest.raises(ValueError):
        span(HalfLaurent())


@given(polys, st.integers(min_value=-10, max_value=10), st.sampled_from([1, -1]))
def test_equal_up_to_unit(p, k, s):
    assert equal_up_to_unit(p, p.shift(k) * s)


def test_equal_up_to_unit_negative():
    assert not equal_up_to_unit(T + 1, T - 1)
    assert not equal_up_to_unit(T, HalfLaurent())


def test_symmetrize_and_invert():
    p = parse("t^4 - t^3 + t^2")
    assert symmetrize(p) == parse("t - 1 + t^{-1}")
    assert p.invert() == parse("t^{-2} - t^{-3} + t^{-4}")


def test_from_pairs_roundtrip():
    p = parse("-t^{7/2} + 2t - 5")
    assert HalfLaurent.from_pairs(p.to_pairs()) == p
