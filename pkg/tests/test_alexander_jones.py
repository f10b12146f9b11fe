import pytest

from pretzel.alexander_jones import (
    alexander_classical,
    alexander_from_conway,
    alexander_torus2,
    family_report,
    jones_pretzel_family,
    jones_torus,
)
from pretzel.classify_genus_basket import torres_bound
from pretzel.conway_engine import ShapeError
from pretzel.diagram_oracle import build_braid_closure, build_diagram, conway_skein, kauffman_jones
from pretzel.poly_core import equal_up_to_unit, parse, span, substitute_z


def torus_braid(m, n):
    gens = list(range(1, abs(m)))
    s = 1 if n > 0 else -1
    return build_braid_closure(abs(m), [s * g for g in gens] * abs(n))


@pytest.mark.parametrize("m, n", [(2, 3), (2, 5), (2, 4), (2, 6), (3, 4), (3, 5), (4, 5),
                                  (3, 7), (5, 6), (2, -3), (3, -4), (4, 3)])
def test_jones_torus_matches_braid_closures(m, n):
    assert jones_torus(m, n) == kauffman_jones(torus_braid(m, n))


def test_jones_torus_values():
    assert jones_torus(3, 4) == parse("-t^8 + t^5 + t^3")
    assert jones_torus(3, 5) == parse("-t^10 + t^6 + t^4")
    assert jones_torus(2, 1) == parse("1")
    with pytest.raises(ShapeError):
        jones_torus(3, 6)


@pytest.mark.parametrize("p", range(-6, 7))
def test_alexander_torus2_matches_closures(p):
    truth = substitute_z(conway_skein(torus_braid(2, p))) if p else None
    if p == 0:
        assert alexander_torus2(0).is_zero()
    else:
        assert equal_up_to_unit(alexander_torus2(p), truth)


def test_alexander_torus2_signs():
    assert alexander_torus2(4, -1) == -alexander_torus2(4)
    assert alexander_torus2(3, -1) == alexander_torus2(3)


@pytest.mark.parametrize("l, q, r", [(1, 3, 3), (1, 3, 5), (2, 3, 7), (3, 5, 1), (1, 1, 1)])
@pytest.mark.parametrize("s", [1, -1])
def test_alexander_classical_matches_oracle(l, q, r, s):
    spec = (-2 * l, q, s * r)
    truth = substitute_z(conway_skein(build_diagram(spec).diagram))
    assert equal_up_to_unit(alexander_classical(l, q, r, s), truth)
    assert equal_up_to_unit(alexander_from_conway(spec), truth)


def test_alexander_classical_example():
    assert alexander_classical(1, 3, 3) == parse("t^3 - t^2 + 1 - t^{-2} + t^{-3}")


def test_alexander_classical_domain():
    with pytest.raises(ValueError):
        alexander_classical(0, 3, 3)
    with pytest.raises(ValueError):
        alexander_classical(1, 2, 3)


@pytest.mark.parametrize("l, q, r", [(1, 3, 3), (2, 5, 3), (1, 3, 7)])
def test_torres_bound_on_classical_family(l, q, r):
    assert torres_bound(alexander_classical(l, q, r), 1) == q + r


# -- Jones family rows ------------------------------------------------------

@pytest.mark.parametrize("p", [(-2, 1, 3), (-2, 1, 7), (-2, 3, 3), (-2, 3, 5), (-2, 3, 7), (-2, 3, 9),
                               (2, -1, -5), (2, -3, -3), (2, -3, -7)])
def test_exact_family_rows(p):
    assert jones_pretzel_family(p) == kauffman_jones(build_diagram(p).diagram)


def test_spot_values_equal_torus_knots():
    assert jones_pretzel_family((-2, 3, 3)) == parse("-t^8 + t^5 + t^3")
    assert jones_pretzel_family((-2, 3, 5)) == jones_torus(3, 5)


@pytest.mark.parametrize("p", [(-2, 5, 5), (-2, 5, 7), (2, 1, 5), (4, 3, 5), (2, 3, 3)])
def test_inexact_rows_keep_range_and_leading_term(p):
    rep = family_report(p)
    assert rep["same_range"] and rep["same_leading"]


def test_unspecified_row_raises():
    with pytest.raises(ShapeError):
        jones_pretzel_family((-4, 3, 5))
    with pytest.raises(ShapeError):
        jones_pretzel_family((3, 5, 7))


def test_span_helper():
    assert span(jones_torus(3, 4)) == 5
