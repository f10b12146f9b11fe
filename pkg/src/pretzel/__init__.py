"""Exact polynomial invariants, genus and basket numbers of pretzel links."""

from .alexander_jones import (
    alexander_classical,
    alexander_from_conway,
    alexander_torus2,
    family_report,
    jones_pretzel_family,
    jones_torus,
)
from .classify_genus_basket import (
    BasketReport,
    Classification,
    GenusReport,
    SplitLinkError,
    basket_number,
    classify_classical,
    genus_classical_knot,
    genus_classical_link,
    genus_npretzel,
    torres_bound,
)
from .conway_engine import (
    ShapeError,
    closed_form_conway,
    computation_tree,
    computation_tree_conway,
    conway_closed_knot,
    conway_closed_link,
)
from .diagram_oracle import (
    Diagram,
    OracleBudgetError,
    build_diagram,
    conway_skein,
    kauffman_jones,
    seifert_data,
)
from .poly_core import HalfLaurent, equal_up_to_unit, parse, render, span, substitute_z
from .pretzel_model import (
    OrientedPretzel,
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

__version__ = "0.1.0"
