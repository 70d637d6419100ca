"""Exact K-theoretic Pieri coefficients for isotropic Grassmannians of types B, C and D."""
from .bruhat import BruhatPoset, build_poset, codim, leq, mobius, preceq
from .diagram import DiagramReport, analyze, arrow, conflicting_lone_stars, has_critical_window
from .errors import DomainError
from .grassmannian import (
    GrassmannianSpec,
    dual,
    enumerate_symbols,
    iota,
    make_spec,
    make_symbol,
    reflect,
    type_of,
)
from .ktheory import (
    HClass,
    SpecialSchubert,
    chi,
    special_classes,
    triple_intersection,
    triple_intersection_unified,
    z_class,
)
from .pieri import PieriRow, PosetMatrices, build_matrices, pieri_coefficient, pieri_row
from .projection import SSets, ZData, s_sets, shrink, z_data, z_type
