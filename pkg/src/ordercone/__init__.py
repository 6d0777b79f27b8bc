"""Exact decision procedures for disjointness, atoms and discrete elements in
finite-dimensional spaces ordered by polyhedral cones."""

from .cone import (
    ConeRep,
    FaceHandle,
    OrderedSpace,
    build_space,
    face_of,
    face_strictly_below,
    load_cone_document,
    member,
    orthant,
    strictly_positive_functional,
)
from .discrete import (
    DiscreteVerdict,
    Status,
    d_disjoint_witness_below,
    find_atom_below,
    is_atom,
    is_d_discrete,
    is_discrete,
    sup_scaling,
)
from .disjoint import (
    DisjointnessVerdict,
    d_disjoint,
    make_d_disjoint_pair,
    perp,
    sym_interval_disjoint,
)
from .errors import CertificateError, InputError
from .lp import contains, enumerate_vertices, is_singleton_zero, solve_lp
from .order import (
    is_maximal_lower_bound,
    leq,
    lower_bound_set,
    maximal_lower_bound,
    order_interval,
    upper_bound_set,
)
from .polyhedron import Halfspace, Polyhedron
from .rational import Q, parse_rational, parse_vector, format_rational, format_vector

__version__ = "0.1.0"
