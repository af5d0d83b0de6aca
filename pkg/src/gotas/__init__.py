"""Rough-set approximation operators over general ordered topological
approximation spaces: a finite universe, a relation-generated topology and
a partial order, with the directed R / semi / pre / gamma / beta lower and
upper approximation families, their regions and accuracy measures, plus a
brute-force oracle and a mechanized law checker."""

from .approximations import (
    ApproxReport,
    DIRECTION_ORDER,
    Direction,
    FAMILY_ORDER,
    Gotas,
    OperatorFamily,
    accuracy,
    beta_lower,
    beta_upper,
    boundary,
    full_report,
    gamma_lower,
    gamma_upper,
    is_exact,
    lower,
    negative,
    positive,
    pre_lower,
    pre_upper,
    r_lower,
    r_upper,
    semi_lower,
    semi_upper,
    upper,
)
from .order import OrderAxiomError, PartialOrder, equality_order, validate_order
from .topology import (
    BinaryRelation,
    Topology,
    generate_topology,
    topology_from_relation,
)
from .universe import Subset, Universe, UniverseMismatchError

__version__ = "0.1.0"

__all__ = [
    "ApproxReport",
    "BinaryRelation",
    "DIRECTION_ORDER",
    "Direction",
    "FAMILY_ORDER",
    "Gotas",
    "OperatorFamily",
    "OrderAxiomError",
    "PartialOrder",
    "Subset",
    "Topology",
    "Universe",
    "UniverseMismatchError",
    "accuracy",
    "beta_lower",
    "beta_upper",
    "boundary",
    "equality_order",
    "full_report",
    "gamma_lower",
    "gamma_upper",
    "generate_topology",
    "is_exact",
    "lower",
    "negative",
    "positive",
    "pre_lower",
    "pre_upper",
    "r_lower",
    "r_upper",
    "semi_lower",
    "semi_upper",
    "topology_from_relation",
    "upper",
    "validate_order",
]
