"""Ordered rough approximation operators.

The space couples a finite universe with a relation-generated topology and
a partial order. The order restricts interior and closure to increasing or
decreasing sets, giving the directed base operators; semi, pre, gamma and
beta approximations are literal compositions of those two. Every operator
is a pure function of (space, subset, direction).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from weakref import WeakKeyDictionary

from .order import PartialOrder
from .topology import Topology
from .universe import Subset, Universe


class Direction(Enum):
    INC = "inc"
    DEC = "dec"

    @property
    def opposite(self) -> Direction:
        return Direction.DEC if self is Direction.INC else Direction.INC

    @property
    def label(self) -> str:
        return "Inc" if self is Direction.INC else "Dec"


class OperatorFamily(Enum):
    R = "r"
    S = "s"
    P = "p"
    GAMMA = "gamma"
    BETA = "beta"

    @property
    def label(self) -> str:
        return {"r": "R", "s": "S", "p": "P", "gamma": "gamma", "beta": "beta"}[self.value]


FAMILY_ORDER = (
    OperatorFamily.R,
    OperatorFamily.S,
    OperatorFamily.P,
    OperatorFamily.GAMMA,
    OperatorFamily.BETA,
)
DIRECTION_ORDER = (Direction.INC, Direction.DEC)


@dataclass(frozen=True, eq=False)
class Gotas:
    """A universe plus a topology and a partial order over it."""

    universe: Universe
    topology: Topology
    order: PartialOrder

    def __post_init__(self) -> None:
        if self.topology.universe is not self.universe:
            raise ValueError("topology is defined over a different universe")
        if self.order.universe is not self.universe:
            raise ValueError("order is defined over a different universe")


# Per-space memo for the directed base operators; composites reduce to a
# handful of lookups. Keyed weakly so spaces stay collectable.
_SPACE_CACHE: WeakKeyDictionary = WeakKeyDictionary()


def _cache(g: Gotas) -> dict:
    cached = _SPACE_CACHE.get(g)
    if cached is None:
        cached = _SPACE_CACHE[g] = {}
    return cached


def _monotone_family(g: Gotas, d: Direction, closed: bool) -> tuple[int, ...]:
    cache = _cache(g)
    key = ("family", d, closed)
    fam = cache.get(key)
    if fam is None:
        sets = g.topology.closeds if closed else g.topology.opens
        keep = g.order.is_increasing if d is Direction.INC else g.order.is_decreasing
        fam = tuple(s.bits for s in sets if keep(s))
        cache[key] = fam
    return fam


def r_lower(g: Gotas, a: Subset, d: Direction) -> Subset:
    """Greatest d-monotone open subset of ``a`` (the union of all of them)."""
    cache = _cache(g)
    key = (a.bits, d, "lower")
    bits = cache.get(key)
    if bits is None:
        bits = 0
        for o in _monotone_family(g, d, closed=False):
            if o & ~a.bits == 0:
                bits |= o
        cache[key] = bits
    return g.universe.from_bits(bits)


def r_upper(g: Gotas, a: Subset, d: Direction) -> Subset:
    """Smallest d-monotone closed superset of ``a`` (the intersection of all
    of them)."""
    cache = _cache(g)
    key = (a.bits, d, "upper")
    bits = cache.get(key)
    if bits is None:
        bits = g.universe.full_mask
        for c in _monotone_family(g, d, closed=True):
            if a.bits & ~c == 0:
                bits &= c
        cache[key] = bits
    return g.universe.from_bits(bits)


def semi_lower(g: Gotas, a: Subset, d: Direction) -> Subset:
    return a & r_upper(g, r_lower(g, a, d), d)


def semi_upper(g: Gotas, a: Subset, d: Direction) -> Subset:
    return a | r_lower(g, r_upper(g, a, d), d)


def pre_lower(g: Gotas, a: Subset, d: Direction) -> Subset:
    return a & r_lower(g, r_upper(g, a, d), d)


def pre_upper(g: Gotas, a: Subset, d: Direction) -> Subset:
    return a | r_upper(g, r_lower(g, a, d), d)


def gamma_lower(g: Gotas, a: Subset, d: Direction) -> Subset:
    return a & (r_upper(g, r_lower(g, a, d), d) | r_lower(g, r_upper(g, a, d), d))


def gamma_upper(g: Gotas, a: Subset, d: Direction) -> Subset:
    return a | (r_upper(g, r_lower(g, a, d), d) | r_lower(g, r_upper(g, a, d), d))


def beta_lower(g: Gotas, a: Subset, d: Direction) -> Subset:
    return a & r_upper(g, r_lower(g, r_upper(g, a, d), d), d)


def beta_upper(g: Gotas, a: Subset, d: Direction) -> Subset:
    return a | r_lower(g, r_upper(g, r_lower(g, a, d), d), d)


_LOWER = {
    OperatorFamily.R: r_lower,
    OperatorFamily.S: semi_lower,
    OperatorFamily.P: pre_lower,
    OperatorFamily.GAMMA: gamma_lower,
    OperatorFamily.BETA: beta_lower,
}
_UPPER = {
    OperatorFamily.R: r_upper,
    OperatorFamily.S: semi_upper,
    OperatorFamily.P: pre_upper,
    OperatorFamily.GAMMA: gamma_upper,
    OperatorFamily.BETA: beta_upper,
}


def lower(g: Gotas, a: Subset, family: OperatorFamily, d: Direction) -> Subset:
    return _LOWER[family](g, a, d)


def upper(g: Gotas, a: Subset, family: OperatorFamily, d: Direction) -> Subset:
    return _UPPER[family](g, a, d)


def boundary(g: Gotas, a: Subset, family: OperatorFamily, d: Direction) -> Subset:
    return upper(g, a, family, d) - lower(g, a, family, d)


def positive(g: Gotas, a: Subset, family: OperatorFamily, d: Direction) -> Subset:
    return lower(g, a, family, d)


def negative(g: Gotas, a: Subset, family: OperatorFamily, d: Direction) -> Subset:
    # Cross-direction by definition: the Inc negative region subtracts the
    # Dec upper approximation, and vice versa.
    return upper(g, a, family, d.opposite).complement()


def accuracy(g: Gotas, a: Subset, family: OperatorFamily, d: Direction) -> Fraction:
    """Exact cardinality ratio of lower to upper approximation.

    The empty set is a total-function extension: it is exact for every
    family, so its accuracy is 1.
    """
    up = upper(g, a, family, d)
    if up.is_empty():
        return Fraction(1)
    return Fraction(lower(g, a, family, d).cardinality(), up.cardinality())


def is_exact(
    g: Gotas,
    a: Subset,
    family: OperatorFamily,
    d: Direction,
    *,
    mixed_directions: bool = False,
) -> bool:
    """Whether the lower and upper approximations coincide.

    Both operators are taken in the same direction. ``mixed_directions`` is
    a diagnostic that compares the lower approximation against the
    opposite-direction upper instead; it is not used by any report.
    """
    up_direction = d.opposite if mixed_directions else d
    return lower(g, a, family, d) == upper(g, a, family, up_direction)


@dataclass(frozen=True)
class ApproxReport:
    """One (family, direction) row of a full analysis."""

    lower: Subset
    upper: Subset
    boundary: Subset
    positive: Subset
    negative: Subset
    accuracy: Fraction
    exact: bool


def full_report(
    g: Gotas, a: Subset
) -> dict[tuple[OperatorFamily, Direction], ApproxReport]:
    """All ten (family, direction) rows, in canonical order."""
    table: dict[tuple[OperatorFamily, Direction], ApproxReport] = {}
    for family in FAMILY_ORDER:
        for d in DIRECTION_ORDER:
            lo = lower(g, a, family, d)
            up = upper(g, a, family, d)
            table[(family, d)] = ApproxReport(
                lower=lo,
                upper=up,
                boundary=up - lo,
                positive=lo,
                negative=negative(g, a, family, d),
                accuracy=accuracy(g, a, family, d),
                exact=lo == up,
            )
    return table
