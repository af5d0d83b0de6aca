"""Topologies on a finite universe.

A topology is materialized as the explicit family of open sets, generated
from an arbitrary binary relation (right neighborhoods as a subbase) or
from a user-supplied family of generator subsets. Interior and closure are
linear scans over that family.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .universe import Subset, Universe, UniverseMismatchError


class BinaryRelation:
    """Arbitrary binary relation over a universe; no axioms assumed."""

    __slots__ = ("universe", "pairs")

    def __init__(self, universe: Universe, pairs: Iterable[tuple[int, int]]) -> None:
        pairs = frozenset(pairs)
        for x, y in pairs:
            if not (0 <= x < universe.size and 0 <= y < universe.size):
                raise ValueError(f"pair ({x}, {y}) references indices outside the universe")
        self.universe = universe
        self.pairs = pairs

    @classmethod
    def from_labels(cls, universe: Universe, pairs: Iterable[tuple[str, str]]) -> BinaryRelation:
        return cls(universe, [(universe.index(x), universe.index(y)) for x, y in pairs])

    def right_neighborhoods(self) -> tuple[Subset, ...]:
        """The family { xR : x in U } where xR = { y : x R y }, duplicates
        removed, in canonical order."""
        masks = [0] * self.universe.size
        for x, y in self.pairs:
            masks[x] |= 1 << y
        unique = {self.universe.from_bits(m) for m in masks}
        return tuple(sorted(unique, key=Subset.sort_key))

    def __repr__(self) -> str:
        return f"BinaryRelation({self.universe!r}, {len(self.pairs)} pairs)"


class Topology:
    """Explicit family of open sets with its derived closed family.

    Construct via :func:`generate_topology`; the constructor trusts its
    input to already satisfy the topology axioms.
    """

    __slots__ = ("universe", "opens", "closeds", "_open_bits", "_closed_bits")

    def __init__(self, universe: Universe, opens: Iterable[Subset]) -> None:
        self.universe = universe
        self.opens = tuple(sorted(opens, key=Subset.sort_key))
        self.closeds = tuple(
            sorted((o.complement() for o in self.opens), key=Subset.sort_key)
        )
        self._open_bits = frozenset(o.bits for o in self.opens)
        self._closed_bits = frozenset(c.bits for c in self.closeds)

    def is_open(self, s: Subset) -> bool:
        return s.universe is self.universe and s.bits in self._open_bits

    def is_closed(self, s: Subset) -> bool:
        return s.universe is self.universe and s.bits in self._closed_bits

    def interior(self, a: Subset) -> Subset:
        """Union of all opens contained in ``a``: the greatest open subset."""
        if a.universe is not self.universe:
            raise UniverseMismatchError("subset belongs to a different universe")
        acc = 0
        for o in self.opens:
            if o.bits & ~a.bits == 0:
                acc |= o.bits
        return self.universe.from_bits(acc)

    def closure(self, a: Subset) -> Subset:
        """Intersection of all closeds containing ``a``: the smallest closed
        superset."""
        if a.universe is not self.universe:
            raise UniverseMismatchError("subset belongs to a different universe")
        acc = self.universe.full_mask
        for c in self.closeds:
            if a.bits & ~c.bits == 0:
                acc &= c.bits
        return self.universe.from_bits(acc)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.opens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Topology):
            return NotImplemented
        return self.universe is other.universe and self._open_bits == other._open_bits

    def __hash__(self) -> int:
        return hash((id(self.universe), self._open_bits))

    def __repr__(self) -> str:
        return f"Topology({len(self.opens)} opens over {self.universe!r})"


def generate_topology(universe: Universe, base: Iterable[Subset]) -> Topology:
    """Smallest topology containing ``base``.

    Adds the empty set and the whole universe, then repeatedly closes the
    family under pairwise intersection and pairwise union until a fixpoint;
    on a finite universe that yields closure under arbitrary unions.
    """
    family = {0, universe.full_mask}
    for s in base:
        if s.universe is not universe:
            raise UniverseMismatchError("generator subset belongs to a different universe")
        family.add(s.bits)
    while True:
        size = len(family)
        family |= {a & b for a in family for b in family}
        family |= {a | b for a in family for b in family}
        if len(family) == size:
            break
    return Topology(universe, [universe.from_bits(bits) for bits in family])


def topology_from_relation(relation: BinaryRelation) -> Topology:
    """Topology generated with the relation's right neighborhoods as subbase."""
    return generate_topology(relation.universe, relation.right_neighborhoods())
