"""Brute-force reference operators and a mechanized law checker.

The oracle recomputes the directed base approximations from their defining
property by scanning the entire powerset, independently of the union and
intersection folds used by the fast operators. The checker runs a catalogue
of algebraic laws over all subsets (and all pairs, for the binary laws) of
a space and reports one result per law, with the first counterexample kept
as a witness. A deliberately corrupted gamma-upper operator is provided so
the checker's failure path itself stays under test.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable

from . import approximations as approx
from .approximations import (
    DIRECTION_ORDER,
    FAMILY_ORDER,
    Direction,
    Gotas,
    OperatorFamily,
)
from .order import PartialOrder, equality_order, validate_order
from .topology import generate_topology
from .universe import Subset, Universe

DEFAULT_ORACLE_CAP = 20
EXHAUSTIVE_CAP = 5

OpFn = Callable[[Gotas, Subset, Direction], Subset]


class CapExceededError(ValueError):
    """The universe is too large for a powerset scan with the given cap."""


def _guard_cap(g: Gotas, cap: int, what: str) -> None:
    if g.universe.size > cap:
        raise CapExceededError(
            f"universe size {g.universe.size} exceeds the {what} cap {cap}"
        )


def oracle_r_lower(
    g: Gotas, a: Subset, d: Direction, cap: int = DEFAULT_ORACLE_CAP
) -> Subset:
    """Greatest d-monotone open subset of ``a``, by exhaustive search.

    Scans every subset of the universe for the defining property and
    asserts the surviving candidates have a unique maximum under inclusion;
    that uniqueness is the existence fact the fast operator relies on.
    """
    _guard_cap(g, cap, "oracle")
    mono = g.order.is_increasing if d is Direction.INC else g.order.is_decreasing
    candidates = [
        s
        for s in g.universe.subsets()
        if g.topology.is_open(s) and s.is_subset(a) and mono(s)
    ]
    best = max(candidates, key=Subset.cardinality)
    for c in candidates:
        if not c.is_subset(best):
            raise RuntimeError(
                f"no unique greatest candidate inside {a}: {best} vs {c}"
            )
    return best


def oracle_r_upper(
    g: Gotas, a: Subset, d: Direction, cap: int = DEFAULT_ORACLE_CAP
) -> Subset:
    """Smallest d-monotone closed superset of ``a``, by exhaustive search."""
    _guard_cap(g, cap, "oracle")
    mono = g.order.is_increasing if d is Direction.INC else g.order.is_decreasing
    candidates = [
        s
        for s in g.universe.subsets()
        if g.topology.is_closed(s) and a.is_subset(s) and mono(s)
    ]
    best = min(candidates, key=Subset.cardinality)
    for c in candidates:
        if not best.is_subset(c):
            raise RuntimeError(
                f"no unique smallest candidate around {a}: {best} vs {c}"
            )
    return best


def oracle_diff(g: Gotas, cap: int = DEFAULT_ORACLE_CAP) -> tuple[int, list[str]]:
    """Compare the fast base operators against the oracle on every subset,
    both operators, both directions. Returns (comparisons, mismatches)."""
    _guard_cap(g, cap, "oracle")
    comparisons = 0
    mismatches: list[str] = []
    checks = (
        ("r_lower", approx.r_lower, oracle_r_lower),
        ("r_upper", approx.r_upper, oracle_r_upper),
    )
    for a in g.universe.subsets():
        for d in DIRECTION_ORDER:
            for name, fast, slow in checks:
                comparisons += 1
                got = fast(g, a, d)
                want = slow(g, a, d, cap)
                if got != want:
                    mismatches.append(
                        f"{name} {d.label} of {a}: main {got}, oracle {want}"
                    )
    return comparisons, mismatches


# ---------------------------------------------------------------------------
# Operator suite: the checker works against this bundle so a corrupted
# operator can be swapped in without touching the real implementations.


@dataclass(frozen=True)
class OperatorSuite:
    r_lower: OpFn
    r_upper: OpFn
    semi_lower: OpFn
    semi_upper: OpFn
    pre_lower: OpFn
    pre_upper: OpFn
    gamma_lower: OpFn
    gamma_upper: OpFn
    beta_lower: OpFn
    beta_upper: OpFn

    _PREFIX = {
        OperatorFamily.R: "r",
        OperatorFamily.S: "semi",
        OperatorFamily.P: "pre",
        OperatorFamily.GAMMA: "gamma",
        OperatorFamily.BETA: "beta",
    }

    def lower(self, family: OperatorFamily) -> OpFn:
        return getattr(self, f"{self._PREFIX[family]}_lower")

    def upper(self, family: OperatorFamily) -> OpFn:
        return getattr(self, f"{self._PREFIX[family]}_upper")

    def boundary(self, g: Gotas, a: Subset, family: OperatorFamily, d: Direction) -> Subset:
        return self.upper(family)(g, a, d) - self.lower(family)(g, a, d)

    def negative(self, g: Gotas, a: Subset, family: OperatorFamily, d: Direction) -> Subset:
        return self.upper(family)(g, a, d.opposite).complement()

    def accuracy(self, g: Gotas, a: Subset, family: OperatorFamily, d: Direction) -> Fraction:
        up = self.upper(family)(g, a, d)
        if up.is_empty():
            return Fraction(1)
        return Fraction(self.lower(family)(g, a, d).cardinality(), up.cardinality())


DEFAULT_SUITE = OperatorSuite(
    r_lower=approx.r_lower,
    r_upper=approx.r_upper,
    semi_lower=approx.semi_lower,
    semi_upper=approx.semi_upper,
    pre_lower=approx.pre_lower,
    pre_upper=approx.pre_upper,
    gamma_lower=approx.gamma_lower,
    gamma_upper=approx.gamma_upper,
    beta_lower=approx.beta_lower,
    beta_upper=approx.beta_upper,
)


def corrupted_gamma_upper(g: Gotas, a: Subset, d: Direction) -> Subset:
    """Deliberately wrong gamma upper: the union between the two composites
    replaced by an intersection. Exists so tests can prove the checker is
    able to fail; never used by the real operators."""
    return a | (
        approx.r_upper(g, approx.r_lower(g, a, d), d)
        & approx.r_lower(g, approx.r_upper(g, a, d), d)
    )


def corrupted_suite() -> OperatorSuite:
    return replace(DEFAULT_SUITE, gamma_upper=corrupted_gamma_upper)


# ---------------------------------------------------------------------------
# Law catalogue.


@dataclass
class Violation:
    space: str
    detail: str


@dataclass
class PropositionReport:
    proposition: str
    instances: int
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def _chk_sandwich(s, g, a):
    for family in FAMILY_ORDER:
        for d in DIRECTION_ORDER:
            lo = s.lower(family)(g, a, d)
            up = s.upper(family)(g, a, d)
            if not (lo.is_subset(a) and a.is_subset(up)):
                return (
                    f"{family.label} {d.label}: expected {lo} within {a} "
                    f"within {up}"
                )
    return None


def _upper_laws(up, label):
    def check(s, g, a, b):
        fn = up(s)
        for d in DIRECTION_ORDER:
            ua, ub = fn(g, a, d), fn(g, b, d)
            if a.is_subset(b) and not ua.is_subset(ub):
                return f"{d.label}: {label} not monotone at A={a}, B={b}"
            if not fn(g, a & b, d).is_subset(ua & ub):
                return f"{d.label}: {label}(A∩B) exceeds the intersection at A={a}, B={b}"
            if not (ua | ub).is_subset(fn(g, a | b, d)):
                return f"{d.label}: {label}(A∪B) misses the union at A={a}, B={b}"
        return None

    return check


def _lower_laws(lo, label):
    def check(s, g, a, b):
        fn = lo(s)
        for d in DIRECTION_ORDER:
            la, lb = fn(g, a, d), fn(g, b, d)
            if a.is_subset(b) and not la.is_subset(lb):
                return f"{d.label}: {label} not monotone at A={a}, B={b}"
            if not fn(g, a & b, d).is_subset(la & lb):
                return f"{d.label}: {label}(A∩B) exceeds the intersection at A={a}, B={b}"
            if not (la | lb).is_subset(fn(g, a | b, d)):
                return f"{d.label}: {label}(A∪B) misses the union at A={a}, B={b}"
        return None

    return check


def _exact_transfer(fam, label):
    def check(s, g, a):
        for d in DIRECTION_ORDER:
            if s.r_lower(g, a, d) == s.r_upper(g, a, d):
                if s.lower(fam)(g, a, d) != s.upper(fam)(g, a, d):
                    return f"{d.label}: A={a} is R exact but not {label} exact"
        return None

    return check


def _inclusion(first, second, text):
    def check(s, g, a):
        for d in DIRECTION_ORDER:
            x, y = first(s, g, a, d), second(s, g, a, d)
            if not x.is_subset(y):
                return f"{d.label}: A={a}: {text}: {x} not within {y}"
        return None

    return check


def _inclusion_chain(steps):
    # steps: ((fn, name), ...) asserted pairwise along the chain
    def check(s, g, a):
        for d in DIRECTION_ORDER:
            values = [(name, fn(s, g, a, d)) for fn, name in steps]
            for (nx, x), (ny, y) in zip(values, values[1:]):
                if not x.is_subset(y):
                    return f"{d.label}: A={a}: {nx} {x} not within {ny} {y}"
        return None

    return check


def _boundary_chain(fams):
    def check(s, g, a):
        for d in DIRECTION_ORDER:
            bounds = [s.boundary(g, a, f, d) for f in fams]
            for (fx, bx), (fy, by) in zip(
                zip(fams, bounds), zip(fams[1:], bounds[1:])
            ):
                if not bx.is_subset(by):
                    return (
                        f"{d.label}: A={a}: boundary {fx.label} {bx} not "
                        f"within boundary {fy.label} {by}"
                    )
        return None

    return check


def _neg_laws(fam):
    def check(s, g, a, b):
        for d in DIRECTION_ORDER:
            na = s.negative(g, a, fam, d)
            nb = s.negative(g, b, fam, d)
            nu = s.negative(g, a | b, fam, d)
            ni = s.negative(g, a & b, fam, d)
            # Proof forms, which imply the looser stated forms.
            if not nu.is_subset(na & nb):
                return f"{d.label}: A={a}, B={b}: Neg(A∪B) {nu} not within Neg(A)∩Neg(B)"
            if not (na | nb).is_subset(ni):
                return f"{d.label}: A={a}, B={b}: Neg(A)∪Neg(B) not within Neg(A∩B) {ni}"
            # Stated forms, asserted as well.
            if not nu.is_subset(na | nb):
                return f"{d.label}: A={a}, B={b}: Neg(A∪B) {nu} not within Neg(A)∪Neg(B)"
            if not (na & nb).is_subset(ni):
                return f"{d.label}: A={a}, B={b}: Neg(A)∩Neg(B) not within Neg(A∩B) {ni}"
        return None

    return check


def _chk_accuracy_floor(s, g, a):
    if a.is_empty():
        return None
    for d in DIRECTION_ORDER:
        base = s.accuracy(g, a, OperatorFamily.R, d)
        for fam in (OperatorFamily.GAMMA, OperatorFamily.BETA):
            got = s.accuracy(g, a, fam, d)
            if not base <= got:
                return f"{d.label}: A={a}: R accuracy {base} > {fam.label} accuracy {got}"
    return None


def _chk_accuracy_chain(s, g, a):
    if a.is_empty():
        return None
    for d in DIRECTION_ORDER:
        ar = s.accuracy(g, a, OperatorFamily.R, d)
        ag = s.accuracy(g, a, OperatorFamily.GAMMA, d)
        ab = s.accuracy(g, a, OperatorFamily.BETA, d)
        if not ar <= ag <= ab:
            return f"{d.label}: A={a}: accuracies R {ar}, gamma {ag}, beta {ab} not ascending"
    return None


def _chk_duality(s, g, a):
    comp = a.complement()
    cases = (
        ("upper Inc vs lower Dec", s.r_upper(g, a, Direction.INC),
         s.r_lower(g, comp, Direction.DEC).complement()),
        ("upper Dec vs lower Inc", s.r_upper(g, a, Direction.DEC),
         s.r_lower(g, comp, Direction.INC).complement()),
        ("lower Inc vs upper Dec", s.r_lower(g, a, Direction.INC),
         s.r_upper(g, comp, Direction.DEC).complement()),
        ("lower Dec vs upper Inc", s.r_lower(g, a, Direction.DEC),
         s.r_upper(g, comp, Direction.INC).complement()),
    )
    for name, left, right in cases:
        if left != right:
            return f"A={a}: duality {name}: {left} vs {right}"
    return None


def _lo(fam):
    return lambda s, g, a, d: s.lower(fam)(g, a, d)


def _up(fam):
    return lambda s, g, a, d: s.upper(fam)(g, a, d)


_R, _S, _P, _G, _B = FAMILY_ORDER

_CATALOGUE: tuple[tuple[str, str, Callable], ...] = (
    ("sandwich", "unary", _chk_sandwich),
    ("3.2", "binary", _upper_laws(lambda s: s.gamma_upper, "gamma upper")),
    ("3.3", "binary", _lower_laws(lambda s: s.gamma_lower, "gamma lower")),
    ("3.4", "unary", _exact_transfer(_G, "gamma")),
    ("3.5", "unary", _inclusion(_lo(_R), _lo(_G), "R lower within gamma lower")),
    ("3.6", "unary", _inclusion(_up(_G), _up(_R), "gamma upper within R upper")),
    ("3.7", "unary", _inclusion(_lo(_P), _lo(_G), "pre lower within gamma lower")),
    ("3.8", "unary", _inclusion(_lo(_S), _lo(_G), "semi lower within gamma lower")),
    ("3.9", "unary", _inclusion(_up(_P), _up(_G), "pre upper within gamma upper")),
    ("3.10", "unary", _inclusion(_up(_B), _up(_P), "beta upper within pre upper")),
    ("3.12", "binary", _upper_laws(lambda s: s.beta_upper, "beta upper")),
    ("3.13", "binary", _lower_laws(lambda s: s.beta_lower, "beta lower")),
    ("3.14", "unary", _exact_transfer(_B, "beta")),
    ("3.15", "unary", _inclusion(_lo(_R), _lo(_B), "R lower within beta lower")),
    ("3.16", "unary", _inclusion(_up(_B), _up(_R), "beta upper within R upper")),
    ("3.18", "binary", _neg_laws(_G)),
    ("3.19", "binary", _neg_laws(_B)),
    ("3.20", "unary", _inclusion_chain(
        ((_lo(_S), "semi lower"), (_lo(_G), "gamma lower"), (_lo(_B), "beta lower")))),
    ("3.21", "unary", _inclusion_chain(
        ((_up(_B), "beta upper"), (_up(_G), "gamma upper"), (_up(_S), "semi upper")))),
    ("3.23", "unary", _chk_accuracy_floor),
    ("3.25", "unary", _boundary_chain((_B, _G, _S))),
    ("3.26", "unary", _boundary_chain((_G, _R))),
    ("3.27", "unary", _boundary_chain((_B, _R))),
    ("3.28a", "unary", _chk_accuracy_chain),
    ("3.28b", "unary", _inclusion(_lo(_G), _lo(_B), "gamma lower within beta lower")),
    ("duality", "unary", _chk_duality),
)

PROPOSITION_IDS = tuple(pid for pid, _, _ in _CATALOGUE)


def check_propositions(
    g: Gotas,
    *,
    suite: OperatorSuite | None = None,
    samples: int | None = None,
    rng: random.Random | None = None,
    exhaustive_cap: int = EXHAUSTIVE_CAP,
    space_label: str | None = None,
) -> list[PropositionReport]:
    """Run the whole law catalogue over a space.

    Without ``samples`` the run is exhaustive (all subsets, all pairs) and
    the universe must not exceed ``exhaustive_cap``; with ``samples`` that
    many random subsets/pairs are drawn instead. Each report keeps at most
    the first witness found for its law.
    """
    suite = suite if suite is not None else DEFAULT_SUITE
    label = space_label or (
        f"U={{{', '.join(g.universe.labels)}}} with {len(g.topology.opens)} opens"
    )
    if samples is None:
        _guard_cap(g, exhaustive_cap, "exhaustive")
        subsets = list(g.universe.subsets())
        pairs = [(a, b) for a in subsets for b in subsets]
    else:
        rng = rng if rng is not None else random.Random(0)
        size = g.universe.size
        subsets = [g.universe.from_bits(rng.getrandbits(size)) for _ in range(samples)]
        pairs = [
            (
                g.universe.from_bits(rng.getrandbits(size)),
                g.universe.from_bits(rng.getrandbits(size)),
            )
            for _ in range(samples)
        ]

    reports = []
    for pid, kind, checker in _CATALOGUE:
        violations: list[Violation] = []
        instances = 0
        if kind == "unary":
            for a in subsets:
                instances += 1
                detail = checker(suite, g, a)
                if detail is not None:
                    violations.append(Violation(label, detail))
                    break
        else:
            for a, b in pairs:
                instances += 1
                detail = checker(suite, g, a, b)
                if detail is not None:
                    violations.append(Violation(label, detail))
                    break
        reports.append(PropositionReport(pid, instances, violations))
    return reports


# ---------------------------------------------------------------------------
# Random space generation for sweeps and agreement tests.


def _labels_for(size: int) -> tuple[str, ...]:
    if size <= 26:
        return tuple(string.ascii_lowercase[:size])
    return tuple(f"e{i}" for i in range(size))


def random_order(rng: random.Random, universe: Universe) -> PartialOrder:
    """Random partial order: a DAG over the index order (each forward edge
    with probability 1/2) closed reflexively and transitively; forward-only
    edges keep it antisymmetric by construction."""
    n = universe.size
    succ = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                succ[i] |= 1 << j
    for k in range(n):
        for i in range(n):
            if succ[i] >> k & 1:
                succ[i] |= succ[k]
    pairs = {
        (i, j) for i in range(n) for j in range(n) if succ[i] >> j & 1
    }
    return validate_order(universe, pairs)


def random_space(rng: random.Random, size: int, max_generators: int = 4) -> Gotas:
    """Random space: up to ``max_generators`` generator subsets, each element
    included with probability 1/2, plus a random partial order."""
    universe = Universe(_labels_for(size))
    count = rng.randint(0, max_generators)
    base = [universe.from_bits(rng.getrandbits(size)) for _ in range(count)]
    return Gotas(universe, generate_topology(universe, base), random_order(rng, universe))


def random_partition(rng: random.Random, universe: Universe) -> tuple[Subset, ...]:
    """Random partition of the universe into nonempty blocks."""
    buckets = rng.randint(1, universe.size)
    masks: dict[int, int] = {}
    for pos in range(universe.size):
        bucket = rng.randrange(buckets)
        masks[bucket] = masks.get(bucket, 0) | (1 << pos)
    blocks = [universe.from_bits(m) for m in masks.values()]
    return tuple(sorted(blocks, key=Subset.sort_key))


def partition_space(universe: Universe, blocks: Iterable[Subset]) -> Gotas:
    """Space whose topology is generated by the blocks of a partition, with
    the equality order."""
    blocks = tuple(blocks)
    covered = 0
    for block in blocks:
        if block.is_empty():
            raise ValueError("partition blocks must be nonempty")
        if covered & block.bits:
            raise ValueError("partition blocks must be disjoint")
        covered |= block.bits
    if covered != universe.full_mask:
        raise ValueError("partition blocks must cover the universe")
    return Gotas(universe, generate_topology(universe, blocks), equality_order(universe))
