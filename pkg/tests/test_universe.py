import pytest
from hypothesis import given

from gotas import Universe, UniverseMismatchError

from strategies import universe_with_subsets


def test_construction_keeps_input_order():
    u = Universe(["a", "b", "c", "d"])
    assert u.size == 4
    assert u.labels == ("a", "b", "c", "d")
    assert [u.index(label) for label in u.labels] == [0, 1, 2, 3]


def test_singleton_universe():
    assert Universe(["x"]).size == 1


def test_duplicate_label_rejected():
    with pytest.raises(ValueError, match="duplicate"):
        Universe(["a", "a"])


def test_empty_universe_rejected():
    with pytest.raises(ValueError):
        Universe([])


def test_subset_of_named_elements():
    u = Universe(["a", "b", "c", "d"])
    assert u.subset(["a", "c"]).members() == ("a", "c")
    assert u.subset([]).members() == ()
    # input order and repeats are irrelevant
    assert u.subset(["c", "a", "a"]) == u.subset(["a", "c"])


def test_subset_unknown_label():
    u = Universe(["a", "b"])
    with pytest.raises(ValueError, match="unknown label"):
        u.subset(["z"])


def test_set_algebra_basics():
    u = Universe(["a", "b", "c", "d"])
    ac = u.subset(["a", "c"])
    assert ac.complement() == u.subset(["b", "d"])
    assert u.full() - u.subset(["a", "b", "c"]) == u.subset(["d"])
    assert u.empty().cardinality() == 0
    assert (ac | u.subset(["b"])).members() == ("a", "b", "c")
    assert (ac & u.subset(["c", "d"])) == u.subset(["c"])
    assert u.subset(["a"]).is_subset(ac)
    assert not ac.is_subset(u.subset(["a"]))
    assert "a" in ac and "b" not in ac
    assert str(ac) == "{a, c}"
    assert str(u.empty()) == "{}"


def test_mixed_universes_rejected():
    u1 = Universe(["a", "b"])
    u2 = Universe(["a", "b"])
    with pytest.raises(UniverseMismatchError):
        u1.subset(["a"]).union(u2.subset(["b"]))


def test_subsets_enumeration():
    u = Universe(["a", "b"])
    assert [s.members() for s in u.subsets()] == [(), ("a",), ("b",), ("a", "b")]


@given(universe_with_subsets())
def test_complement_involution(t):
    _, a, _ = t
    assert a.complement().complement() == a


@given(universe_with_subsets())
def test_mutual_inclusion_is_equality(t):
    _, a, b = t
    assert (a.is_subset(b) and b.is_subset(a)) == (a == b)


@given(universe_with_subsets())
def test_cardinality_inclusion_exclusion(t):
    _, a, b = t
    assert (a | b).cardinality() + (a & b).cardinality() == a.cardinality() + b.cardinality()
