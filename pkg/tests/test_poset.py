import itertools
import random

import pytest
from hypothesis import given

from conftest import CIRCLE4, SINGLETON, TWO_POINTS, chain, spaces
from finspace.errors import CycleError, EmptySpace, UnknownElement
from finspace.fixtures import FIG2_X, FIG3_X, FIG4_X
from finspace.poset import (
    build_space,
    components,
    down_set,
    empty_space,
    extremal_points,
    height,
    is_connected,
    is_isomorphic,
    maximum,
    minimum,
    non_hausdorff_suspension,
    punctured_link,
    up_set,
)
from finspace.simplicial import order_complex


def labels(X):
    return set(X.elements)


class TestBuild:
    def test_singleton(self):
        assert len(SINGLETON) == 1
        assert height(SINGLETON) == 0

    def test_fig2_x_transcription(self):
        assert len(FIG2_X) == 10
        assert len(FIG2_X.covers) == 15

    def test_cycle_rejected(self):
        with pytest.raises(CycleError):
            build_space(["x", "y"], [("x", "y"), ("y", "x")])

    def test_longer_cycle_rejected(self):
        with pytest.raises(CycleError):
            build_space(["x", "y", "z"], [("x", "y"), ("y", "z"), ("z", "x")])

    def test_unknown_label(self):
        with pytest.raises(UnknownElement):
            build_space(["x"], [("x", "y")])

    def test_duplicate_label(self):
        with pytest.raises(ValueError):
            build_space(["x", "x"])

    def test_covers_are_transitive_reduction(self):
        X = build_space(["x", "y", "z"], [("z", "y"), ("y", "x"), ("z", "x")])
        assert X.covers == {("z", "y"), ("y", "x")}
        assert X.lt("x", "z")

    def test_empty_space(self):
        E = empty_space()
        assert len(E) == 0
        assert components(E) == []
        with pytest.raises(EmptySpace):
            height(E)


class TestNeighbourhoods:
    def test_down_set_fig2_x(self):
        assert labels(down_set(FIG2_X, "a")) == {"a", "x1", "x3", "p1", "p2", "p3", "p4"}

    def test_down_set_minimal(self):
        assert labels(down_set(FIG2_X, "p1")) == {"p1"}

    def test_punctured_down_set_of_singleton(self):
        assert len(down_set(SINGLETON, "x", punctured=True)) == 0

    def test_up_sets_fig2_x(self):
        assert labels(up_set(FIG2_X, "x3", punctured=True)) == {"a", "b", "t"}
        assert len(up_set(FIG2_X, "a", punctured=True)) == 0
        assert labels(up_set(FIG2_X, "p2")) == {"p2", "x1", "x3", "a", "b", "t"}

    def test_punctured_links_fig4_x(self):
        d = punctured_link(FIG4_X, "d")
        assert labels(d) == {"p1", "p4"}
        assert not d.comparable("p1", "p4")
        assert labels(punctured_link(FIG4_X, "a")) == {"m1", "m4", "p1", "p2", "p3", "p4"}

    def test_punctured_link_of_singleton(self):
        assert len(punctured_link(SINGLETON, "x")) == 0

    def test_unknown_element(self):
        for op in (down_set, up_set, punctured_link):
            with pytest.raises(UnknownElement):
                op(FIG2_X, "zz")


class TestShape:
    def test_heights(self):
        assert height(FIG2_X) == 2
        assert height(CIRCLE4) == 1
        assert height(chain(5)) == 4

    def test_components(self):
        assert len(components(FIG2_X)) == 1
        assert components(TWO_POINTS) == [frozenset({"x"}), frozenset({"y"})]
        link = punctured_link(FIG4_X, "a")
        assert set(components(link)) == {frozenset({"m1", "p1", "p2"}), frozenset({"m4", "p3", "p4"})}

    def test_extremal_points(self):
        assert extremal_points(FIG2_X, "max") == {"a", "b", "t"}
        assert extremal_points(SINGLETON, "min") == {"x"}
        assert extremal_points(FIG4_X, "max") == {"a", "b", "c", "d"}

    def test_maximum_and_minimum(self):
        assert maximum(chain(3)) == "c2"
        assert minimum(chain(3)) == "c0"
        assert maximum(CIRCLE4) is None


class TestSuspension:
    def test_singleton(self):
        S = non_hausdorff_suspension(SINGLETON)
        assert len(S) == 3
        assert len(extremal_points(S, "max")) == 2
        assert extremal_points(S, "min") == {"x"}

    def test_two_points_gives_circle(self):
        assert is_isomorphic(non_hausdorff_suspension(TWO_POINTS), CIRCLE4)[0]

    def test_circle_gives_six_points(self):
        S = non_hausdorff_suspension(CIRCLE4)
        assert len(S) == 6 and height(S) == 2

    def test_empty_rejected(self):
        with pytest.raises(EmptySpace):
            non_hausdorff_suspension(empty_space())


class TestIsomorphism:
    def test_identity(self):
        ok, mapping = is_isomorphic(FIG2_X, FIG2_X)
        assert ok and mapping == {x: x for x in FIG2_X}

    def test_size_mismatch(self):
        assert is_isomorphic(SINGLETON, TWO_POINTS) == (False, None)

    def test_fig3_x_symmetry(self):
        swap = {"t1": "t3", "t3": "t1", "b1": "b4", "b4": "b1", "m1": "m3", "m3": "m1"}
        relabel = lambda x: swap.get(x, x)
        Y = build_space([relabel(x) for x in FIG3_X], [(relabel(u), relabel(v)) for u, v in FIG3_X.covers])
        ok, mapping = is_isomorphic(FIG3_X, Y)
        assert ok
        assert all((mapping[u], mapping[v]) in Y.covers for u, v in FIG3_X.covers)

    def test_chain_versus_antichain(self):
        assert not is_isomorphic(chain(3), build_space(["x", "y", "z"]))[0]

    @given(spaces(max_points=7), spaces(max_points=7))
    def test_witness_is_an_isomorphism(self, X, Y):
        ok, mapping = is_isomorphic(X, Y)
        if ok:
            assert sorted(mapping.values()) == sorted(Y)
            assert {(mapping[u], mapping[v]) for u, v in X.covers} == Y.covers

    @given(spaces(max_points=7))
    def test_random_relabelling(self, X):
        perm = list(X)
        random.Random(len(X)).shuffle(perm)
        rename = dict(zip(X, (f"q{p}" for p in perm)))
        Y = build_space(rename.values(), [(rename[u], rename[v]) for u, v in X.covers])
        assert is_isomorphic(X, Y)[0]


@given(spaces())
def test_order_via_down_sets(X):
    for x, y in itertools.product(X, repeat=2):
        assert X.leq(x, y) == (labels(down_set(X, x)) <= labels(down_set(X, y)))


@given(spaces())
def test_height_is_order_complex_dimension(X):
    assert height(X) == order_complex(X).dim


@given(spaces())
def test_components_match_one_skeleton(X):
    K = order_complex(X)
    parent = {v: v for v in K.vertices}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for s in K.simplices(1):
        parent[find(s[0])] = find(s[1])
    groups = {}
    for v in K.vertices:
        groups.setdefault(find(v), set()).add(v)
    assert {frozenset(g) for g in groups.values()} == set(components(X))
    assert is_connected(X) == (len(groups) == 1)


@given(spaces())
def test_round_trip_through_covers(X):
    assert build_space(X.elements, X.covers) == X


@given(spaces(max_points=6), spaces(max_points=6), spaces(max_points=6))
def test_isomorphism_is_an_equivalence(X, Y, Z):
    assert is_isomorphic(X, X)[0]
    assert is_isomorphic(X, Y)[0] == is_isomorphic(Y, X)[0]
    if is_isomorphic(X, Y)[0] and is_isomorphic(Y, Z)[0]:
        assert is_isomorphic(X, Z)[0]


@given(spaces())
def test_subspace_restricts_the_order(X):
    members = X.elements[::2]
    S = X.subspace(members)
    for x, y in itertools.product(members, repeat=2):
        assert S.lt(x, y) == X.lt(x, y)
