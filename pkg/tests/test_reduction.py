import random

import pytest
from hypothesis import given

from conftest import CIRCLE4, CIRCLE6, SINGLETON, chain, spaces
from finspace.algebra import abelianization, fundamental_group, homology_space
from finspace.certificate import Verdict
from finspace.errors import EmptySpace, InvalidTrace, ParseError
from finspace.fixtures import FIG1_X, FIG2_X, FIG3_X
from finspace.poset import components, down_set, empty_space, is_isomorphic, maximum
from finspace.reduction import (
    MoveKind,
    ReductionMove,
    ReductionTrace,
    beat_points,
    core,
    homotopically_trivial_certificate,
    homotopy_equivalent,
    is_collapsible,
    is_contractible,
    weak_points,
    weak_points_by_halves,
)
from finspace.search import Outcome


class TestBeatPoints:
    def test_chain(self):
        assert beat_points(chain(3)) == {("c0", "up"), ("c1", "down"), ("c1", "up"), ("c2", "down")}

    def test_circle(self):
        assert beat_points(CIRCLE4) == set()

    def test_fig3_x(self):
        assert beat_points(FIG3_X) == set()


class TestCore:
    def test_chain(self):
        C, trace = core(chain(5))
        assert len(C) == 1 and len(trace) == 4
        assert trace.replay() == C

    def test_circle_is_minimal(self):
        C, trace = core(CIRCLE4)
        assert C == CIRCLE4 and len(trace) == 0

    def test_fig2_x_union_is_contractible(self):
        union = set(down_set(FIG2_X, "a").elements) | set(down_set(FIG2_X, "b").elements)
        assert len(core(FIG2_X.subspace(union))[0]) == 1

    def test_empty(self):
        with pytest.raises(EmptySpace):
            core(empty_space())

    def test_contractible(self):
        assert is_contractible(FIG1_X)
        assert not is_contractible(CIRCLE4)
        assert not is_contractible(FIG3_X)

    @given(spaces())
    def test_spaces_with_maximum_are_contractible(self, X):
        if maximum(X) is not None:
            assert is_contractible(X)

    @given(spaces())
    def test_core_has_no_beat_points(self, X):
        C, trace = core(X)
        assert beat_points(C) == set()
        assert trace.replay() == C
        assert all(m.kind in (MoveKind.BEAT_DOWN, MoveKind.BEAT_UP) for m in trace.moves)

    @given(spaces(max_points=9))
    def test_random_orders_give_isomorphic_cores(self, X):
        first, _ = core(X)
        rng = random.Random(len(X.covers))
        for _ in range(10):
            assert is_isomorphic(core(X, rng)[0], first)[0]


class TestWeakPoints:
    def test_circle(self):
        assert weak_points(CIRCLE4) == set()

    def test_fig3_x(self):
        assert weak_points(FIG3_X)

    def test_chain_contains_beat_points(self):
        assert {x for x, _ in beat_points(chain(3))} <= weak_points(chain(3))

    @given(spaces())
    def test_beat_points_are_weak(self, X):
        assert {x for x, _ in beat_points(X)} <= weak_points(X)

    @given(spaces())
    def test_link_form_agrees_with_halves(self, X):
        assert weak_points(X) == weak_points_by_halves(X)

    @given(spaces(max_points=7))
    def test_weak_removal_preserves_invariants(self, X):
        if len(components(X)) != 1:
            return
        h = homology_space(X)
        ab = abelianization(fundamental_group(X))
        for x in weak_points(X):
            if len(X) == 1:
                continue
            Y = X.remove(x)
            hy = homology_space(Y)
            assert all(hy.group(n) == h.group(n) for n in range(len(X)))
            assert abelianization(fundamental_group(Y)) == ab


class TestCollapsible:
    def test_fig3_x(self):
        trace = is_collapsible(FIG3_X)
        assert isinstance(trace, ReductionTrace)
        assert len(trace.replay()) == 1
        assert all(m.kind is MoveKind.WEAK for m in trace.moves)

    def test_circle(self):
        assert is_collapsible(CIRCLE4) is Outcome.NOT_COLLAPSIBLE_EXHAUSTED
        assert is_collapsible(CIRCLE4, prune=False) is Outcome.NOT_COLLAPSIBLE_EXHAUSTED

    def test_budget(self):
        assert is_collapsible(FIG3_X, budget=1, prune=False) is Outcome.UNKNOWN

    @given(spaces())
    def test_contractible_implies_collapsible(self, X):
        if is_contractible(X):
            assert isinstance(is_collapsible(X), ReductionTrace)

    @given(spaces(max_points=7))
    def test_prune_does_not_change_answers(self, X):
        a = is_collapsible(X)
        b = is_collapsible(X, prune=False)
        assert isinstance(a, ReductionTrace) == isinstance(b, ReductionTrace)


class TestHomotopyEquivalence:
    def test_chain_and_point(self):
        assert homotopy_equivalent(chain(3), SINGLETON)

    def test_circle_models_differ(self):
        assert beat_points(CIRCLE6) == set()
        assert not homotopy_equivalent(CIRCLE4, CIRCLE6)

    def test_empty(self):
        with pytest.raises(EmptySpace):
            homotopy_equivalent(empty_space(), SINGLETON)

    @given(spaces())
    def test_core(self, X):
        assert homotopy_equivalent(X, core(X)[0])


class TestCertificate:
    def test_singleton(self):
        assert homotopically_trivial_certificate(SINGLETON).verdict is Verdict.CONTRACTIBLE

    def test_fig3_x(self):
        cert = homotopically_trivial_certificate(FIG3_X)
        assert cert.verdict is Verdict.COLLAPSIBLE
        assert cert.trace.replay() == cert.trace.spaces()[-1]

    def test_circle(self):
        cert = homotopically_trivial_certificate(CIRCLE4)
        assert cert.verdict is Verdict.NOT_TRIVIAL
        assert cert.homology.betti == (1, 1)

    def test_empty(self):
        with pytest.raises(EmptySpace):
            homotopically_trivial_certificate(empty_space())


class TestTraces:
    def test_text_round_trip(self):
        trace = is_collapsible(FIG3_X)
        again = ReductionTrace.from_text(trace.to_text(), FIG3_X)
        assert again.moves == trace.moves
        assert again.replay() == trace.replay()

    def test_move_text(self):
        move = ReductionMove(MoveKind.QC, ("a", "b"), "rel(a,b)", 10)
        assert move.to_text() == "QC a b -> rel(a,b) @10"
        assert ReductionMove.from_text(move.to_text()) == move

    def test_bad_line(self):
        with pytest.raises(ParseError):
            ReductionMove.from_text("JUMP x")

    def test_illegal_move(self):
        trace = ReductionTrace(CIRCLE4, [ReductionMove(MoveKind.BEAT_DOWN, ("a",), None, 4)])
        with pytest.raises(InvalidTrace):
            trace.replay()
