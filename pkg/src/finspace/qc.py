"""qc-reductions of height-2 spaces and the asphericity certificate built on them.

A qc-reduction replaces two maximal points ``a, b`` whose union
``U_a ∪ U_b`` is contractible by one new point ``c`` (their *relative*)
lying over ``(U_a ∪ U_b) - {a, b}``.  A height-2 space is qc-reducible when a
sequence of such moves reaches a space with a maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from finspace.algebra import homology_space
from finspace.certificate import Certificate, Verdict
from finspace.errors import (
    Disconnected,
    InvalidTrace,
    NotReducible,
    PreconditionViolated,
    TheoremViolation,
    UnknownElement,
    WrongHeight,
)
from finspace.poset import (
    FiniteSpace,
    components,
    down_set,
    extremal_points,
    height,
    is_connected,
    maximum,
)
from finspace.reduction import (
    MoveKind,
    ReductionMove,
    ReductionTrace,
    apply_move,
    is_contractible,
)
from finspace.search import DEFAULT_BUDGET, Outcome, depth_first


def relative_label(a: str, b: str) -> str:
    x, y = sorted((a, b))
    return f"rel({x},{y})"


@dataclass(frozen=True)
class QcMove:
    a: str
    b: str
    c: str

    def as_reduction_move(self, size_before=None) -> ReductionMove:
        return ReductionMove(MoveKind.QC, (self.a, self.b), self.c, size_before)


class RelativeForest(dict):
    """Maps each relative to the pair of points it replaced, in creation order."""

    @classmethod
    def from_trace(cls, trace: ReductionTrace) -> RelativeForest:
        forest = cls()
        for move in trace.moves:
            if move.kind is not MoveKind.QC:
                raise InvalidTrace(f"not a qc move: {move.to_text()}")
            forest[move.added] = tuple(move.removed)
        return forest

    def leaves(self, c: str) -> set[str]:
        if c not in self:
            return {c}
        a, b = self[c]
        return self.leaves(a) | self.leaves(b)

    def lineage(self, a: str) -> set[str]:
        """``a`` together with every relative that descends from it."""
        out = {a}
        for c, (x, y) in self.items():
            if x in out or y in out:
                out.add(c)
        return out


def _union_down(X, a, b):
    return X.subspace(X.below(a) | X.below(b) | {a, b})


def _intersection_down(X, a, b):
    return X.subspace((X.below(a) | {a}) & (X.below(b) | {b}))


def _pairs(X: FiniteSpace):
    for a, b in combinations(sorted(extremal_points(X, "max")), 2):
        if is_contractible(_union_down(X, a, b)):
            yield a, b


def _require_height_two(X):
    h = height(X) if len(X) else None
    if h != 2:
        raise WrongHeight(f"qc-reductions need height 2, got {h}")


def qc_candidates(X: FiniteSpace) -> list[tuple[str, str]]:
    """Pairs of maximal points, in label order, with ``U_a ∪ U_b`` contractible."""
    _require_height_two(X)
    return list(_pairs(X))


def _check_maximal_pair(X, a, b):
    for x in (a, b):
        if x not in X:
            raise UnknownElement(x)
        if X.above(x):
            raise PreconditionViolated(f"{x} is not maximal")
    if a == b:
        raise PreconditionViolated("the two points must differ")


def qc_intermediate(X: FiniteSpace, a: str, b: str) -> FiniteSpace:
    """``X ∪ {c}`` with ``c`` placed above ``a`` and ``b``."""
    _check_maximal_pair(X, a, b)
    c = relative_label(a, b)
    if c in X:
        raise ValueError(f"label {c} already in use")
    below = {x: X.below(x) for x in X}
    below[c] = X.below(a) | X.below(b) | {a, b}
    return FiniteSpace(below)


def qc_reduce(X: FiniteSpace, a: str, b: str) -> tuple[FiniteSpace, QcMove]:
    """Replace maximal ``a, b`` by their relative ``c``.

    ``c`` covers the maximal elements of ``(U_a ∪ U_b) - {a, b}``, so that
    ``U_c - {c}`` equals that set.  Raises :class:`NotReducible` unless
    ``U_a ∪ U_b`` is contractible.
    """
    _require_height_two(X)
    _check_maximal_pair(X, a, b)
    if not is_contractible(_union_down(X, a, b)):
        raise NotReducible(f"U_{a} ∪ U_{b} is not contractible")
    Y = qc_intermediate(X, a, b)
    a, b = sorted((a, b))
    return Y.remove(a, b), QcMove(a, b, relative_label(a, b))


@dataclass(frozen=True)
class Prop25Report:
    union_contractible: bool
    intersection_connected: bool
    intersection_contractible: bool
    hypothesis_holds: bool

    @property
    def triple(self) -> tuple[bool, bool, bool]:
        return (self.union_contractible, self.intersection_connected, self.intersection_contractible)

    @property
    def agree(self) -> bool:
        return len(set(self.triple)) == 1


def prop25_check(X: FiniteSpace, a: str, b: str) -> Prop25Report:
    """Evaluate the three equivalent conditions on two maximal points.

    For height <= 2 and ``H_2(X) = 0`` the conditions (union contractible;
    intersection nonempty and connected; intersection contractible) must
    agree, and a disagreement raises :class:`TheoremViolation`.  When
    ``H_2(X) != 0`` the triple is returned with ``hypothesis_holds=False``
    and nothing is asserted.
    """
    if len(X) == 0 or height(X) > 2:
        raise WrongHeight("needs a nonempty space of height <= 2")
    _check_maximal_pair(X, a, b)
    union = is_contractible(_union_down(X, a, b))
    meet = _intersection_down(X, a, b)
    connected = len(meet) > 0 and len(components(meet)) == 1
    contractible = len(meet) > 0 and is_contractible(meet)
    h2 = homology_space(X).group(2)
    report = Prop25Report(union, connected, contractible, h2 == (0, ()))
    if report.hypothesis_holds and not report.agree:
        raise TheoremViolation(f"conditions disagree for {a}, {b}: {report.triple}")
    return report


def is_qc_reducible(X: FiniteSpace, budget: int = DEFAULT_BUDGET, prune: bool = True):
    """Search for qc-reductions ending in a space with a maximum.

    Returns ``(trace, forest)``, ``Outcome.NOT_REDUCIBLE_EXHAUSTED`` or
    ``Outcome.UNKNOWN``.  With ``prune`` a space with nonzero reduced homology
    is rejected immediately: qc-reductions preserve weak homotopy type and a
    space with maximum is contractible.
    """
    _require_height_two(X)
    if prune and not homology_space(X).is_acyclic():
        return Outcome.NOT_REDUCIBLE_EXHAUSTED

    def expand(Y):
        for a, b in _pairs(Y):
            c = relative_label(a, b)
            below = {x: Y.below(x) for x in Y if x not in (a, b)}
            below[c] = Y.below(a) | Y.below(b)
            yield ReductionMove(MoveKind.QC, (a, b), c, len(Y)), FiniteSpace(below)

    result = depth_first(
        X,
        expand,
        lambda Y: maximum(Y) is not None,
        lambda Y: Y.elements,
        budget,
        Outcome.NOT_REDUCIBLE_EXHAUSTED,
    )
    if isinstance(result, Outcome):
        return result
    trace = ReductionTrace(X, result[0])
    return trace, RelativeForest.from_trace(trace)


def _replay_to_maximum(trace: ReductionTrace) -> FiniteSpace:
    try:
        final = trace.replay()
    except InvalidTrace:
        raise
    except Exception as exc:
        raise InvalidTrace(str(exc)) from exc
    if maximum(final) is None:
        raise InvalidTrace("trace does not end in a space with maximum")
    return final


def split_phases(
    X: FiniteSpace, trace: ReductionTrace, forest: RelativeForest, a: str
) -> tuple[ReductionTrace, int]:
    """Reorder a qc trace so moves touching ``a`` and its relatives come last.

    Returns the reordered trace and the index where the second phase starts.
    The moves not involving the lineage of ``a`` are performed first in their
    original order, then the skipped ones in theirs.
    """
    if trace.initial != X:
        raise InvalidTrace("trace does not start at X")
    if dict(forest) != dict(RelativeForest.from_trace(trace)):
        raise InvalidTrace("forest does not match the trace")
    _replay_to_maximum(trace)
    if a not in X or X.above(a):
        raise PreconditionViolated(f"{a} is not a maximal point")
    lineage = forest.lineage(a)
    first = [m for m in trace.moves if not lineage.intersection(m.removed)]
    second = [m for m in trace.moves if lineage.intersection(m.removed)]
    moves = [
        ReductionMove(m.kind, m.removed, m.added, len(X) - i)
        for i, m in enumerate(first + second)
    ]
    reordered = ReductionTrace(X, moves)
    try:
        _replay_to_maximum(reordered)
    except InvalidTrace as exc:
        raise TheoremViolation(f"reordered trace is invalid: {exc}") from exc
    return reordered, len(first)


@dataclass(frozen=True)
class Lemma33Report:
    hat_connected: bool
    betti1_hat: int | None
    betti1_complement: int

    @property
    def passed(self) -> bool:
        return self.hat_connected and self.betti1_hat == self.betti1_complement


def lemma33_check(Y: FiniteSpace, a: str, trace: ReductionTrace) -> Lemma33Report:
    """Abelianized check that ``U_a - {a}`` carries the fundamental group of ``Y - a``.

    Preconditions: ``Y`` has height 2, ``a`` is maximal, ``Y - a`` is
    connected and ``trace`` is a qc-reduction of ``Y`` to a space with
    maximum in which every move involves ``a`` or one of its relatives.
    """
    if len(Y) == 0 or height(Y) != 2:
        raise PreconditionViolated("Y must have height 2")
    if a not in Y or Y.above(a):
        raise PreconditionViolated(f"{a} is not a maximal point")
    rest = Y.remove(a)
    if len(rest) == 0 or not is_connected(rest):
        raise PreconditionViolated("Y - a is not connected")
    if trace.initial != Y:
        raise PreconditionViolated("trace does not start at Y")
    try:
        _replay_to_maximum(trace)
    except InvalidTrace as exc:
        raise PreconditionViolated(str(exc)) from exc
    current = a
    for move in trace.moves:
        if current not in move.removed:
            raise PreconditionViolated(f"{move.to_text()} does not involve a relative of {a}")
        current = move.added
    hat = down_set(Y, a, punctured=True)
    connected = len(hat) > 0 and is_connected(hat)
    b_hat = homology_space(hat).group(1)[0] if len(hat) else None
    return Lemma33Report(connected, b_hat, homology_space(rest).group(1)[0])


def theorem34_certificate(X: FiniteSpace, a: str, budget: int = DEFAULT_BUDGET) -> Certificate:
    """Certify that ``X - a`` is aspherical when ``X`` is qc-reducible."""
    _require_height_two(X)
    if a not in X:
        raise UnknownElement(a)
    if X.above(a):
        raise PreconditionViolated(f"{a} is not maximal")
    rest = X.remove(a)
    if not is_connected(rest):
        raise Disconnected(f"X - {a} is not connected")
    subject = f"X - {a}"
    found = is_qc_reducible(X, budget)
    if isinstance(found, Outcome):
        return Certificate(
            Verdict.UNKNOWN,
            subject,
            narrative=[f"qc-reducibility search: {found}; the qc criterion does not apply"],
        )
    trace, forest = found
    narrative = [f"X is qc-reducible in {len(trace)} moves"]
    reordered, boundary = split_phases(X, trace, forest, a)
    narrative.append(
        f"moves reordered: {boundary} avoid {a} and its relatives, "
        f"{len(reordered) - boundary} involve them"
    )
    spaces = reordered.spaces()
    Y = spaces[boundary]
    second = ReductionTrace(Y, reordered.moves[boundary:])
    try:
        report = lemma33_check(Y, a, second)
        narrative.append(
            f"U_{a} - {a} is {'connected' if report.hat_connected else 'disconnected'}; "
            f"b1(U_{a} - {a}) = {report.betti1_hat}, b1(Y - {a}) = {report.betti1_complement}"
        )
        if not report.passed:
            raise TheoremViolation(f"abelianized pi_1 check failed: {report}")
    except PreconditionViolated as exc:
        narrative.append(f"phase-two check skipped: {exc}")
    narrative.append(
        f"pi_1(X - {a}) is free (height of U_{a} - {a} <= 1); with X weakly contractible, "
        f"Cockroft's theorem gives X - {a} aspherical"
    )
    return Certificate(Verdict.ASPHERICAL, subject, trace=trace, narrative=narrative,
                       extra={"phase boundary": boundary})
