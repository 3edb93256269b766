"""Beat points, Stong cores, weak points and collapsibility.

Removing a beat point is a strong deformation retraction, so the core
(what remains once no beat points are left) decides contractibility: a space
is contractible exactly when its core is a point.  Removing a weak point
is only a weak homotopy equivalence; collapsibility is decided by a bounded
search over such removals.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from finspace.algebra import fundamental_group, homology_space
from finspace.certificate import Certificate, Verdict
from finspace.errors import EmptySpace, InvalidTrace, ParseError
from finspace.poset import FiniteSpace, height, is_connected, punctured_link
from finspace.search import DEFAULT_BUDGET, Outcome, depth_first


class MoveKind(enum.Enum):
    BEAT_DOWN = "BEAT_DOWN"
    BEAT_UP = "BEAT_UP"
    WEAK = "WEAK"
    QC = "QC"
    A_REDUCTION = "A_REDUCTION"


@dataclass(frozen=True)
class ReductionMove:
    kind: MoveKind
    removed: tuple[str, ...]
    added: str | None = None
    size_before: int | None = None

    def to_text(self) -> str:
        text = f"{self.kind.value} {' '.join(self.removed)}"
        if self.added is not None:
            text += f" -> {self.added}"
        if self.size_before is not None:
            text += f" @{self.size_before}"
        return text

    @classmethod
    def from_text(cls, line: str, lineno: int | None = None) -> ReductionMove:
        tokens = line.split()
        if not tokens:
            raise ParseError("empty move", lineno)
        try:
            kind = MoveKind(tokens[0])
        except ValueError:
            raise ParseError(f"unknown move kind {tokens[0]!r}", lineno) from None
        size = None
        if tokens[-1].startswith("@"):
            try:
                size = int(tokens[-1][1:])
            except ValueError:
                raise ParseError(f"bad size marker {tokens[-1]!r}", lineno) from None
            tokens = tokens[:-1]
        added = None
        if "->" in tokens:
            k = tokens.index("->")
            if k != len(tokens) - 2:
                raise ParseError("'->' must be followed by exactly one label", lineno)
            added = tokens[-1]
            tokens = tokens[:k]
        removed = tuple(tokens[1:])
        expected = 2 if kind is MoveKind.QC else 1
        if len(removed) != expected or (added is None) == (kind is MoveKind.QC):
            raise ParseError(f"malformed {kind.value} move", lineno)
        return cls(kind, removed, added, size)


def apply_move(X: FiniteSpace, move: ReductionMove) -> FiniteSpace:
    """Perform one move after checking its precondition; raises InvalidTrace."""
    if move.size_before is not None and move.size_before != len(X):
        raise InvalidTrace(f"{move.to_text()}: space has {len(X)} points")
    for x in move.removed:
        if x not in X:
            raise InvalidTrace(f"{move.to_text()}: {x!r} not in space")
    kind = move.kind
    if kind is MoveKind.QC:
        from finspace.qc import qc_reduce

        a, b = move.removed
        try:
            Y, qc_move = qc_reduce(X, a, b)
        except Exception as exc:
            raise InvalidTrace(f"{move.to_text()}: {exc}") from exc
        if qc_move.c != move.added:
            raise InvalidTrace(f"{move.to_text()}: relative would be {qc_move.c}")
        return Y
    (x,) = move.removed
    if kind is MoveKind.BEAT_DOWN:
        ok = is_down_beat(X, x)
    elif kind is MoveKind.BEAT_UP:
        ok = is_up_beat(X, x)
    elif kind is MoveKind.WEAK:
        ok = is_weak_point(X, x)
    else:
        from finspace.aspherical import is_a_point

        ok = height(X) <= 2 and is_a_point(X, x)
    if not ok:
        raise InvalidTrace(f"{move.to_text()}: precondition fails")
    return X.remove(x)


@dataclass
class ReductionTrace:
    """Moves applied in order to ``initial``; replaying checks every step."""

    initial: FiniteSpace
    moves: list[ReductionMove] = field(default_factory=list)

    def __len__(self):
        return len(self.moves)

    def spaces(self) -> list[FiniteSpace]:
        out = [self.initial]
        for move in self.moves:
            out.append(apply_move(out[-1], move))
        return out

    def replay(self) -> FiniteSpace:
        return self.spaces()[-1]

    def to_text(self) -> str:
        return "\n".join(m.to_text() for m in self.moves)

    @classmethod
    def from_text(cls, text: str, initial: FiniteSpace) -> ReductionTrace:
        moves = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                moves.append(ReductionMove.from_text(line, lineno))
        return cls(initial, moves)


# -- beat points and cores ---------------------------------------------------


def is_down_beat(X: FiniteSpace, x: str) -> bool:
    """``U_x - {x}`` has a maximum, i.e. ``x`` covers exactly one element."""
    return len(X.lower_covers(x)) == 1


def is_up_beat(X: FiniteSpace, x: str) -> bool:
    return len(X.upper_covers(x)) == 1


def beat_points(X: FiniteSpace) -> set[tuple[str, str]]:
    """All ``(x, "down")`` and ``(x, "up")`` beat points."""
    out = set()
    for x in X:
        if is_down_beat(X, x):
            out.add((x, "down"))
        if is_up_beat(X, x):
            out.add((x, "up"))
    return out


def _beat_kind(below, above, x):
    # With mutable strict down/up sets: Û_x has a maximum y iff |U_y| = |Û_x|.
    lo = below[x]
    if lo and any(len(below[y]) == len(lo) - 1 for y in lo):
        return MoveKind.BEAT_DOWN
    hi = above[x]
    if hi and any(len(above[y]) == len(hi) - 1 for y in hi):
        return MoveKind.BEAT_UP
    return None


def _strip_beat_points(X: FiniteSpace, rng: random.Random | None = None):
    below = {x: set(X.below(x)) for x in X}
    above = {x: set(X.above(x)) for x in X}
    moves = []
    while len(below) > 1:
        if rng is None:
            pick = None
            for x in sorted(below):
                kind = _beat_kind(below, above, x)
                if kind is not None:
                    pick = (x, kind)
                    break
        else:
            found = [(x, k) for x in sorted(below) if (k := _beat_kind(below, above, x))]
            pick = rng.choice(found) if found else None
        if pick is None:
            break
        x, kind = pick
        moves.append(ReductionMove(kind, (x,), None, len(below)))
        for y in below.pop(x):
            above[y].discard(x)
        for z in above.pop(x):
            below[z].discard(x)
    return set(below), moves


def core(X: FiniteSpace, rng: random.Random | None = None) -> tuple[FiniteSpace, ReductionTrace]:
    """Remove beat points until none is left.

    By default the first beat point in label order is removed at each step;
    pass ``rng`` to pick uniformly among the current beat points instead.
    """
    if len(X) == 0:
        raise EmptySpace("core of the empty space")
    members, moves = _strip_beat_points(X, rng)
    return X.subspace(members), ReductionTrace(X, moves)


def is_contractible(X: FiniteSpace) -> bool:
    if len(X) == 0:
        raise EmptySpace("contractibility of the empty space")
    members, _ = _strip_beat_points(X)
    return len(members) == 1


def _contractible_or_false(X: FiniteSpace) -> bool:
    return len(X) > 0 and is_contractible(X)


def is_weak_point(X: FiniteSpace, x: str) -> bool:
    """``x`` is weak when its punctured link ``C^_x`` is contractible."""
    return _contractible_or_false(punctured_link(X, x))


def weak_points(X: FiniteSpace) -> set[str]:
    return {x for x in X if is_weak_point(X, x)}


def weak_points_by_halves(X: FiniteSpace) -> set[str]:
    """Weak points computed from ``U^_x`` or ``F^_x`` being contractible."""
    out = set()
    for x in X:
        lower = X.subspace(X.below(x))
        upper = X.subspace(X.above(x))
        if _contractible_or_false(lower) or _contractible_or_false(upper):
            out.add(x)
    return out


def homotopy_equivalent(X: FiniteSpace, Y: FiniteSpace) -> bool:
    """Same homotopy type, decided by comparing cores up to isomorphism."""
    from finspace.poset import is_isomorphic

    if len(X) == 0 or len(Y) == 0:
        raise EmptySpace("homotopy type of the empty space")
    return is_isomorphic(core(X)[0], core(Y)[0])[0]


# -- collapsibility ------------------------------------------------------------


def _point_removals(kind: MoveKind, predicate):
    def expand(Y: FiniteSpace):
        for x in Y:
            if predicate(Y, x):
                yield ReductionMove(kind, (x,), None, len(Y)), Y.remove(x)

    return expand


def is_collapsible(X: FiniteSpace, budget: int = DEFAULT_BUDGET, prune: bool = True):
    """Search for elementary collapses (weak point removals) down to a point.

    Returns a :class:`ReductionTrace`, ``Outcome.NOT_COLLAPSIBLE_EXHAUSTED``
    or ``Outcome.UNKNOWN``.  With ``prune`` the search is skipped when the
    reduced homology is nonzero: weak point removals preserve homology and a
    point has none.
    """
    if len(X) == 0:
        raise EmptySpace("collapsibility of the empty space")
    if prune and not homology_space(X).is_acyclic():
        return Outcome.NOT_COLLAPSIBLE_EXHAUSTED
    result = depth_first(
        X,
        _point_removals(MoveKind.WEAK, is_weak_point),
        lambda Y: len(Y) == 1,
        lambda Y: Y.elements,
        budget,
        Outcome.NOT_COLLAPSIBLE_EXHAUSTED,
    )
    if isinstance(result, Outcome):
        return result
    return ReductionTrace(X, result[0])


def homotopically_trivial_certificate(X: FiniteSpace, budget: int = DEFAULT_BUDGET) -> Certificate:
    """Try to prove or refute that ``X`` is weakly equivalent to a point.

    Cheap complete checks run first: the core, then homology (nonzero
    reduced homology is a definitive refutation), then the collapse and
    qc-reduction searches, and finally the Hurewicz/Whitehead argument on an
    acyclic space whose fundamental group simplifies to the trivial group.
    """
    if len(X) == 0:
        raise EmptySpace("triviality of the empty space")
    subject = f"space with {len(X)} points"
    core_space, core_trace = core(X)
    if len(core_space) == 1:
        return Certificate(
            Verdict.CONTRACTIBLE,
            subject,
            trace=core_trace,
            narrative=["beat points removed down to a single point (Stong)"],
        )
    hom = homology_space(X)
    if not hom.is_acyclic():
        return Certificate(
            Verdict.NOT_TRIVIAL,
            subject,
            homology=hom,
            narrative=["reduced integral homology of the order complex is nonzero (McCord)"],
        )
    found = is_collapsible(X, budget)
    if isinstance(found, ReductionTrace):
        return Certificate(
            Verdict.COLLAPSIBLE,
            subject,
            trace=found,
            homology=hom,
            narrative=["weak point removals reach a point; each is a weak equivalence"],
        )
    narrative = [f"collapsibility search: {found}"]
    if height(X) == 2:
        from finspace.qc import is_qc_reducible

        qc = is_qc_reducible(X, budget)
        if not isinstance(qc, Outcome):
            return Certificate(
                Verdict.QC_REDUCIBLE,
                subject,
                trace=qc[0],
                homology=hom,
                narrative=narrative
                + ["qc-reductions reach a space with maximum; each preserves weak homotopy type"],
            )
        narrative.append(f"qc-reducibility search: {qc}")
    if is_connected(X):
        pres = fundamental_group(X)
        if pres.is_trivial():
            return Certificate(
                Verdict.WEAK_TRIVIAL_PROVED,
                subject,
                homology=hom,
                presentation=pres,
                narrative=narrative
                + ["acyclic and simply connected, hence weakly contractible (Hurewicz, Whitehead)"],
            )
        narrative.append("fundamental group presentation did not simplify to the trivial group")
        return Certificate(Verdict.UNKNOWN, subject, homology=hom, presentation=pres, narrative=narrative)
    return Certificate(Verdict.UNKNOWN, subject, homology=hom, narrative=narrative)
