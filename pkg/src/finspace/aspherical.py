"""a-points, strong asphericity and asphericity certificates for height <= 2.

A point is an *a-point* when its punctured link is a disjoint union of
contractible spaces.  For height <= 2, removing an a-point attaches at most
a cone on a discrete set to the order complex, so it neither creates nor
destroys asphericity.  A space that a-reduces to a point is *strong
aspherical*.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from finspace.algebra import fundamental_group, homology_space
from finspace.certificate import Certificate, Verdict
from finspace.errors import (
    EmptyComplex,
    InvalidTrace,
    NotAPoint,
    TheoremViolation,
    UnknownElement,
    WrongDimension,
    WrongHeight,
)
from finspace.poset import FiniteSpace, components, height, is_connected, punctured_link
from finspace.reduction import (
    MoveKind,
    ReductionMove,
    ReductionTrace,
    _point_removals,
    homotopically_trivial_certificate,
    is_contractible,
)
from finspace.search import DEFAULT_BUDGET, Outcome, depth_first
from finspace.simplicial import SimplicialComplex, collapse_to_dimension, face_poset


def is_a_point(X: FiniteSpace, x: str) -> bool:
    link = punctured_link(X, x)
    return all(is_contractible(link.subspace(c)) for c in components(link))


def a_points(X: FiniteSpace) -> set[str]:
    return {x for x in X if is_a_point(X, x)}


def _require_low_height(X):
    if len(X) and height(X) > 2:
        raise WrongHeight(f"needs height <= 2, got {height(X)}")


def a_reduce(X: FiniteSpace, x: str) -> FiniteSpace:
    _require_low_height(X)
    if x not in X:
        raise UnknownElement(x)
    if not is_a_point(X, x):
        raise NotAPoint(x)
    return X.remove(x)


def is_strong_aspherical(X: FiniteSpace, budget: int = DEFAULT_BUDGET, prune: bool = True):
    """Search for a-reductions down to a single point.

    Returns a :class:`ReductionTrace`, ``Outcome.NOT_SA_EXHAUSTED`` or
    ``Outcome.UNKNOWN``.  The empty space counts as strong aspherical with an
    empty trace.  With ``prune`` the search is skipped when ``H_2 != 0`` or
    ``H_1`` has torsion: an a-reduction only attaches a cone on a discrete
    set, which changes neither, and a point has neither.
    """
    _require_low_height(X)
    if len(X) <= 1:
        return ReductionTrace(X, [])
    if prune:
        hom = homology_space(X)
        if hom.group(2) != (0, ()) or hom.group(1)[1]:
            return Outcome.NOT_SA_EXHAUSTED
    result = depth_first(
        X,
        _point_removals(MoveKind.A_REDUCTION, is_a_point),
        lambda Y: len(Y) == 1,
        lambda Y: Y.elements,
        budget,
        Outcome.NOT_SA_EXHAUSTED,
    )
    if isinstance(result, Outcome):
        return result
    return ReductionTrace(X, result[0])


def theorem36_subspace_check(
    X: FiniteSpace, trace: ReductionTrace, a: str, budget: int = DEFAULT_BUDGET
) -> bool:
    """Confirm by search that ``X - a`` is strong aspherical given a witness for ``X``.

    Returns False only when the budget runs out; exhausting the search on a
    witnessed input raises :class:`TheoremViolation`.
    """
    if trace.initial != X or any(m.kind is not MoveKind.A_REDUCTION for m in trace.moves):
        raise InvalidTrace("expected an a-reduction trace starting at X")
    if len(trace.replay()) > 1:
        raise InvalidTrace("trace does not end in a single point")
    if a not in X:
        raise UnknownElement(a)
    result = is_strong_aspherical(X.remove(a), budget)
    if result is Outcome.UNKNOWN:
        return False
    if isinstance(result, Outcome):
        raise TheoremViolation(f"X - {a} is not strong aspherical although X is")
    return True


def strong_aspherical_complex(K: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> Certificate:
    """Strong asphericity of a complex of dimension <= 2, via its face poset.

    Also runs the collapse search to dimension 1; a complex is strong
    aspherical exactly when it collapses to a graph, so two definitive but
    different answers raise :class:`TheoremViolation`.
    """
    if K.is_empty():
        raise EmptyComplex("strong asphericity of the empty complex")
    if K.dim > 2:
        raise WrongDimension(f"needs dimension <= 2, got {K.dim}")
    P = face_poset(K)
    sa = is_strong_aspherical(P, budget)
    collapse = collapse_to_dimension(K, 1, budget)
    sa_yes = None if sa is Outcome.UNKNOWN else not isinstance(sa, Outcome)
    col_yes = None if collapse is Outcome.UNKNOWN else not isinstance(collapse, Outcome)
    if sa_yes is not None and col_yes is not None and sa_yes != col_yes:
        raise TheoremViolation(
            f"a-reduction search says {sa_yes}, collapse search says {col_yes}"
        )
    extra = {
        "a-reduction search": "found" if sa_yes else str(sa),
        "collapse to dimension 1": f"{len(collapse)} collapses" if col_yes else str(collapse),
    }
    subject = f"complex with {len(K.vertices)} vertices, dim {K.dim}"
    trace = sa if sa_yes else None
    if sa_yes is not None:
        decided = sa_yes
        narrative = ["face poset searched for a-reductions to a point"]
    elif col_yes is not None:
        decided = col_yes
        narrative = ["a-reduction search inconclusive; decided by collapsing to a graph, "
                     "which is equivalent to strong asphericity"]
    else:
        return Certificate(Verdict.UNKNOWN, subject, extra=extra,
                           narrative=["both searches ran out of budget"])
    verdict = Verdict.STRONG_ASPHERICAL if decided else Verdict.NOT_STRONG_ASPHERICAL
    return Certificate(verdict, subject, trace=trace, narrative=narrative, extra=extra)


def greedy_a_reduction(X: FiniteSpace) -> ReductionTrace:
    """Remove the first a-point in label order until one point or no a-point is left."""
    _require_low_height(X)
    moves = []
    Y = X
    while len(Y) > 1:
        x = next((x for x in Y if is_a_point(Y, x)), None)
        if x is None:
            break
        moves.append(ReductionMove(MoveKind.A_REDUCTION, (x,), None, len(Y)))
        Y = Y.remove(x)
    return ReductionTrace(X, moves)


def _component_verdict(C: FiniteSpace, budget: int):
    if len(C) == 1 or height(C) <= 1:
        return Verdict.ASPHERICAL, "height <= 1, so the order complex is a graph", None, None
    if is_contractible(C):
        return Verdict.ASPHERICAL, "contractible (core is a point)", None, None
    hom = homology_space(C)
    pres = fundamental_group(C, budget=budget)
    if pres.is_trivial():
        if hom.group(2)[0]:
            why = "simply connected with H_2 != 0, so pi_2 = H_2 != 0 (Hurewicz)"
            return Verdict.NON_ASPHERICAL, why, hom, pres
        why = "simply connected 2-complex with H_2 = 0, hence contractible"
        return Verdict.ASPHERICAL, why, hom, pres
    return Verdict.UNKNOWN, "pi_1 not proved trivial; no criterion applies", hom, pres


def asphericity_certificate(X: FiniteSpace, budget: int = DEFAULT_BUDGET) -> Certificate:
    """Decide asphericity of a height <= 2 space where a sound criterion applies.

    The space is a-reduced greedily (each step preserves asphericity in both
    directions), then every component of the remainder is examined.  A
    disconnected space is aspherical when each component is.
    """
    if len(X) == 0:
        raise ValueError("asphericity of the empty space")
    _require_low_height(X)
    trace = greedy_a_reduction(X)
    R = trace.replay()
    narrative = []
    if trace.moves:
        removed = " ".join(m.removed[0] for m in trace.moves)
        narrative.append(f"a-reduced by removing {removed}; asphericity is unchanged")
    verdicts = []
    hom = pres = None
    for comp in components(R):
        C = R.subspace(comp)
        verdict, why, h, p = _component_verdict(C, budget)
        narrative.append(f"component containing {min(comp)} ({len(comp)} points): {verdict}, {why}")
        verdicts.append(verdict)
        if h is not None and (hom is None or verdict is not Verdict.ASPHERICAL):
            hom, pres = h, p
    if Verdict.NON_ASPHERICAL in verdicts:
        verdict = Verdict.NON_ASPHERICAL
    elif all(v is Verdict.ASPHERICAL for v in verdicts):
        verdict = Verdict.ASPHERICAL
    else:
        verdict = Verdict.UNKNOWN
    return Certificate(
        verdict,
        f"space with {len(X)} points",
        trace=trace,
        homology=hom,
        presentation=pres,
        narrative=narrative,
        extra={"reduced size": len(R)},
    )


@dataclass
class WhiteheadReport:
    """Outcome of testing one instance of the finite-space asphericity conjecture.

    ``conclusion`` is ``CONFIRMED`` (``X - a`` certified aspherical),
    ``NOT_APPLICABLE`` (some premise definitively fails), ``REFUTED`` (all
    premises proved and ``X - a`` certified non-aspherical) or ``UNKNOWN``.
    """

    point: str
    premises: dict[str, bool | None]
    triviality: Certificate | None = None
    qc_certificate: Certificate | None = None
    complement: Certificate | None = None
    conclusion: str = "UNKNOWN"
    notes: list[str] = field(default_factory=list)

    @property
    def definitive(self) -> bool:
        return self.conclusion != "UNKNOWN"

    def report(self) -> str:
        lines = [f"point removed: {self.point}", "premises:"]
        for name, value in self.premises.items():
            shown = "unknown" if value is None else ("yes" if value else "NO")
            lines.append(f"  {name}: {shown}")
        for title, cert in (
            ("homotopically trivial", self.triviality),
            ("qc criterion", self.qc_certificate),
            ("asphericity of X - a", self.complement),
        ):
            if cert is not None:
                lines.append(f"[{title}]")
                lines += ["  " + line for line in cert.report().splitlines()]
        lines += [f"note: {n}" for n in self.notes]
        lines.append(f"conclusion: {self.conclusion}")
        return "\n".join(lines)

    def __str__(self):
        return self.report()


def whitehead_check(X: FiniteSpace, a: str, budget: int = DEFAULT_BUDGET) -> WhiteheadReport:
    """Check one instance: ``X`` homotopically trivial of height 2, ``a`` maximal, ``X - a`` connected."""
    from finspace.qc import theorem34_certificate

    if a not in X:
        raise UnknownElement(a)
    h = height(X)
    rest = X.remove(a)
    premises: dict[str, bool | None] = {
        "height 2": h == 2,
        "a maximal": not X.above(a),
        "X - a connected": len(rest) > 0 and is_connected(rest),
        "X homotopically trivial": None,
    }
    report = WhiteheadReport(a, premises)
    report.triviality = homotopically_trivial_certificate(X, budget)
    tv = report.triviality.verdict
    if tv is Verdict.NOT_TRIVIAL:
        premises["X homotopically trivial"] = False
    elif tv is not Verdict.UNKNOWN:
        premises["X homotopically trivial"] = True
    structural = premises["height 2"] and premises["a maximal"] and premises["X - a connected"]
    if structural:
        report.qc_certificate = theorem34_certificate(X, a, budget)
    if len(rest) and h <= 2:
        report.complement = asphericity_certificate(rest, budget)
        if report.qc_certificate is not None and report.qc_certificate.verdict is Verdict.ASPHERICAL:
            if report.complement.verdict is Verdict.NON_ASPHERICAL:
                raise TheoremViolation("qc criterion and a-reduction criterion disagree")
    complement_aspherical = any(
        c is not None and c.verdict is Verdict.ASPHERICAL
        for c in (report.qc_certificate, report.complement)
    )
    if any(v is False for v in premises.values()):
        report.conclusion = "NOT_APPLICABLE"
        report.notes.append("a premise fails, so the conjecture makes no claim here")
    elif complement_aspherical:
        report.conclusion = "CONFIRMED"
    elif (
        premises["X homotopically trivial"]
        and report.complement is not None
        and report.complement.verdict is Verdict.NON_ASPHERICAL
    ):
        report.conclusion = "REFUTED"
    return report
