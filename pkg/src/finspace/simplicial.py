"""Simplicial complexes and the functors to and from finite spaces.

``order_complex`` sends a finite space to the complex of its chains and
``face_poset`` sends a complex to the poset of its simplices; their composite
on a complex is the barycentric subdivision.  Simplices are sorted tuples of
vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

from finspace.errors import EmptyComplex, EmptySpace, UnknownVertex
from finspace.poset import FiniteSpace, extremal_points
from finspace.search import DEFAULT_BUDGET, Outcome, depth_first

Simplex = tuple[str, ...]


def _absorb(simplices: Iterable[Simplex]) -> frozenset[Simplex]:
    # Drop every simplex that is a face of another one.
    kept: list[Simplex] = []
    kept_sets: list[frozenset[str]] = []
    for s in sorted(set(simplices), key=lambda t: (-len(t), t)):
        fs = frozenset(s)
        if not any(fs <= k for k in kept_sets):
            kept.append(s)
            kept_sets.append(fs)
    return frozenset(kept)


class SimplicialComplex:
    """A finite abstract simplicial complex stored by its facets."""

    def __init__(self, facets: Iterable[Iterable[str]] = ()):
        normalized = []
        for f in facets:
            s = tuple(sorted(set(f)))
            if not s:
                continue
            normalized.append(s)
        self.facets: frozenset[Simplex] = _absorb(normalized)
        self.vertices: frozenset[str] = frozenset(v for f in self.facets for v in f)

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    def is_empty(self) -> bool:
        return not self.facets

    @cached_property
    def _simplices(self) -> tuple[Simplex, ...]:
        faces = set()
        for f in self.facets:
            for k in range(1, len(f) + 1):
                faces.update(combinations(f, k))
        return tuple(sorted(faces, key=lambda s: (len(s), s)))

    def simplices(self, dim: int | None = None) -> tuple[Simplex, ...]:
        """All simplices (or those of one dimension), sorted canonically."""
        if dim is None:
            return self._simplices
        return tuple(s for s in self._simplices if len(s) == dim + 1)

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for s in self._simplices:
            counts[len(s) - 1] += 1
        return tuple(counts)

    def __contains__(self, simplex):
        s = frozenset(simplex)
        return any(s <= frozenset(f) for f in self.facets)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, facets={sorted(self.facets)})"

    def skeleton(self, k: int) -> SimplicialComplex:
        return SimplicialComplex(s for s in self._simplices if len(s) <= k + 1)


def order_complex(X: FiniteSpace) -> SimplicialComplex:
    """Complex whose simplices are the nonempty chains of ``X``.

    Facets are the maximal chains, i.e. the maximal paths of the Hasse diagram.
    """
    if len(X) == 0:
        raise EmptySpace("order complex of the empty space")
    chains = []

    def walk(x, chain):
        lower = X.lower_covers(x)
        if not lower:
            chains.append(chain)
            return
        for y in sorted(lower):
            walk(y, chain + (y,))

    for top in sorted(extremal_points(X, "max")):
        walk(top, (top,))
    return SimplicialComplex(chains)


def simplex_label(simplex: Simplex) -> str:
    return ",".join(simplex)


def face_poset(K: SimplicialComplex, label=simplex_label) -> FiniteSpace:
    """Poset of simplices of ``K`` ordered by inclusion."""
    if K.is_empty():
        raise EmptyComplex("face poset of the empty complex")
    below = {}
    for s in K.simplices():
        below[label(s)] = frozenset(
            label(t) for k in range(1, len(s)) for t in combinations(s, k)
        )
    return FiniteSpace(below)


def barycentric(K: SimplicialComplex) -> SimplicialComplex:
    if K.is_empty():
        raise EmptyComplex("barycentric subdivision of the empty complex")
    return order_complex(face_poset(K))


def deletion(K: SimplicialComplex, v: str) -> SimplicialComplex:
    """Subcomplex of simplices not containing ``v``."""
    if v not in K.vertices:
        raise UnknownVertex(v)
    return SimplicialComplex(tuple(x for x in f if x != v) for f in K.facets)


def star_link(K: SimplicialComplex, v: str) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Closed star and link of the vertex ``v``."""
    if v not in K.vertices:
        raise UnknownVertex(v)
    star = [f for f in K.facets if v in f]
    link = [tuple(x for x in f if x != v) for f in star]
    return SimplicialComplex(star), SimplicialComplex(link)


def union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(K.facets | L.facets)


def intersection(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(set(K.simplices()) & set(L.simplices()))


# -- collapses -----------------------------------------------------------------


def _free_pairs(facets: frozenset[Simplex]) -> list[tuple[Simplex, Simplex]]:
    sets = {f: frozenset(f) for f in facets}
    pairs = []
    for tau in facets:
        if len(tau) < 2:
            continue
        for i in range(len(tau)):
            sigma = tau[:i] + tau[i + 1:]
            fs = frozenset(sigma)
            if not any(other != tau and fs <= s for other, s in sets.items()):
                pairs.append((sigma, tau))
    return pairs


def free_faces(K: SimplicialComplex) -> list[tuple[Simplex, Simplex]]:
    """Pairs ``(sigma, tau)`` where ``sigma`` is a free face with unique coface ``tau``.

    ``sigma`` is free when the only simplex properly containing it is ``tau``
    and ``dim tau = dim sigma + 1``; equivalently ``tau`` is the only facet
    containing ``sigma`` and ``sigma`` has codimension one in it.
    """
    return sorted(_free_pairs(K.facets), key=lambda p: (len(p[1]), p[1], p[0]))


def _collapse(facets: frozenset[Simplex], sigma: Simplex, tau: Simplex) -> frozenset[Simplex]:
    rest = set(facets)
    rest.discard(tau)
    rest_sets = [frozenset(f) for f in rest]
    for i in range(len(tau)):
        rho = tau[:i] + tau[i + 1:]
        if rho == sigma or not rho:
            continue
        fr = frozenset(rho)
        if not any(fr <= s for s in rest_sets):
            rest.add(rho)
            rest_sets.append(fr)
    return frozenset(rest)


@dataclass
class CollapseSequence:
    """Elementary collapses ``(free face, coface)`` in the order performed."""

    initial: SimplicialComplex
    steps: list[tuple[Simplex, Simplex]] = field(default_factory=list)

    def replay(self) -> SimplicialComplex:
        facets = self.initial.facets
        for sigma, tau in self.steps:
            if (sigma, tau) not in _free_pairs(facets):
                raise ValueError(f"{sigma} is not a free face of {tau}")
            facets = _collapse(facets, sigma, tau)
        return SimplicialComplex(facets)

    @property
    def final(self) -> SimplicialComplex:
        return self.replay()

    def __len__(self):
        return len(self.steps)


def collapse_to_dimension(K: SimplicialComplex, d: int, budget: int = DEFAULT_BUDGET):
    """Search for elementary collapses bringing ``K`` down to dimension ``<= d``.

    Returns a :class:`CollapseSequence`, ``Outcome.IMPOSSIBLE_EXHAUSTED`` when
    no sequence exists, or ``Outcome.UNKNOWN`` when the node budget runs out.
    Only collapses removing a simplex of dimension ``> d`` are tried: the
    others cannot create free faces in higher dimensions.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")

    def dim_of(facets):
        return max((len(f) - 1 for f in facets), default=-1)

    def expand(facets):
        top = dim_of(facets)
        pairs = [p for p in _free_pairs(facets) if len(p[1]) - 1 > d]
        pairs.sort(key=lambda p: (-len(p[1]), p[1], p[0]))
        if top == d + 1:
            # Removing the top dimension is confluent: a free face stays free
            # until its coface goes, so one branch decides the node.
            pairs = pairs[:1]
        for sigma, tau in pairs:
            yield (sigma, tau), _collapse(facets, sigma, tau)

    result = depth_first(
        K.facets,
        expand,
        lambda facets: dim_of(facets) <= d,
        lambda facets: facets,
        budget,
        Outcome.IMPOSSIBLE_EXHAUSTED,
    )
    if isinstance(result, Outcome):
        return result
    steps, _ = result
    return CollapseSequence(K, steps)
