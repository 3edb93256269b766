"""Random spaces and complexes for property tests and experiments.

Every generator takes a :class:`random.Random` so runs are reproducible.
Labels are ``p0, p1, ...`` for points and ``v0, v1, ...`` for vertices.
"""

from __future__ import annotations

import itertools
import random

from finspace.aspherical import is_a_point
from finspace.poset import FiniteSpace, build_space, height
from finspace.simplicial import SimplicialComplex


def random_space(rng: random.Random, max_points: int = 10, density: float | None = None) -> FiniteSpace:
    """A random poset: a random DAG on a shuffled order, transitively closed."""
    n = rng.randint(1, max_points)
    p = rng.uniform(0.15, 0.6) if density is None else density
    labels = [f"p{i}" for i in range(n)]
    order = labels[:]
    rng.shuffle(order)
    relations = [(order[j], order[i]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_space(labels, relations)


def random_low_height_space(
    rng: random.Random, max_points: int = 10, max_height: int = 2, density: float | None = None
) -> FiniteSpace:
    """A random poset of height at most ``max_height``.

    Points are spread over ``max_height + 1`` levels and relations only go
    from a higher level to a lower one, which bounds every chain.
    """
    n = rng.randint(1, max_points)
    p = rng.uniform(0.2, 0.7) if density is None else density
    labels = [f"p{i}" for i in range(n)]
    level = {x: rng.randint(0, max_height) for x in labels}
    relations = [(x, y) for x in labels for y in labels if level[x] > level[y] and rng.random() < p]
    return build_space(labels, relations)


def _down_closure(X, members):
    out = set(members)
    for x in members:
        out |= X.below(x)
    return out


def _up_closure(X, members):
    out = set(members)
    for x in members:
        out |= X.above(x)
    return out


def _attach(X: FiniteSpace, label: str, lower: set[str], upper: set[str]) -> FiniteSpace:
    below = {x: set(X.below(x)) for x in X}
    below[label] = set(lower)
    for u in upper:
        below[u] |= lower | {label}
    return FiniteSpace({x: frozenset(s) for x, s in below.items()})


def random_strong_aspherical(rng: random.Random, max_points: int = 10, attempts: int = 50) -> FiniteSpace:
    """A strong aspherical space of height <= 2 built by inverse a-reductions.

    Starting from a point, each step adds a fresh point ``x`` below an
    up-closed set ``U`` and above a down-closed set ``L`` with ``L < U``
    already, keeping the height <= 2 and checking that ``x`` is an a-point of
    the result.  Reading the construction backwards is an a-reduction to a
    point.
    """
    target = rng.randint(1, max_points)
    X = build_space(["p0"])
    while len(X) < target:
        label = f"p{len(X)}"
        for _ in range(attempts):
            pts = list(X)
            lower = _down_closure(X, [x for x in pts if rng.random() < 0.3])
            upper = _up_closure(X, [x for x in pts if x not in lower and rng.random() < 0.3])
            if lower & upper:
                continue
            if any(not X.lt(l, u) for l in lower for u in upper):
                continue
            Y = _attach(X, label, lower, upper)
            if height(Y) <= 2 and is_a_point(Y, label):
                X = Y
                break
        else:
            break
    return X


def random_complex(
    rng: random.Random, max_vertices: int = 8, max_dim: int = 2, p_triangle: float | None = None
) -> SimplicialComplex:
    """A random complex of dimension <= ``max_dim`` on at most ``max_vertices`` vertices."""
    n = rng.randint(1, max_vertices)
    verts = [f"v{i}" for i in range(n)]
    facets = [(v,) for v in verts]
    p_edge = rng.uniform(0.2, 0.7)
    facets += [e for e in itertools.combinations(verts, 2) if rng.random() < p_edge]
    if max_dim >= 2:
        p = rng.uniform(0.05, 0.35) if p_triangle is None else p_triangle
        facets += [t for t in itertools.combinations(verts, 3) if rng.random() < p]
    for k in range(4, max_dim + 2):
        facets += [s for s in itertools.combinations(verts, k) if rng.random() < 0.05]
    return SimplicialComplex(facets)


def random_connected_complex(rng: random.Random, max_vertices: int = 8, max_dim: int = 2) -> SimplicialComplex:
    """A random complex made connected by adding a random spanning tree."""
    K = random_complex(rng, max_vertices, max_dim)
    verts = sorted(K.vertices)
    order = verts[:]
    rng.shuffle(order)
    tree = [tuple(sorted((order[i], rng.choice(order[:i])))) for i in range(1, len(order))]
    return SimplicialComplex(list(K.facets) + tree)
