from __future__ import annotations

import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from finspace.fixtures import FIG2_X
from finspace.poset import build_space
from finspace.simplicial import SimplicialComplex

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def chain(n):
    labels = [f"c{i}" for i in range(n)]
    return build_space(labels, [(labels[i + 1], labels[i]) for i in range(n - 1)])


SINGLETON = build_space(["x"])
TWO_POINTS = build_space(["x", "y"])
CIRCLE4 = build_space(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
# Six-point circle: maxima u0..u2, minima l0..l2, u_i over l_i and l_{i+1}.
CIRCLE6 = build_space(
    [f"u{i}" for i in range(3)] + [f"l{i}" for i in range(3)],
    [(f"u{i}", f"l{j}") for i in range(3) for j in (i, (i + 1) % 3)],
)

TRIANGLE = SimplicialComplex([("a", "b", "c")])
TRIANGLE_BOUNDARY = SimplicialComplex([("a", "b"), ("b", "c"), ("a", "c")])
EDGE = SimplicialComplex([("a", "b")])
PATH2 = SimplicialComplex([("a", "b"), ("b", "c")])
SQUARE = SimplicialComplex([("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
OCTAHEDRON = SimplicialComplex(
    [(x, y, z) for x in ("x+", "x-") for y in ("y+", "y-") for z in ("z+", "z-")]
)

# A qc-reducible deletion of FIG2_X: same maxima a, b, t, and
# reducible in two moves (a,b) then (rel(a,b),t).
QC_VARIANT = FIG2_X.remove("p3", "p4")


@st.composite
def spaces(draw, max_points=8, max_height=None, min_points=1):
    n = draw(st.integers(min_points, max_points))
    labels = [f"p{i}" for i in range(n)]
    if max_height is None:
        level = list(range(n))
    else:
        level = draw(st.lists(st.integers(0, max_height), min_size=n, max_size=n))
    pairs = [(i, j) for i, j in itertools.permutations(range(n), 2) if level[i] > level[j]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_space(labels, [(labels[i], labels[j]) for i, j in chosen])


@st.composite
def complexes(draw, max_vertices=6, max_dim=2, connected=False):
    n = draw(st.integers(1, max_vertices))
    verts = [f"v{i}" for i in range(n)]
    faces = [(v,) for v in verts]
    for k in range(2, max_dim + 2):
        pool = list(itertools.combinations(verts, k))
        if pool:
            faces += draw(st.lists(st.sampled_from(pool), unique=True, max_size=8))
    if connected:
        faces += [(verts[i], verts[i + 1]) for i in range(n - 1)]
    return SimplicialComplex(faces)
