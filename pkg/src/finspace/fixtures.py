"""Named example spaces, given by their Hasse diagrams."""

from finspace.poset import FiniteSpace, build_space, non_hausdorff_suspension


def _parse_covers(text: str) -> list[tuple[str, str]]:
    return [tuple(item.split(">")) for item in text.split()]


def _space(covers: str, extra=()) -> FiniteSpace:
    pairs = _parse_covers(covers)
    elements = sorted({x for p in pairs for x in p} | set(extra))
    return build_space(elements, pairs)


FIG1_X = _space("T1>M1 T1>M2 T2>M2 M1>B1 M1>B2 M2>B1 M2>B2")

FIG2_X = _space(
    "a>x1 a>x3 b>x2 b>x3 t>x2 t>x3 "
    "x1>p1 x1>p2 x2>p1 x2>p3 x2>p4 x3>p1 x3>p2 x3>p3 x3>p4"
)

FIG3_X = _space(
    "t1>m1 t1>m2 t2>m1 t2>m3 t3>m2 t3>m3 "
    "m1>b1 m1>b2 m1>b3 m2>b2 m2>b3 m2>b4 m3>b1 m3>b3 m3>b4"
)

FIG4_X = _space(
    "a>m1 a>m4 b>m1 b>m2 b>m3 b>m4 c>m2 c>m3 c>m4 d>p1 d>p4 "
    "m1>p1 m1>p2 m2>p1 m2>p2 m2>p3 m3>p2 m3>p4 m4>p3 m4>p4"
)

FIG5_X = _space(
    "t1>m1 t1>m2 t2>m1 t2>m3 t3>m2 t3>m3 d>a d>b d>c "
    "m1>a m1>b m1>x m2>b m2>x m2>c m3>a m3>x m3>c"
)

# Minimal finite models of the circle and the 2-sphere.
S1_MIN = _space("a>c a>d b>c b>d")
S2_MIN = non_hausdorff_suspension(S1_MIN)

FIXTURES: dict[str, FiniteSpace] = {
    "FIG1_X": FIG1_X,
    "FIG2_X": FIG2_X,
    "FIG3_X": FIG3_X,
    "FIG4_X": FIG4_X,
    "FIG5_X": FIG5_X,
    "S1_MIN": S1_MIN,
    "S2_MIN": S2_MIN,
}
