"""Plain-text formats for spaces and complexes, and DOT export.

Space format, one directive per line::

    point <label>          declare an element
    <label> > <label>      declare that the first covers the second
    # ...                  comment

Complex format: one facet per line, vertex labels separated by whitespace.
"""

from __future__ import annotations

from finspace.errors import ParseError
from finspace.poset import FiniteSpace, build_space, levels
from finspace.simplicial import SimplicialComplex


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_space(text: str) -> FiniteSpace:
    elements: list[str] = []
    declared: set[str] = set()
    covers = []

    def declare(label):
        if label not in declared:
            declared.add(label)
            elements.append(label)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "point":
            if len(tokens) != 2:
                raise ParseError("expected 'point <label>'", lineno)
            declare(tokens[1])
        elif len(tokens) == 3 and tokens[1] == ">":
            covers.append((tokens[0], tokens[2], lineno))
        else:
            raise ParseError(f"cannot parse {line!r}", lineno)
    # Labels used in cover lines count as declared.
    for upper, lower, _ in covers:
        declare(upper)
        declare(lower)
    return build_space(elements, [(u, v) for u, v, _ in covers])


def serialize_space(X: FiniteSpace) -> str:
    lines = [f"point {x}" for x in X]
    lines += [f"{x} > {y}" for x, y in sorted(X.covers)]
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        vertices = line.split()
        if len(set(vertices)) != len(vertices):
            raise ParseError(f"repeated vertex in {line!r}", lineno)
        facets.append(vertices)
    return SimplicialComplex(facets)


def serialize_complex(K: SimplicialComplex) -> str:
    return "".join(" ".join(f) + "\n" for f in sorted(K.facets, key=lambda f: (-len(f), f)))


def export_dot(X: FiniteSpace, name: str = "X") -> str:
    """Hasse diagram as a DOT digraph, edges pointing down, one rank per level."""
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    if len(X):
        lv = levels(X)
        for level in sorted(set(lv.values()), reverse=True):
            nodes = " ".join(f'"{x}";' for x in X if lv[x] == level)
            lines.append(f"  {{ rank=same; {nodes} }}")
        for x, y in sorted(X.covers):
            lines.append(f'  "{x}" -> "{y}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
