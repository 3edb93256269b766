"""Finite T0 spaces represented as finite posets.

A finite T0 space and a finite poset are the same object: ``x <= y`` holds
exactly when ``x`` lies in every open set containing ``y``.  The minimal open
set of ``x`` is its down-set ``U_x``.  Spaces here are immutable and store,
for every element, its strict down-set and strict up-set; the Hasse diagram
(cover relation) is derived on demand.

Element labels are strings.  Every deterministic tie-break in the package
uses the lexicographic order on labels.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from functools import cached_property

from finspace.errors import CycleError, EmptySpace, UnknownElement


class FiniteSpace:
    """An immutable finite poset viewed as a finite T0 topological space.

    Use :func:`build_space` to construct one from a Hasse diagram.  Internally
    the strict order is kept as two maps ``label -> frozenset`` (elements
    strictly below, elements strictly above), which makes subspaces cheap.
    """

    def __init__(self, below: dict[str, frozenset[str]]):
        # ``below`` must already be a transitively closed strict order.
        self._elements = tuple(sorted(below))
        self._below = below
        above: dict[str, set[str]] = {x: set() for x in below}
        for x, lower in below.items():
            for y in lower:
                above[y].add(x)
        self._above = {x: frozenset(s) for x, s in above.items()}

    # -- basic protocol -------------------------------------------------

    @property
    def elements(self) -> tuple[str, ...]:
        return self._elements

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, x):
        return x in self._below

    def __eq__(self, other):
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self._below == other._below

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"FiniteSpace({len(self)} points, {len(self.covers)} covers)"

    @cached_property
    def key(self):
        """Label-based canonical form: sorted elements plus sorted covers."""
        return (self._elements, tuple(sorted(self.covers)))

    # -- order ------------------------------------------------------------

    def _check(self, x):
        if x not in self._below:
            raise UnknownElement(x)

    def below(self, x) -> frozenset[str]:
        """Elements strictly below ``x``."""
        self._check(x)
        return self._below[x]

    def above(self, x) -> frozenset[str]:
        """Elements strictly above ``x``."""
        self._check(x)
        return self._above[x]

    def lt(self, x, y) -> bool:
        return x in self.below(y)

    def leq(self, x, y) -> bool:
        return x == y or self.lt(x, y)

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    @cached_property
    def _lower_covers(self) -> dict[str, frozenset[str]]:
        out = {}
        for x, lower in self._below.items():
            out[x] = frozenset(
                y for y in lower if not any(y in self._below[z] for z in lower if z != y)
            )
        return out

    @cached_property
    def _upper_covers(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {x: set() for x in self._elements}
        for x, lower in self._lower_covers.items():
            for y in lower:
                out[y].add(x)
        return {x: frozenset(s) for x, s in out.items()}

    def lower_covers(self, x) -> frozenset[str]:
        self._check(x)
        return self._lower_covers[x]

    def upper_covers(self, x) -> frozenset[str]:
        self._check(x)
        return self._upper_covers[x]

    @cached_property
    def covers(self) -> frozenset[tuple[str, str]]:
        """Hasse diagram as pairs ``(upper, lower)``."""
        return frozenset((x, y) for x, lower in self._lower_covers.items() for y in lower)

    # -- derived spaces ----------------------------------------------------

    def subspace(self, members: Iterable[str]) -> FiniteSpace:
        """The subspace on ``members`` with the restricted order."""
        members = frozenset(members)
        for x in members:
            self._check(x)
        return FiniteSpace({x: self._below[x] & members for x in members})

    def remove(self, *labels: str) -> FiniteSpace:
        for x in labels:
            self._check(x)
        return self.subspace(set(self._elements).difference(labels))


def build_space(elements: Iterable[str], covers: Iterable[tuple[str, str]] = ()) -> FiniteSpace:
    """Build a space from labels and pairs ``(x, y)`` meaning ``x > y``.

    The pairs need not be irredundant; the stored Hasse diagram is the
    transitive reduction of their closure.  Raises :class:`CycleError` when the
    closure is not antisymmetric and :class:`UnknownElement` when a pair names
    an undeclared label.
    """
    elements = list(elements)
    if len(set(elements)) != len(elements):
        dupes = sorted({x for x in elements if elements.count(x) > 1})
        raise ValueError(f"duplicate labels: {dupes}")
    for x in elements:
        if not isinstance(x, str) or not x:
            raise ValueError(f"labels must be non-empty strings, got {x!r}")
    lower: dict[str, set[str]] = {x: set() for x in elements}
    for x, y in covers:
        for z in (x, y):
            if z not in lower:
                raise UnknownElement(z)
        if x == y:
            raise CycleError(f"{x} > {x}")
        lower[x].add(y)

    # Closure by DFS over the declared relation, detecting cycles.
    below: dict[str, frozenset[str]] = {}
    state: dict[str, int] = {}

    def visit(x, path):
        state[x] = 1
        acc = set()
        for y in sorted(lower[x]):
            if state.get(y) == 1:
                cycle = path[path.index(y):] + [y]
                raise CycleError("cycle: " + " > ".join(cycle))
            if y not in below:
                visit(y, path + [y])
            acc.add(y)
            acc |= below[y]
        below[x] = frozenset(acc)
        state[x] = 2

    for x in sorted(elements):
        if x not in below:
            visit(x, [x])
    return FiniteSpace(below)


def empty_space() -> FiniteSpace:
    return FiniteSpace({})


def down_set(X: FiniteSpace, x: str, punctured: bool = False) -> FiniteSpace:
    """The minimal open set ``U_x``, or ``U_x - {x}`` when punctured."""
    members = set(X.below(x))
    if not punctured:
        members.add(x)
    return X.subspace(members)


def up_set(X: FiniteSpace, x: str, punctured: bool = False) -> FiniteSpace:
    """The closed set ``F_x = {y >= x}``, or ``F_x - {x}`` when punctured."""
    members = set(X.above(x))
    if not punctured:
        members.add(x)
    return X.subspace(members)


def punctured_link(X: FiniteSpace, x: str) -> FiniteSpace:
    """Elements comparable with but different from ``x``."""
    return X.subspace(X.below(x) | X.above(x))


def height(X: FiniteSpace) -> int:
    """Length of the longest chain (a chain of n+1 points has length n)."""
    if len(X) == 0:
        raise EmptySpace("height of the empty space is undefined")
    return max(_levels(X).values())


def _levels(X: FiniteSpace) -> dict[str, int]:
    # Longest chain ending at each element, computed bottom-up.
    level: dict[str, int] = {}
    for x in sorted(X, key=lambda z: len(X.below(z))):
        level[x] = max((level[y] + 1 for y in X.lower_covers(x)), default=0)
    return level


def levels(X: FiniteSpace) -> dict[str, int]:
    """Map each element to the length of the longest chain with it on top."""
    return _levels(X)


def components(X: FiniteSpace) -> list[frozenset[str]]:
    """Connected components, sorted by their least label."""
    seen: set[str] = set()
    out = []
    for start in X:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in X.below(x) | X.above(x):
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(X: FiniteSpace) -> bool:
    return len(components(X)) == 1


def extremal_points(X: FiniteSpace, which: str = "max") -> frozenset[str]:
    if which == "max":
        return frozenset(x for x in X if not X.above(x))
    if which == "min":
        return frozenset(x for x in X if not X.below(x))
    raise ValueError(f"which must be 'max' or 'min', not {which!r}")


def maximum(X: FiniteSpace) -> str | None:
    """The greatest element, if there is one."""
    tops = extremal_points(X, "max")
    if len(tops) == 1:
        (top,) = tops
        if len(X.below(top)) == len(X) - 1:
            return top
    return None


def minimum(X: FiniteSpace) -> str | None:
    bottoms = extremal_points(X, "min")
    if len(bottoms) == 1:
        (bottom,) = bottoms
        if len(X.above(bottom)) == len(X) - 1:
            return bottom
    return None


def fresh_label(base: str, taken) -> str:
    label = base
    while label in taken:
        label += "'"
    return label


def non_hausdorff_suspension(X: FiniteSpace, labels: tuple[str, str] = ("N", "S")) -> FiniteSpace:
    """Add two incomparable points above every element of ``X``."""
    if len(X) == 0:
        raise EmptySpace("suspension of the empty space")
    n = fresh_label(labels[0], X)
    s = fresh_label(labels[1], set(X) | {n})
    below = {x: X.below(x) for x in X}
    everything = frozenset(X)
    below[n] = everything
    below[s] = everything
    return FiniteSpace(below)


# -- isomorphism --------------------------------------------------------------


def _signature(X: FiniteSpace, x: str, lv: dict[str, int], up: dict[str, int]):
    return (
        len(X.below(x)),
        len(X.above(x)),
        len(X.lower_covers(x)),
        len(X.upper_covers(x)),
        lv[x],
        up[x],
    )


def _depths(X: FiniteSpace) -> dict[str, int]:
    # Longest chain starting at each element, going up.
    depth: dict[str, int] = {}
    for x in sorted(X, key=lambda z: len(X.above(z))):
        depth[x] = max((depth[y] + 1 for y in X.upper_covers(x)), default=0)
    return depth


def is_isomorphic(X: FiniteSpace, Y: FiniteSpace) -> tuple[bool, dict[str, str] | None]:
    """Decide whether ``X`` and ``Y`` are order isomorphic.

    Returns ``(True, mapping)`` with a witness ``X -> Y`` or ``(False, None)``.
    Plain backtracking; candidates are pruned by an invariant signature and
    tried in label order, so the witness is deterministic.
    """
    if len(X) != len(Y) or len(X.covers) != len(Y.covers):
        return False, None
    if len(X) == 0:
        return True, {}
    lx, dx, ly, dy = _levels(X), _depths(X), _levels(Y), _depths(Y)
    sx = {x: _signature(X, x, lx, dx) for x in X}
    sy = {y: _signature(Y, y, ly, dy) for y in Y}
    if sorted(sx.values()) != sorted(sy.values()):
        return False, None
    by_sig: dict[tuple, list[str]] = {}
    for y in Y:
        by_sig.setdefault(sy[y], []).append(y)

    # Assign elements of X in BFS order so each new element touches mapped ones.
    order: list[str] = []
    seen: set[str] = set()
    for start in sorted(X, key=lambda z: (len(by_sig[sx[z]]), z)):
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        while queue:
            x = queue.popleft()
            order.append(x)
            for z in sorted(X.lower_covers(x) | X.upper_covers(x)):
                if z not in seen:
                    seen.add(z)
                    queue.append(z)

    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent(x, y):
        for u, v in mapping.items():
            if (u in X.below(x)) != (v in Y.below(y)):
                return False
            if (u in X.above(x)) != (v in Y.above(y)):
                return False
        return True

    def extend(i):
        if i == len(order):
            return True
        x = order[i]
        for y in by_sig[sx[x]]:
            if y in used or not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if extend(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    if extend(0):
        return True, dict(sorted(mapping.items()))
    return False, None
