"""Integer homology and fundamental-group presentations.

Everything here is exact integer arithmetic.  Homology of a finite space is,
by McCord's theorem, the homology of its order complex, so only simplicial
homology is implemented.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from finspace.errors import Disconnected, EmptyComplex, EmptySpace, HeightTooLarge
from finspace.poset import FiniteSpace, components, height
from finspace.simplicial import SimplicialComplex, order_complex


@dataclass
class IntegerMatrix:
    """Sparse integer matrix; ``entries`` maps ``(row, col)`` to a nonzero int."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_dense(cls, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        entries = {
            (i, j): int(v) for i, row in enumerate(rows_list) for j, v in enumerate(row) if v
        }
        return cls(rows, cols, entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc: dict[tuple[int, int], int] = {}
        for (i, k), u in self.entries.items():
            for j, v in by_row.get(k, ()):
                acc[i, j] = acc.get((i, j), 0) + u * v
        return IntegerMatrix(self.rows, other.cols, {ij: v for ij, v in acc.items() if v})

    def is_zero(self) -> bool:
        return not self.entries


def smith_normal_form(M) -> tuple[tuple[int, ...], int]:
    """Nonzero Smith invariants ``d_1 | d_2 | ...`` of an integer matrix, and its rank.

    Accepts an :class:`IntegerMatrix` or a dense list of rows.  Pivots are
    chosen by minimal absolute value; elimination works on a sparse copy.
    """
    if not isinstance(M, IntegerMatrix):
        M = IntegerMatrix.from_dense(M)
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in M.entries.items():
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)

    def set_entry(i, j, v):
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)
        else:
            rows[i].pop(j, None)
            if not rows[i]:
                del rows[i]
            cols[j].discard(i)
            if not cols[j]:
                del cols[j]

    diagonal = []
    while rows:
        r, c, p = min(
            ((i, j, v) for i, row in rows.items() for j, v in row.items()),
            key=lambda t: (abs(t[2]), len(rows[t[0]]) + len(cols[t[1]])),
        )
        clean = True
        # Row operations clear column c below/above the pivot.
        for i in sorted(cols[c] - {r}):
            q = rows[i][c] // p
            for j, v in list(rows[r].items()):
                set_entry(i, j, rows.get(i, {}).get(j, 0) - q * v)
            if rows.get(i, {}).get(c):
                clean = False
        if not clean:
            continue
        # Column c is now zero off the pivot, so column operations touch row r only.
        for j in sorted(set(rows[r]) - {c}):
            q = rows[r][j] // p
            set_entry(r, j, rows[r][j] - q * p)
            if rows.get(r, {}).get(j):
                clean = False
        if not clean:
            continue
        diagonal.append(abs(p))
        set_entry(r, c, 0)

    d = sorted(diagonal)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = math.gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return tuple(d), len(d)


# -- simplicial homology -----------------------------------------------------


def boundary_matrices(K: SimplicialComplex) -> list[IntegerMatrix]:
    """``[d_1, d_2, ..., d_dim]`` with ``d_n`` mapping n-chains to (n-1)-chains.

    Rows and columns follow the canonical simplex order (lexicographic on
    sorted vertex tuples); the face omitting vertex ``i`` gets sign ``(-1)**i``.
    """
    if K.is_empty():
        raise EmptyComplex("boundary of the empty complex")
    by_dim = [K.simplices(n) for n in range(K.dim + 1)]
    index = [{s: k for k, s in enumerate(level)} for level in by_dim]
    mats = []
    for n in range(1, K.dim + 1):
        entries = {}
        for j, s in enumerate(by_dim[n]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                entries[index[n - 1][face], j] = -1 if i % 2 else 1
        mats.append(IntegerMatrix(len(by_dim[n - 1]), len(by_dim[n]), entries))
    return mats


@dataclass(frozen=True)
class HomologySummary:
    """Integral homology: ``H_n = Z^betti[n] + sum Z/t for t in torsion[n]``."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def group(self, n: int) -> tuple[int, tuple[int, ...]]:
        if n < len(self.betti):
            return self.betti[n], self.torsion[n]
        return 0, ()

    def is_acyclic(self) -> bool:
        """True when reduced homology vanishes (the homology of a point)."""
        return (
            bool(self.betti)
            and self.betti[0] == 1
            and not any(self.betti[1:])
            and not any(self.torsion)
        )

    def has_torsion(self) -> bool:
        return any(self.torsion)

    def _term(self, n):
        b, tors = self.group(n)
        parts = []
        if b == 1:
            parts.append("Z")
        elif b > 1:
            parts.append(f"Z^{b}")
        parts += [f"Z/{t}" for t in tors]
        return " + ".join(parts) if parts else "0"

    def compact(self) -> str:
        return ", ".join(self._term(n) for n in range(len(self.betti)))

    def __str__(self):
        return "\n".join(f"H_{n} = {self._term(n)}" for n in range(len(self.betti)))


def homology(K: SimplicialComplex) -> HomologySummary:
    if K.is_empty():
        raise EmptyComplex("homology of the empty complex")
    mats = boundary_matrices(K)
    counts = K.f_vector()
    snf = [smith_normal_form(m) for m in mats]
    ranks = [0] + [r for _, r in snf] + [0]
    betti = []
    torsion = []
    for n in range(K.dim + 1):
        betti.append(counts[n] - ranks[n] - ranks[n + 1])
        tors = snf[n][0] if n < len(snf) else ()
        torsion.append(tuple(t for t in tors if t > 1))
    return HomologySummary(tuple(betti), tuple(torsion))


def homology_space(X: FiniteSpace) -> HomologySummary:
    if len(X) == 0:
        raise EmptySpace("homology of the empty space")
    return homology(order_complex(X))


def euler_characteristic(obj) -> int:
    """Alternating simplex count of a complex, or of the order complex of a space."""
    K = order_complex(obj) if isinstance(obj, FiniteSpace) else obj
    return sum((-1) ** n * c for n, c in enumerate(K.f_vector()))


# -- presentations -------------------------------------------------------------

Letter = tuple[str, int]
Word = tuple[Letter, ...]


def _inverse(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def _free_reduce(word) -> Word:
    out: list[Letter] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def _cyclic_reduce(word) -> Word:
    w = list(_free_reduce(word))
    while len(w) > 1 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def _rotations(word: Word):
    for i in range(len(word)):
        yield word[i:] + word[:i]


def _canonical(word: Word) -> Word:
    # Representative of the relator up to cyclic permutation and inversion.
    if not word:
        return word
    return min(list(_rotations(word)) + list(_rotations(_inverse(word))))


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in word)


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        known = set(self.generators)
        for r in self.relators:
            for g, e in r:
                if g not in known:
                    raise ValueError(f"relator mentions undeclared generator {g!r}")
                if e not in (1, -1):
                    raise ValueError("letters carry exponent +1 or -1")

    def is_trivial(self) -> bool:
        """Proved trivial: no generators left."""
        return not self.generators

    def __str__(self):
        return "< {} | {} >".format(
            ", ".join(self.generators), ", ".join(format_word(r) for r in self.relators)
        )


def edge_path_presentation(K: SimplicialComplex, basepoint: str) -> GroupPresentation:
    """Edge-path presentation of the fundamental group of the 2-skeleton.

    The spanning tree is breadth-first from ``basepoint`` with neighbours in
    label order.  Each remaining edge ``u < v`` gives a generator; each
    triangle ``u < v < w`` gives the relator ``[uv][vw][uw]^-1`` with tree
    edges erased.
    """
    if basepoint not in K.vertices:
        raise Disconnected(f"basepoint {basepoint!r} is not a vertex")
    edges = K.simplices(1)
    adjacent: dict[str, list[str]] = {v: [] for v in K.vertices}
    for u, v in edges:
        adjacent[u].append(v)
        adjacent[v].append(u)
    tree = set()
    seen = {basepoint}
    queue = deque([basepoint])
    while queue:
        u = queue.popleft()
        for v in sorted(adjacent[u]):
            if v not in seen:
                seen.add(v)
                tree.add(tuple(sorted((u, v))))
                queue.append(v)
    if len(seen) != len(K.vertices):
        raise Disconnected("complex is not connected")
    names = {}
    for e in edges:
        if e not in tree:
            names[e] = f"g{len(names) + 1}"

    def letter(u, v, e):
        return () if (u, v) in tree else ((names[u, v], e),)

    relators = []
    for u, v, w in K.simplices(2):
        relators.append(letter(u, v, 1) + letter(v, w, 1) + letter(u, w, -1))
    return GroupPresentation(tuple(names.values()), tuple(relators))


def _substitute(word: Word, g: str, image: Word) -> Word:
    out: list[Letter] = []
    for h, e in word:
        if h == g:
            out.extend(image if e == 1 else _inverse(image))
        else:
            out.append((h, e))
    return _free_reduce(out)


def _clean(relators) -> list[Word]:
    seen = set()
    out = []
    for r in relators:
        r = _cyclic_reduce(r)
        if not r:
            continue
        c = _canonical(r)
        if c not in seen:
            seen.add(c)
            out.append(r)
    return out


def _shorten(s: Word, r: Word) -> Word | None:
    # Replace a subword of s that is more than half of a cyclic form of r.
    n = len(r)
    for form in list(_rotations(r)) + list(_rotations(_inverse(r))):
        for k in range(n, n // 2, -1):
            piece, rest = form[:k], form[k:]
            for cand in _rotations(s) if len(s) >= k else ():
                if cand[:k] == piece:
                    new = _cyclic_reduce(_inverse(rest) + cand[k:])
                    if len(new) < len(s):
                        return new
    return None


def tietze_simplify(P: GroupPresentation, budget: int = 10_000) -> GroupPresentation:
    """Simplify a presentation by Tietze moves without changing the group.

    Moves: free and cyclic reduction of relators, removal of trivial and
    duplicate relators (up to rotation and inversion), elimination of a
    generator occurring exactly once in some relator, and replacement of a
    long subword of one relator by the shorter complement of another.
    ``budget`` bounds the number of moves.
    """
    gens = list(P.generators)
    rels = _clean(P.relators)
    moves = 0
    while moves < budget:
        moves += 1
        eliminated = False
        for r in sorted(rels, key=len):
            counts: dict[str, int] = {}
            for g, _ in r:
                counts[g] = counts.get(g, 0) + 1
            singles = [g for g in gens if counts.get(g) == 1]
            if not singles:
                continue
            g = singles[0]
            i = next(k for k, (h, _) in enumerate(r) if h == g)
            rotated = r[i:] + r[:i]
            e, rest = rotated[0][1], rotated[1:]
            # g^e * rest = 1, so g = rest^-1 (e = 1) or g = rest (e = -1)
            image = _inverse(rest) if e == 1 else rest
            others = [x for x in rels if x is not r]
            rels = _clean(_substitute(x, g, image) for x in others)
            gens.remove(g)
            eliminated = True
            break
        if eliminated:
            continue
        shortened = False
        for i, s in enumerate(rels):
            for j, r in enumerate(rels):
                if i == j or len(r) > 2 * len(s):
                    continue
                new = _shorten(s, r)
                if new is not None:
                    rels = _clean(rels[:i] + [new] + rels[i + 1:])
                    shortened = True
                    break
            if shortened:
                break
        if not shortened:
            break
    return GroupPresentation(tuple(gens), tuple(rels))


def abelianization(P: GroupPresentation) -> tuple[int, tuple[int, ...]]:
    """Free rank and torsion coefficients of the abelianized group."""
    col = {g: k for k, g in enumerate(P.generators)}
    entries: dict[tuple[int, int], int] = {}
    for i, r in enumerate(P.relators):
        for g, e in r:
            entries[i, col[g]] = entries.get((i, col[g]), 0) + e
    M = IntegerMatrix(len(P.relators), len(P.generators), {k: v for k, v in entries.items() if v})
    diag, rank = smith_normal_form(M)
    return len(P.generators) - rank, tuple(d for d in diag if d > 1)


def fundamental_group(X: FiniteSpace, basepoint: str | None = None, budget: int = 10_000):
    """Simplified edge-path presentation of ``pi_1`` of a connected space."""
    K = order_complex(X)
    if basepoint is None:
        basepoint = min(K.vertices)
    return tietze_simplify(edge_path_presentation(K, basepoint), budget)


def free_rank_height1(X: FiniteSpace) -> list[int]:
    """Rank of the free fundamental group of each component of a height <= 1 space.

    A height <= 1 space is a bipartite graph up to weak equivalence, so the
    rank is ``covers - points + 1`` per component.
    """
    if len(X) == 0:
        return []
    if height(X) >= 2:
        raise HeightTooLarge(f"height {height(X)} >= 2")
    ranks = []
    for comp in components(X):
        n_covers = sum(1 for x, y in X.covers if x in comp)
        ranks.append(n_covers - len(comp) + 1)
    return ranks
