"""Root systems of the simple types, built from Cartan matrices.

Nodes follow Bourbaki numbering throughout.  A root is stored as its
integer coefficient vector over the simple roots, so the pairing with the
fundamental coweight ``omega_j`` is just the ``j``-th coefficient.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Root = tuple[int, ...]

_FAMILIES = "ABCDEFG"


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in _FAMILIES or not isinstance(n, int) or n < 1:
            raise RootSystemError(f"invalid simple type {f}{n}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 2,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[f]
        if not ok:
            raise RootSystemError(f"rank {n} not allowed for family {f}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise RootSystemError(f"cannot parse simple type {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with ``C[i][j] = <alpha_i, alpha_j^vee>`` (Bourbaki order)."""
    n, f = t.rank, t.family
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        # 1-based nodes; a = <alpha_i, alpha_j^vee>, b = <alpha_j, alpha_i^vee>
        c[i - 1][j - 1] = a
        c[j - 1][i - 1] = b

    if f in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if f == "B":
            link(n - 1, n, -2, -1)   # alpha_n short
        elif f == "C":
            link(n - 1, n, -1, -2)   # alpha_n long
    elif f == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        if n >= 3:
            c[n - 2][n - 1] = c[n - 1][n - 2] = 0
            link(n - 2, n)
    elif f == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif f == "F":
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    elif f == "G":
        link(1, 2, -1, -3)           # alpha_1 short
    return tuple(tuple(row) for row in c)


def _check_cartan(c: Sequence[Sequence[int]]) -> None:
    n = len(c)
    for i in range(n):
        if len(c[i]) != n or c[i][i] != 2:
            raise RootSystemError("Cartan matrix must be square with diagonal 2")
        for j in range(n):
            if i != j:
                if c[i][j] not in (0, -1, -2, -3):
                    raise RootSystemError(f"bad off-diagonal entry {c[i][j]}")
                if (c[i][j] == 0) != (c[j][i] == 0):
                    raise RootSystemError("Cartan matrix zero pattern not symmetric")


def _symmetrizer(c: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Squared lengths ``(alpha_i, alpha_i)``, normalised so the shortest is 1 per component."""
    n = len(c)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp, stack = [start], [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and c[i][j] and d[j] is None:
                    # c[i][j] * d[j] == c[j][i] * d[i]
                    d[j] = d[i] * c[j][i] / c[i][j]
                    comp.append(j)
                    stack.append(j)
        m = min(d[k] for k in comp)
        for k in comp:
            d[k] = d[k] / m
    return tuple(d)  # type: ignore[arg-type]


@dataclass(frozen=True)
class RootSystem:
    """A (possibly reducible) root system given by its Cartan matrix.

    ``positive_roots`` is ordered by height, then lexicographically.
    """

    simple_type: SimpleType | None
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(neg(r) for r in self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(unit(self.rank, i) for i in range(self.rank))

    @cached_property
    def lengths(self) -> tuple[Fraction, ...]:
        return _symmetrizer(self.cartan)

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Invariant form on the simple roots, ``(alpha_i, alpha_j)``."""
        n, c, d = self.rank, self.cartan, self.lengths
        return tuple(tuple(c[i][j] * d[j] / 2 for j in range(n)) for i in range(n))

    def is_root(self, r: Sequence[int]) -> bool:
        return tuple(r) in self.root_set

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        g = self.gram
        return sum(
            (a[i] * b[j] * g[i][j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j]),
            Fraction(0),
        )

    def pairing(self, beta: Sequence[int], alpha: Sequence[int]) -> int:
        """``<beta, alpha^vee>`` for roots ``beta`` and ``alpha``."""
        val = 2 * self.inner(beta, alpha) / self.inner(alpha, alpha)
        if val.denominator != 1:
            raise RootSystemError(f"non-integral pairing for {beta}, {alpha}")
        return int(val)

    def coroot_pairing(self, beta: Sequence[int], i: int) -> int:
        """``<beta, alpha_i^vee>`` with ``i`` a 0-based simple index; linear in ``beta``."""
        return sum(b * self.cartan[k][i] for k, b in enumerate(beta))

    def reflect(self, beta: Sequence[int], i: int) -> Root:
        p = self.coroot_pairing(beta, i)
        out = list(beta)
        out[i] -= p
        return tuple(out)

    def height(self, r: Sequence[int]) -> int:
        return sum(r)

    def to_json(self) -> str:
        doc = {
            "type": str(self.simple_type) if self.simple_type else None,
            "rank": self.rank,
            "positive_roots": [list(r) for r in self.positive_roots],
            "cartan": [list(row) for row in self.cartan],
        }
        return json.dumps(doc, separators=(", ", ": "))


def unit(n: int, i: int) -> Root:
    return tuple(1 if k == i else 0 for k in range(n))


def neg(r: Sequence[int]) -> Root:
    return tuple(-x for x in r)


def add(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def subtract(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def generate_positive_roots(cartan: Sequence[Sequence[int]]) -> tuple[Root, ...]:
    """Positive roots, height by height, via root strings (``p - q = <beta, alpha_i^vee>``)."""
    n = len(cartan)
    known: set[Root] = set()
    layer = [unit(n, i) for i in range(n)]
    out: list[Root] = []
    while layer:
        layer.sort()
        out.extend(layer)
        known.update(layer)
        nxt: set[Root] = set()
        for beta in layer:
            for i in range(n):
                # length of the string below beta
                p, probe = 0, list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in known:
                        p += 1
                    else:
                        break
                q = p - sum(b * cartan[k][i] for k, b in enumerate(beta))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        layer = list(nxt)
    return tuple(out)


def from_cartan(cartan: Sequence[Sequence[int]], simple_type: SimpleType | None = None) -> RootSystem:
    _check_cartan(cartan)
    c = tuple(tuple(int(x) for x in row) for row in cartan)
    return RootSystem(simple_type, c, generate_positive_roots(c))


_CACHE: dict[SimpleType, RootSystem] = {}


def build_root_system(t: SimpleType | str) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    rs = _CACHE.get(t)
    if rs is None:
        rs = _CACHE.setdefault(t, from_cartan(cartan_matrix(t), t))
    return rs


def is_irreducible(rs: RootSystem) -> bool:
    return len(_components(rs.cartan)) == 1


def highest_root(rs: RootSystem) -> Root:
    if not is_irreducible(rs):
        raise RootSystemError("highest root requires an irreducible system")
    top = max(rs.positive_roots, key=sum)
    assert all(not rs.is_root(add(top, a)) for a in rs.simple_roots)
    return top


def coweight_pairing(r: Sequence[int], j: int) -> int:
    """``<r, omega_j>`` for a 1-based simple index ``j``."""
    if not 1 <= j <= len(r):
        raise RootSystemError(f"index {j} out of range 1..{len(r)}")
    return r[j - 1]


@dataclass(frozen=True)
class Subsystem:
    parent: RootSystem
    members: frozenset[Root]

    def __post_init__(self):
        for r in self.members:
            if not self.parent.is_root(r):
                raise RootSystemError(f"{r} is not a root of the parent system")

    @cached_property
    def positive(self) -> tuple[Root, ...]:
        return tuple(r for r in self.parent.positive_roots if r in self.members)

    def is_closed(self) -> bool:
        m = self.members
        if any(neg(r) not in m for r in m):
            return False
        for a in m:
            for b in m:
                s = add(a, b)
                if self.parent.is_root(s) and s not in m:
                    return False
        return True


def full_subsystem(rs: RootSystem) -> Subsystem:
    return Subsystem(rs, frozenset(rs.roots))


def solve_coordinates(basis: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    """Coordinates of ``target`` in the span of linearly independent ``basis``, or None."""
    k, n = len(basis), len(target)
    # columns are basis vectors; augmented n x (k+1)
    rows = [[Fraction(basis[c][r]) for c in range(k)] + [Fraction(target[r])] for r in range(n)]
    piv_cols, r = [], 0
    for col in range(k):
        p = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        return None
    out = [Fraction(0)] * k
    for i, col in enumerate(piv_cols):
        out[col] = rows[i][k]
    return out


def _rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        p = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col] / rows[rank][col]
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def relative_cartan(rs: RootSystem, simples: Sequence[Root]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(rs.pairing(a, b) for b in simples) for a in simples)


def is_simple_system(sub: Subsystem, candidate: Iterable[Sequence[int]]) -> bool:
    cand = [tuple(c) for c in candidate]
    for c in cand:
        if c not in sub.members:
            raise RootSystemError(f"candidate {c} is not in the subsystem")
    if not cand:
        return not sub.members
    if _rank(cand) != len(cand):
        return False
    c = relative_cartan(sub.parent, cand)
    for i in range(len(cand)):
        for j in range(len(cand)):
            if i == j and c[i][j] != 2:
                return False
            if i != j and c[i][j] > 0:
                return False
    for r in sub.members:
        coords = solve_coordinates(cand, r)
        if coords is None or any(x.denominator != 1 for x in coords):
            return False
        if not (all(x >= 0 for x in coords) or all(x <= 0 for x in coords)):
            return False
    return True


def extract_simple_system(sub: Subsystem) -> tuple[Root, ...]:
    """Indecomposable members of ``sub`` that are positive in the parent."""
    pos = sub.positive
    pos_set = set(pos)
    out = []
    for r in pos:
        if not any(subtract(r, a) in pos_set for a in pos if a != r):
            out.append(r)
    return tuple(out)


def _components(cartan: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(cartan)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def catalogue(rank: int) -> list[SimpleType]:
    """Pairwise non-isomorphic irreducible types of the given rank."""
    out = [SimpleType("A", rank)]
    if rank >= 2:
        out.append(SimpleType("B", rank))
    if rank >= 3:
        out.append(SimpleType("C", rank))
    if rank >= 4:
        out.append(SimpleType("D", rank))
    if rank in (6, 7, 8):
        out.append(SimpleType("E", rank))
    if rank == 4:
        out.append(SimpleType("F", 4))
    if rank == 2:
        out.append(SimpleType("G", 2))
    return out


def _invariants(c):
    n = len(c)
    edges = sorted(c[i][j] * c[j][i] for i in range(n) for j in range(i + 1, n) if c[i][j])
    degrees = sorted(sum(1 for j in range(n) if j != i and c[i][j]) for i in range(n))
    return n, edges, degrees


def _find_isomorphism(a, b) -> tuple[int, ...] | None:
    """A permutation ``p`` with ``a[i][j] == b[p[i]][p[j]]``, by backtracking."""
    n = len(a)
    perm: list[int] = []
    used = [False] * n

    def extend() -> bool:
        i = len(perm)
        if i == n:
            return True
        for cand in range(n):
            if used[cand] or b[cand][cand] != a[i][i]:
                continue
            if all(a[i][k] == b[cand][perm[k]] and a[k][i] == b[perm[k]][cand] for k in range(i)):
                perm.append(cand)
                used[cand] = True
                if extend():
                    return True
                perm.pop()
                used[cand] = False
        return False

    return tuple(perm) if extend() else None


def identify_irreducible(c: Sequence[Sequence[int]]) -> SimpleType:
    inv = _invariants(c)
    for t in catalogue(len(c)):
        ref = cartan_matrix(t)
        if _invariants(ref) == inv and _find_isomorphism(c, ref) is not None:
            return t
    raise RootSystemError(f"no catalogue match for Cartan matrix {c}")


def classify_cartan(c: Sequence[Sequence[int]]) -> list[SimpleType]:
    types = []
    for comp in _components(c):
        block = [[c[i][j] for j in comp] for i in comp]
        types.append(identify_irreducible(block))
    return sorted(types, key=lambda t: (-t.rank, t.family))


def classify_type(sub: Subsystem) -> list[SimpleType]:
    """Dynkin type of a closed subsystem, as a list sorted by decreasing rank."""
    if not sub.members:
        return []
    simples = extract_simple_system(sub)
    return classify_cartan(relative_cartan(sub.parent, simples))


def supported_types(max_rank: int = 8) -> list[SimpleType]:
    out = []
    for n in range(1, max_rank + 1):
        for f in _FAMILIES:
            try:
                out.append(SimpleType(f, n))
            except RootSystemError:
                pass
    return out


__all__ = [
    "Root",
    "RootSystem",
    "RootSystemError",
    "SimpleType",
    "Subsystem",
    "build_root_system",
    "cartan_matrix",
    "classify_cartan",
    "classify_type",
    "coweight_pairing",
    "extract_simple_system",
    "from_cartan",
    "full_subsystem",
    "highest_root",
    "is_simple_system",
    "neg",
    "solve_coordinates",
    "unit",
    "supported_types",
]
