"""Integer linear systems  sum_j n_j <alpha, omega_j> = target  and their exact solution.

Since ``<alpha, omega_j>`` is the ``j``-th simple-root coefficient of
``alpha``, each constraint row is just the root's coefficient vector.
Solving is done over the integers with unimodular column operations
(a column-style Hermite reduction), so rational rank, integer
solvability and the kernel rank all come out of one pass.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from .grading import WeightedDynkinDiagram
from .rootsys import Root, RootSystem

Status = Literal["unique", "none", "affine"]


class OhmoriError(ValueError):
    pass


@dataclass(frozen=True)
class OhmoriSystem:
    rank: int
    constraints: tuple[tuple[Root, int], ...]
    rs: RootSystem | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for r, t in self.constraints:
            if len(r) != self.rank:
                raise OhmoriError(f"constraint root {r} has wrong length for rank {self.rank}")
            if int(t) != t:
                raise OhmoriError(f"non-integer target {t}")

    def __len__(self):
        return len(self.constraints)

    def matrix(self) -> list[list[int]]:
        return [list(r) for r, _ in self.constraints]

    def targets(self) -> list[int]:
        return [t for _, t in self.constraints]


@dataclass(frozen=True)
class OhmoriSolution:
    status: Status
    point: tuple[int, ...] | None = None
    kernel_rank: int = 0
    rank: int = 0

    def to_dict(self) -> dict:
        doc: dict = {"status": self.status}
        if self.point is not None:
            doc["n"] = list(self.point)
        if self.status == "affine":
            doc["kernel_rank"] = self.kernel_rank
        return doc


def build_system(
    wdd: WeightedDynkinDiagram,
    support: Iterable[Sequence[int]],
    support_target: int,
    zero_domain: Iterable[Sequence[int]] | str = "levi",
) -> OhmoriSystem:
    """Support roots get ``support_target``; every root of ``zero_domain`` gets 0.

    ``zero_domain="levi"`` means all positive roots of degree 0 under ``wdd``.
    """
    rs = wdd.rs
    if isinstance(zero_domain, str):
        if zero_domain != "levi":
            raise OhmoriError(f"unknown zero domain {zero_domain!r}")
        zeros = list(wdd.level(0))
    else:
        zeros = [tuple(z) for z in zero_domain]
    cons: list[tuple[Root, int]] = []
    for r in support:
        r = tuple(r)
        if not rs.is_root(r):
            raise OhmoriError(f"support element {r} is not a root of {rs.simple_type}")
        cons.append((r, int(support_target)))
    for z in zeros:
        if not rs.is_root(z):
            raise OhmoriError(f"zero-domain element {z} is not a root of {rs.simple_type}")
        cons.append((z, 0))
    return OhmoriSystem(rs.rank, tuple(cons), rs)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def column_hermite(a: Sequence[Sequence[int]], ncols: int):
    """Return ``(h, u, pivots)`` with ``a @ u == h`` column-echelon and ``u`` unimodular.

    ``pivots`` lists ``(row, col)``; row ``row`` is the first row with a
    nonzero entry in column ``col``.
    """
    h = [list(row) for row in a]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(c, j, s, t, x, y):
        # col_c <- s col_c + t col_j ; col_j <- x col_c + y col_j
        for mat in (h, u):
            for row in mat:
                vc, vj = row[c], row[j]
                row[c], row[j] = s * vc + t * vj, x * vc + y * vj

    pivots = []
    c = 0
    for i in range(len(h)):
        if c == ncols:
            break
        for j in range(c + 1, ncols):
            b = h[i][j]
            if b == 0:
                continue
            g, s, t = _egcd(h[i][c], b)
            colop(c, j, s, t, -b // g, h[i][c] // g)
        if h[i][c] != 0:
            if h[i][c] < 0:
                for mat in (h, u):
                    for row in mat:
                        row[c] = -row[c]
            pivots.append((i, c))
            c += 1
    return h, u, pivots


def solve(sys: OhmoriSystem) -> OhmoriSolution:
    n = sys.rank
    a, b = sys.matrix(), sys.targets()
    h, u, pivots = column_hermite(a, n)
    rank = len(pivots)
    pivot_col = dict(pivots)
    y = [0] * n
    for i, row in enumerate(h):
        resid = b[i] - sum(row[j] * y[j] for j in range(n) if y[j])
        if i in pivot_col:
            c = pivot_col[i]
            if resid % row[c]:
                return OhmoriSolution("none", rank=rank)
            y[c] = resid // row[c]
        elif resid:
            return OhmoriSolution("none", rank=rank)
    x = tuple(sum(u[r][k] * y[k] for k in range(n)) for r in range(n))
    assert verify(sys, x)
    if rank == n:
        return OhmoriSolution("unique", x, 0, rank)
    return OhmoriSolution("affine", x, n - rank, rank)


def verify(sys: OhmoriSystem, n: Sequence[int]) -> bool:
    if len(n) != sys.rank:
        raise OhmoriError(f"vector of length {len(n)} for a rank-{sys.rank} system")
    return all(sum(c * x for c, x in zip(r, n)) == t for r, t in sys.constraints)


def system_from_json(doc: dict | str) -> OhmoriSystem:
    if isinstance(doc, str):
        doc = json.loads(doc)
    wdd = WeightedDynkinDiagram.of(doc["type"], doc["weights"])
    support = [tuple(r) for r in doc.get("support", [])]
    zd = doc.get("zero_domain", "levi")
    if not isinstance(zd, str):
        zd = [tuple(r) for r in zd]
    return build_system(wdd, support, doc.get("support_target", 1), zd)


def support_values(n: Sequence[int], roots: Iterable[Sequence[int]]) -> dict[Root, int]:
    return {tuple(r): sum(c * x for c, x in zip(r, n)) for r in roots}

