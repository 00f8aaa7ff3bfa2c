"""Multiplicity bookkeeping for families attached to S_3, S_4 and S_5.

Pairs ``(x, sigma)`` with ``x`` a class of S_n and ``sigma`` an irreducible
character of its centralizer; only ``sigma(1)`` is ever needed, so
characters are tracked by degree plus an index.
"""
from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

CycleType = tuple[int, ...]


class MultiplicityError(ValueError):
    pass


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` with parts in descending order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def classes(n: int) -> list[CycleType]:
    if not 1 <= n <= 5:
        raise MultiplicityError(f"n = {n} outside 1..5")
    return sorted(partitions(n))


def class_label(x: CycleType) -> str:
    c = Counter(x)
    return ".".join(f"{k}^{m}" if m > 1 else str(k) for k, m in sorted(c.items(), reverse=True))


def class_size(x: CycleType) -> int:
    return math.factorial(sum(x)) // centralizer(x).order


@dataclass(frozen=True)
class CentralizerShape:
    """Direct product of wreath products ``Z_k wr S_m``, one per distinct part ``k``."""

    factors: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        return math.prod(k**m * math.factorial(m) for k, m in self.factors)


def centralizer(x: CycleType) -> CentralizerShape:
    c = Counter(x)
    return CentralizerShape(tuple(sorted(c.items(), reverse=True)))


def hook_length(shape: tuple[int, ...]) -> int:
    """Number of standard Young tableaux of the given shape."""
    n = sum(shape)
    if n == 0:
        return 1
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def wreath_degrees(k: int, m: int) -> list[int]:
    """Irreducible degrees of ``Z_k wr S_m``, one per k-tuple of partitions of total size m."""
    out = []
    for sizes in _compositions(m, k):
        multinom = math.factorial(m) // math.prod(math.factorial(s) for s in sizes)
        for lams in itertools.product(*(list(partitions(s)) for s in sizes)):
            out.append(multinom * math.prod(hook_length(lam) for lam in lams))
    return out


def irr_degrees(c: CentralizerShape) -> list[int]:
    degs = [1]
    for k, m in c.factors:
        degs = [a * b for a in degs for b in wreath_degrees(k, m)]
    return sorted(degs)


@dataclass(frozen=True)
class Pair:
    x: CycleType
    degree: int
    tag: int

    def label(self) -> str:
        return f"({class_label(self.x)}, sigma{self.tag}[{self.degree}])"


@dataclass(frozen=True)
class PairSet:
    n: int
    pairs: tuple[Pair, ...]

    def __len__(self):
        return len(self.pairs)

    def degrees_of(self, x: CycleType) -> list[int]:
        return [p.degree for p in self.pairs if p.x == x]


def pair_set(n: int) -> PairSet:
    if n not in (1, 2, 3, 4, 5):
        raise MultiplicityError(f"n = {n} outside 1..5")
    pairs = []
    for x in classes(n):
        for tag, d in enumerate(irr_degrees(centralizer(x))):
            pairs.append(Pair(x, d, tag))
    return PairSet(n, tuple(pairs))


@dataclass(frozen=True)
class MultiplicityTable:
    n: int
    rows: tuple[Pair, ...]
    cols: tuple[CycleType, ...]
    entries: tuple[tuple[int, ...], ...]

    def entry(self, row: Pair, y: CycleType) -> int:
        return self.entries[self.rows.index(row)][self.cols.index(y)]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "classes": [class_label(y) for y in self.cols],
            "pairs": [{"x": class_label(p.x), "sigma": p.tag, "degree": p.degree} for p in self.rows],
            "table": [list(r) for r in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def render(self) -> str:
        heads = [class_label(y) for y in self.cols]
        labels = [p.label() for p in self.rows]
        lw = max(len(s) for s in labels)
        cw = max(3, *(len(h) for h in heads))
        lines = [" " * lw + " | " + " ".join(h.rjust(cw) for h in heads)]
        lines.append("-" * len(lines[0]))
        for lab, row in zip(labels, self.entries):
            lines.append(lab.ljust(lw) + " | " + " ".join(str(v).rjust(cw) for v in row))
        return "\n".join(lines)


def kawanaka_table(n: int) -> MultiplicityTable:
    """Entry ``sigma(1)`` when the row class equals the column class, else 0."""
    ps = pair_set(n)
    cols = tuple(classes(n))
    entries = tuple(tuple(p.degree if p.x == y else 0 for y in cols) for p in ps.pairs)
    return MultiplicityTable(n, ps.pairs, cols, entries)


def degree_one_pairs(n: int) -> list[Pair]:
    return [p for p in pair_set(n).pairs if p.degree == 1]


def orbit_count(component_group_classes: int) -> int:
    """Rational orbits in ``C^F`` for split Frobenius: one per class of the component group."""
    if component_group_classes < 1:
        raise MultiplicityError("a group has at least one conjugacy class")
    return component_group_classes


def check_cuspidal_labels(n: int, labels: list[tuple[CycleType, int]]) -> bool:
    """True iff every user-supplied ``(x, tag)`` label names a degree-one pair."""
    index = {(p.x, p.tag): p for p in pair_set(n).pairs}
    for x, tag in labels:
        key = (tuple(sorted(x, reverse=True)), tag)
        if key not in index:
            raise MultiplicityError(f"no pair {key} for n = {n}")
        if index[key].degree != 1:
            return False
    return True
