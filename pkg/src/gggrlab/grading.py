"""Weighted Dynkin diagrams and the gradings they induce on a root system."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .rootsys import (
    Root,
    RootSystem,
    Subsystem,
    add,
    build_root_system,
    is_simple_system,
    solve_coordinates,
)


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    rs: RootSystem
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) != self.rs.rank:
            raise GradingError(f"expected {self.rs.rank} weights, got {len(self.weights)}")
        if any(w not in (0, 1, 2) for w in self.weights):
            raise GradingError(f"weights must lie in {{0,1,2}}: {self.weights}")

    @classmethod
    def of(cls, type_name: str, weights: Sequence[int]) -> "WeightedDynkinDiagram":
        return cls(build_root_system(type_name), tuple(weights))

    def __call__(self, r: Sequence[int]) -> int:
        return extend(self, r)

    @cached_property
    def grading(self) -> "Grading":
        levels: dict[int, list[Root]] = {}
        for r in self.rs.positive_roots:
            levels.setdefault(extend(self, r), []).append(r)
        levi = tuple(r for r in self.rs.roots if extend(self, r) == 0)
        return Grading(
            levi_roots=levi,
            level_sets={k: tuple(v) for k, v in sorted(levels.items())},
        )

    def level(self, i: int) -> tuple[Root, ...]:
        return self.grading.level_sets.get(i, ())

    def to_json(self) -> str:
        return json.dumps({"type": str(self.rs.simple_type), "weights": list(self.weights)})

    @classmethod
    def from_json(cls, text: str) -> "WeightedDynkinDiagram":
        doc = json.loads(text)
        return cls.of(doc["type"], doc["weights"])


@dataclass(frozen=True)
class Grading:
    levi_roots: tuple[Root, ...]
    # level_sets[0] holds the positive Levi roots
    level_sets: dict[int, tuple[Root, ...]]

    def positive_levi(self) -> tuple[Root, ...]:
        return self.level_sets.get(0, ())


def extend(wdd: WeightedDynkinDiagram, r: Sequence[int]) -> int:
    return sum(c * w for c, w in zip(r, wdd.weights))


def levi_subsystem(wdd: WeightedDynkinDiagram) -> Subsystem:
    return Subsystem(wdd.rs, frozenset(wdd.grading.levi_roots))


def index_exponent(wdd: WeightedDynkinDiagram) -> int:
    """``k`` with ``[U_{d,1} : U_{d,2}] = q**k``; always even for a genuine diagram."""
    k = len(wdd.level(1))
    if k % 2:
        raise GradingError(f"odd number ({k}) of degree-1 roots; not a weighted Dynkin diagram")
    return k


def half_index(wdd: WeightedDynkinDiagram, q: int) -> int:
    """``[U_{d,1} : U_{d,2}]^(1/2) = q**(k/2)``."""
    return q ** (index_exponent(wdd) // 2)


@dataclass(frozen=True)
class SupportSpec:
    wdd: WeightedDynkinDiagram
    support: frozenset[Root]

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(tuple(r) for r in self.support))
        for r in self.support:
            if not self.wdd.rs.is_root(r):
                raise GradingError(f"{r} is not a root")
            if extend(self.wdd, r) != 2:
                raise GradingError(f"support root {r} has weight {extend(self.wdd, r)}, not 2")


def saturate_support(spec: SupportSpec) -> frozenset[Root]:
    """Close the support under adding degree-0 roots while staying in degree 2."""
    wdd = spec.wdd
    rs = wdd.rs
    levi = wdd.grading.levi_roots
    out = set(spec.support)
    work = list(out)
    while work:
        a = work.pop()
        for b in levi:
            s = add(a, b)
            if s not in out and rs.is_root(s):
                # extend(s) == 2 automatically since extend(b) == 0
                out.add(s)
                work.append(s)
    return frozenset(out)


def support_from_roots(wdd: WeightedDynkinDiagram, roots: Iterable[Sequence[int]]) -> SupportSpec:
    return SupportSpec(wdd, frozenset(tuple(r) for r in roots))


@dataclass(frozen=True)
class RelativeDiagram:
    """Weights on a simple system of a subsystem, extended additively over that subsystem.

    Used when the grading lives on a centralizer subsystem whose simple
    system is not part of the ambient one (e.g. it contains ``-alpha_0``).
    """

    sub: Subsystem
    simples: tuple[Root, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "simples", tuple(tuple(s) for s in self.simples))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.simples) != len(self.weights):
            raise GradingError("one weight per simple root required")
        if any(w not in (0, 1, 2) for w in self.weights):
            raise GradingError(f"weights must lie in {{0,1,2}}: {self.weights}")
        if not is_simple_system(self.sub, self.simples):
            raise GradingError("given roots are not a simple system of the subsystem")

    @cached_property
    def _coords(self) -> dict[Root, tuple[int, ...]]:
        out = {}
        for r in self.sub.members:
            c = solve_coordinates(self.simples, r)
            assert c is not None
            out[r] = tuple(int(x) for x in c)
        return out

    def __call__(self, r: Sequence[int]) -> int:
        r = tuple(r)
        if r not in self.sub.members:
            raise GradingError(f"{r} is not in the subsystem")
        return sum(c * w for c, w in zip(self._coords[r], self.weights))

    def zero_positives(self) -> tuple[Root, ...]:
        """Members positive in the ambient order with degree 0."""
        return tuple(r for r in self.sub.positive if self(r) == 0)

    def rational_extension(self) -> tuple[Fraction, ...]:
        """Weights on the ambient simple roots of the unique linear extension (full rank only)."""
        n = self.sub.parent.rank
        if len(self.simples) != n:
            raise GradingError("extension to the ambient lattice needs a full-rank subsystem")
        # solve  sum_k simples[i][k] * w_k = weights[i]  for w
        cols = [[s[k] for s in self.simples] for k in range(n)]
        w = solve_coordinates(cols, self.weights)
        assert w is not None
        return tuple(w)

    def ambient_zero_positives(self) -> tuple[Root, ...]:
        """Ambient positive roots on which the rational extension vanishes."""
        w = self.rational_extension()
        return tuple(r for r in self.sub.parent.positive_roots if sum(c * x for c, x in zip(r, w)) == 0)

    def to_dict(self) -> dict:
        return {
            "ambient": str(self.sub.parent.simple_type),
            "simples": [list(s) for s in self.simples],
            "weights": list(self.weights),
        }
