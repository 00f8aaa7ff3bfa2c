"""Split-torus elements ``h(g^m_1, ..., g^m_l)`` as exponent vectors mod ``q - 1``.

The multiplicative group of F_q is modelled as Z/(q-1) over a fixed
abstract generator ``g``; field elements are never materialised.  The
element ``nu`` (a generator of F_p^x) then has exponent ``(q-1)/(p-1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .rootsys import RootSystem, Subsystem


class TorusError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class CyclicParams:
    p: int
    e: int = 1

    def __post_init__(self):
        if not _is_prime(self.p):
            raise TorusError(f"p = {self.p} is not prime")
        if self.e < 1:
            raise TorusError(f"exponent e = {self.e} must be positive")

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def modulus(self) -> int:
        return self.q - 1

    @property
    def nu_exponent(self) -> int:
        return self.modulus // (self.p - 1)

    @property
    def half_nu_exponent(self) -> int:
        """Exponent of a square root of ``nu``; needs ``q`` an even power of ``p``."""
        if self.e % 2:
            raise TorusError(f"q = {self.p}^{self.e} is not an even power of p; nu has no square root")
        return self.modulus // (2 * (self.p - 1))

    @classmethod
    def from_q(cls, p: int, q: int) -> "CyclicParams":
        e, x = 0, q
        while x > 1 and x % p == 0:
            x //= p
            e += 1
        if x != 1 or e == 0:
            raise TorusError(f"q = {q} is not a power of p = {p}")
        return cls(p, e)


@dataclass(frozen=True)
class TorusElement:
    params: CyclicParams
    exponents: tuple[int, ...]

    def __post_init__(self):
        m = self.params.modulus
        object.__setattr__(self, "exponents", tuple(int(x) % m for x in self.exponents))

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @classmethod
    def identity(cls, params: CyclicParams, rank: int) -> "TorusElement":
        return cls(params, (0,) * rank)


def eval_root(t: TorusElement, r: Sequence[int]) -> int:
    """Exponent of ``alpha(t)`` over the generator ``g``."""
    if len(r) != t.rank:
        raise TorusError(f"root of rank {len(r)} against torus element of rank {t.rank}")
    return sum(c * m for c, m in zip(r, t.exponents)) % t.params.modulus


def order(t: TorusElement) -> int:
    m = t.params.modulus
    return m // math.gcd(m, *t.exponents)


def kernel_subsystem(t: TorusElement, rs: RootSystem) -> Subsystem:
    if rs.rank != t.rank:
        raise TorusError(f"rank mismatch: system {rs.rank}, element {t.rank}")
    return Subsystem(rs, frozenset(r for r in rs.roots if eval_root(t, r) == 0))


def make_ohmori_torus(params: CyclicParams, n: Sequence[int], half: bool = False) -> TorusElement:
    """``h(nu^n_1, ...)``, or ``h(nu^(n_1/2), ...)`` when ``half``."""
    step = params.half_nu_exponent if half else params.nu_exponent
    return TorusElement(params, tuple(x * step for x in n))


def order_four_element(params: CyclicParams, rank: int, node: int) -> TorusElement:
    """Exponent ``(q-1)/4`` at the 1-based ``node``, zero elsewhere."""
    m = params.modulus
    if m % 4:
        raise TorusError(f"q = {params.q} is not 1 mod 4")
    ex = [0] * rank
    ex[node - 1] = m // 4
    return TorusElement(params, tuple(ex))
