"""Coefficient rings and finitely generated modules over them.

Modules over ``Z`` and ``Z/m`` are stored as invariant factors: ``0`` marks a
free summand, ``d >= 2`` a cyclic summand ``R/(d)``, torsion first in
divisibility order and free summands last.  Over a field every summand is
free, so the module is just its dimension.
"""
from __future__ import annotations

import math
import re
from collections import defaultdict
from dataclasses import dataclass

from ..errors import FreeProdError


class UnsupportedRing(FreeProdError):
    pass


def _factorize(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _is_prime(n):
    return n >= 2 and _factorize(n) == {n: 1}


@dataclass(frozen=True)
class CoefficientRing:
    kind: str  # "Z", "Z/m", "Q" or "F"
    modulus: int = 0

    def __post_init__(self):
        if self.kind == "Z/m" and self.modulus < 2:
            raise UnsupportedRing(f"Z/{self.modulus}: modulus must be at least 2")
        if self.kind == "F" and not _is_prime(self.modulus):
            raise UnsupportedRing(f"F{self.modulus}: characteristic must be prime")
        if self.kind not in ("Z", "Z/m", "Q", "F"):
            raise UnsupportedRing(self.kind)

    def __str__(self):
        return {"Z": "Z", "Q": "Q", "Z/m": f"Z/{self.modulus}", "F": f"F{self.modulus}"}[
            self.kind
        ]

    @property
    def is_field(self):
        return self.kind in ("Q", "F")

    @property
    def characteristic(self):
        return self.modulus if self.kind in ("Z/m", "F") else 0

    @property
    def contains_rationals(self):
        return self.kind == "Q"

    def zero(self) -> ModuleExpr:
        return ModuleExpr(self, ())

    def free(self, rank=1) -> ModuleExpr:
        return ModuleExpr(self, (0,) * rank)

    def cyclic_abelian(self, d) -> ModuleExpr:
        """``Z/d`` tensored with R (``d = 0`` meaning ``Z``); this is also
        ``R/dR``."""
        if self.kind == "Z":
            return ModuleExpr.build(self, [d])
        if self.kind == "Z/m":
            return ModuleExpr.build(self, [math.gcd(d, self.modulus)])
        if self.kind == "Q":
            return self.free(1 if d == 0 else 0)
        return self.free(1 if d % self.modulus == 0 else 0)

    def quotient(self, d) -> ModuleExpr:
        return self.cyclic_abelian(d)

    def annihilator(self, d) -> ModuleExpr:
        """``{r in R : d r = 0}``, which is also ``Tor(Z/d, R)`` for d >= 1."""
        if d == 0:
            return self.free()
        if self.kind == "Z/m":
            return ModuleExpr.build(self, [math.gcd(d, self.modulus)])
        if self.kind == "F":
            return self.free(1 if d % self.modulus == 0 else 0)
        return self.zero()


INTEGERS = CoefficientRing("Z")
RATIONALS = CoefficientRing("Q")


def integers_mod(m):
    return CoefficientRing("Z/m", m)


def prime_field(p):
    return CoefficientRing("F", p)


def parse_ring(text) -> CoefficientRing:
    text = text.strip()
    if text in ("Z", "ZZ"):
        return INTEGERS
    if text in ("Q", "QQ"):
        return RATIONALS
    m = re.fullmatch(r"Z/(\d+)", text)
    if m:
        return integers_mod(int(m[1]))
    m = re.fullmatch(r"F(\d+)", text)
    if m:
        return prime_field(int(m[1]))
    raise UnsupportedRing(f"unknown ring {text!r}: use Z, Z/<m>, Q or F<p>")


def invariant_factors(orders):
    """Invariant factors ``d1 | d2 | ...`` of a direct sum of cyclic groups of
    the given finite orders (orders 1 are dropped)."""
    powers = defaultdict(list)
    for d in orders:
        for p, e in _factorize(d).items():
            powers[p].append(p**e)
    if not powers:
        return []
    length = max(len(v) for v in powers.values())
    factors = [1] * length
    for p, vs in powers.items():
        vs.sort(reverse=True)
        for i, q in enumerate(vs):
            factors[length - 1 - i] *= q
    return factors


@dataclass(frozen=True)
class ModuleExpr:
    ring: CoefficientRing
    summands: tuple[int, ...]

    @classmethod
    def build(cls, ring, orders) -> ModuleExpr:
        """Normalise an arbitrary list of summand orders over ``ring``."""
        if ring.is_field:
            return cls(ring, (0,) * sum(1 for d in orders if d == 0))
        free = sum(1 for d in orders if d == 0)
        torsion = [d for d in orders if d > 1]
        if ring.kind == "Z/m":
            m = ring.modulus
            torsion = [math.gcd(d, m) for d in torsion] + [m] * free
            factors = invariant_factors(torsion)
            free = sum(1 for d in factors if d == m)
            torsion = [d for d in factors if d != m]
        else:
            torsion = invariant_factors(torsion)
        return cls(ring, tuple(torsion) + (0,) * free)

    @property
    def rank(self):
        return sum(1 for d in self.summands if d == 0)

    @property
    def torsion(self):
        return tuple(d for d in self.summands if d)

    @property
    def dim(self):
        if not self.ring.is_field:
            raise UnsupportedRing(f"dimension is only defined over a field, not {self.ring}")
        return len(self.summands)

    def is_zero(self):
        return not self.summands

    def __add__(self, other: ModuleExpr) -> ModuleExpr:
        if self.ring != other.ring:
            raise UnsupportedRing(f"cannot add modules over {self.ring} and {other.ring}")
        return ModuleExpr.build(self.ring, self.summands + other.summands)

    def __str__(self):
        if not self.summands:
            return "0"
        r = str(self.ring)
        parts = []
        if self.rank:
            parts.append(r if self.rank == 1 else f"{r}^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " (+) ".join(parts)

    def to_json(self):
        if self.ring.is_field:
            return {"dim": self.dim}
        return {"rank": self.rank, "torsion": list(self.torsion)}


def direct_sum(modules, ring) -> ModuleExpr:
    total = ring.zero()
    for m in modules:
        total = total + m
    return total


@dataclass(frozen=True)
class GradedModule:
    ring: CoefficientRing
    degrees: tuple[ModuleExpr, ...]

    @property
    def max_degree(self):
        return len(self.degrees) - 1

    def __getitem__(self, n) -> ModuleExpr:
        return self.degrees[n]

    def __add__(self, other: GradedModule) -> GradedModule:
        if len(self.degrees) != len(other.degrees):
            raise ValueError("graded modules cover different degree ranges")
        return GradedModule(self.ring, tuple(a + b for a, b in zip(self.degrees, other.degrees)))

    def is_zero(self):
        return all(m.is_zero() for m in self.degrees)

    @classmethod
    def zero(cls, ring, max_degree) -> GradedModule:
        return cls(ring, (ring.zero(),) * (max_degree + 1))
