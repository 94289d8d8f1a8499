"""Reduced cyclic and periodic cyclic homology of ``R[H * G]``.

The reduced theory of the free product is the sum of the reduced theories of
the two factors and one term per mixed conjugacy class: ``H_*(B Z_k; R)`` for
cyclic homology and the periodic term ``T_*`` for periodic cyclic homology,
``k`` being the class's root multiplicity.  The sum over mixed classes is
infinite; reports cover classes whose cyclic core has at most ``2L``
syllables and say so.

The factor summands are evaluated only where every finite class contributes
homology of a point (``R = Q``, or ``F_p`` with ``p`` prime to the group
order).  Otherwise they are carried as symbols.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..conjugacy import enumerate_U_classes
from ..groups import GroupTable, finite_conjugacy_classes
from ..roots import primitive_root
from ..words import FreeProduct, ReducedWord
from .cyclic import cyclic_group_homology, t_star
from .rings import CoefficientRing, GradedModule, ModuleExpr, UnsupportedRing

PARITIES = ("even", "odd")


def _tame(t: GroupTable, ring: CoefficientRing):
    return ring.kind == "Q" or (ring.kind == "F" and t.order % ring.modulus != 0)


def char0_side_contribution(t: GroupTable, ring: CoefficientRing, max_degree) -> GradedModule:
    """Reduced ``HC_*(R[t])`` when ``R`` sees every finite group in ``t`` as
    acyclic: one ``BS^1`` tower (``R`` in each even degree) per non-identity
    class.  The identity class contributes nothing after reduction."""
    if not _tame(t, ring):
        raise UnsupportedRing(f"{ring} is not rational for {t.name}; summand stays symbolic")
    towers = len(finite_conjugacy_classes(t)) - 1
    return GradedModule(
        ring,
        tuple(ring.free(0 if n % 2 else towers) for n in range(max_degree + 1)),
    )


def char0_side_periodic(t: GroupTable, ring: CoefficientRing) -> dict:
    """Reduced ``PHC_*(R[t])`` by parity on the same rational path."""
    if not _tame(t, ring):
        raise UnsupportedRing(f"{ring} is not rational for {t.name}; summand stays symbolic")
    towers = len(finite_conjugacy_classes(t)) - 1
    return {"even": ring.free(towers), "odd": ring.zero()}


@dataclass(frozen=True)
class SideSummand:
    label: str
    values: tuple[ModuleExpr, ...] | None  # None when symbolic

    @property
    def symbolic(self):
        return self.values is None


@dataclass(frozen=True)
class URow:
    word: ReducedWord
    k: int
    values: tuple[ModuleExpr, ...]
    n: float = math.inf


@dataclass(frozen=True)
class AssemblyReport:
    theory: str  # "HC" or "PHC"
    ring: CoefficientRing
    columns: tuple  # degrees for HC, parities for PHC
    class_bound: int
    sides: tuple[SideSummand, SideSummand]
    rows: tuple[URow, ...]
    max_degree: int | None = None
    notes: tuple[str, ...] = field(default=())

    def u_total(self) -> tuple[ModuleExpr, ...]:
        total = [self.ring.zero() for _ in self.columns]
        for row in self.rows:
            total = [a + b for a, b in zip(total, row.values)]
        return tuple(total)

    def total(self) -> tuple[ModuleExpr, ...] | None:
        """Column-wise direct sum of every summand, or None if a side is
        symbolic."""
        if any(s.symbolic for s in self.sides):
            return None
        total = list(self.u_total())
        for s in self.sides:
            total = [a + b for a, b in zip(total, s.values)]
        return tuple(total)

    @property
    def truncation(self):
        bits = [f"mixed classes truncated to cyclic length <= {2 * self.class_bound}"]
        if self.max_degree is not None:
            bits.append(f"degrees truncated to <= {self.max_degree}")
        return "; ".join(bits)


def _side(theory, letter, t, ring, columns, max_degree):
    label = f"~{theory}(R[{letter}])"
    if t.is_trivial():
        return SideSummand(label, tuple(ring.zero() for _ in columns))
    try:
        if theory == "HC":
            return SideSummand(label, char0_side_contribution(t, ring, max_degree).degrees)
        per = char0_side_periodic(t, ring)
        return SideSummand(label, tuple(per[c] for c in columns))
    except UnsupportedRing:
        return SideSummand(label, None)


def _u_classes(h, g, class_bound):
    if class_bound < 1:
        raise ValueError("class bound must be at least 1")
    ctx = FreeProduct(h, g)
    return [(w, primitive_root(w).multiplicity) for w in enumerate_U_classes(ctx, class_bound)]


def assemble_reduced_HC(h: GroupTable, g: GroupTable, ring, max_degree, class_bound) -> AssemblyReport:
    columns = tuple(range(max_degree + 1))
    rows = tuple(
        URow(w, k, cyclic_group_homology(k, ring, max_degree).degrees)
        for w, k in _u_classes(h, g, class_bound)
    )
    sides = (
        _side("HC", "H", h, ring, columns, max_degree),
        _side("HC", "G", g, ring, columns, max_degree),
    )
    return AssemblyReport("HC", ring, columns, class_bound, sides, rows, max_degree)


def assemble_reduced_PHC(h: GroupTable, g: GroupTable, ring, parity, class_bound) -> AssemblyReport:
    """``parity`` is ``"even"``, ``"odd"`` or ``None`` for both columns."""
    if parity is None:
        columns = PARITIES
    elif parity in PARITIES:
        columns = (parity,)
    else:
        raise ValueError(f"parity must be 'even', 'odd' or None, got {parity!r}")
    rows = tuple(
        URow(w, k, tuple(t_star(k, ring, c) for c in columns))
        for w, k in _u_classes(h, g, class_bound)
    )
    sides = (
        _side("PHC", "H", h, ring, columns, None),
        _side("PHC", "G", g, ring, columns, None),
    )
    return AssemblyReport("PHC", ring, columns, class_bound, sides, rows)
