"""Homology of finite cyclic groups and the graded pieces built from it."""
from __future__ import annotations

from dataclasses import dataclass

from .rings import GradedModule, ModuleExpr, direct_sum


def cyclic_group_homology(k, ring, max_degree) -> GradedModule:
    """``H_*(B Z_k; R)``: ``R`` in degree 0, ``R/kR`` in odd degrees and the
    ``k``-torsion of ``R`` in positive even degrees."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    degrees = [ring.free()]
    for n in range(1, max_degree + 1):
        if k == 1:
            degrees.append(ring.zero())
        elif n % 2:
            degrees.append(ring.quotient(k))
        else:
            degrees.append(ring.annihilator(k))
    return GradedModule(ring, tuple(degrees))


def t_star(k, ring, parity) -> ModuleExpr:
    """Periodic term of a mixed class with ``N_x = Z_k``: ``H_1(B Z_k; R)``
    in odd parity, ``H_2(B Z_k; R)`` in even parity."""
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    return cyclic_group_homology(k, ring, 2)[1 if parity == "odd" else 2]


@dataclass(frozen=True)
class TruncatedSum:
    """A direct sum over degrees that was cut off at ``through_degree``."""

    module: ModuleExpr
    through_degree: int

    def __str__(self):
        return f"{self.module}  [degrees <= {self.through_degree}]"


def k_star(table: GradedModule, parity, reduced=False) -> TruncatedSum:
    """Sum of the even (or odd) degrees of ``table``; the reduced even sum
    omits degree 0."""
    if parity == "even":
        start = 2 if reduced else 0
    elif parity == "odd":
        start = 1
    else:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    picked = [table[n] for n in range(start, table.max_degree + 1, 2)]
    return TruncatedSum(direct_sum(picked, table.ring), table.max_degree)
