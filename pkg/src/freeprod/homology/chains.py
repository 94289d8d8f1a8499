"""Homology of chain complexes of free abelian groups.

Integral homology comes from Smith normal forms of the boundary maps; other
coefficients follow from universal coefficients,
``H_n(C; R) = H_n(C) (x) R  (+)  Tor(H_{n-1}(C), R)``.
"""
from __future__ import annotations

from ..errors import FreeProdError
from .rings import GradedModule, ModuleExpr
from .snf import _shape, as_rows, matmul, smith_normal_form


class NotAComplex(FreeProdError):
    def __init__(self, degree, entry):
        self.degree = degree
        self.entry = entry
        super().__init__(
            f"boundary composite d{degree} d{degree + 1} is nonzero at entry {entry}"
        )


def _ranks(boundaries):
    ranks = []
    for n, b in enumerate(boundaries):
        rows, cols = _shape(b)
        if n == 0:
            ranks.append(rows)
        elif rows != ranks[-1]:
            raise ValueError(f"d{n + 1} has {rows} rows but C{n} has rank {ranks[-1]}")
        ranks.append(cols)
    return ranks


def check_complex(boundaries, ranks=None):
    ranks = ranks or _ranks(boundaries)
    for n in range(1, len(boundaries)):
        a, b = boundaries[n - 1], boundaries[n]
        if not (ranks[n - 1] and ranks[n] and ranks[n + 1]):
            continue
        prod = matmul(as_rows(a), as_rows(b))
        for i, row in enumerate(prod):
            for j, x in enumerate(row):
                if x:
                    raise NotAComplex(n, (i, j))


def integral_homology(boundaries, max_degree, ranks=None):
    """``[(free_rank, torsion_orders), ...]`` for degrees ``0..max_degree``.

    ``boundaries[n - 1]`` is ``d_n : C_n -> C_{n-1}``; groups past the last
    boundary are zero.
    """
    ranks = list(ranks) if ranks is not None else _ranks(boundaries)
    check_complex(boundaries, ranks)
    snfs = [
        smith_normal_form(b, (ranks[n], ranks[n + 1]))[0] for n, b in enumerate(boundaries)
    ]
    out = []
    for n in range(max_degree + 1):
        rank_n = ranks[n] if n < len(ranks) else 0
        outgoing = len(snfs[n - 1]) if 1 <= n <= len(snfs) else 0
        incoming = snfs[n] if n < len(snfs) else ()
        out.append((rank_n - outgoing - len(incoming), [d for d in incoming if d > 1]))
    return out


def chain_homology(boundaries, ring, max_degree, ranks=None) -> GradedModule:
    integral = integral_homology(boundaries, max_degree, ranks)
    degrees = []
    for n, (free, torsion) in enumerate(integral):
        parts = [ring.cyclic_abelian(0)] * free
        parts += [ring.cyclic_abelian(d) for d in torsion]
        if n:
            parts += [ring.annihilator(d) for d in integral[n - 1][1]]
        degrees.append(ModuleExpr.build(ring, [s for p in parts for s in p.summands]))
    return GradedModule(ring, tuple(degrees))


def periodic_resolution(k, length):
    """Boundaries ``d_1..d_length`` of the 2-periodic resolution of ``Z`` over
    ``Z[Z_k]`` after tensoring with trivial ``Z``: ``0, k, 0, k, ...``."""
    return [[[0 if n % 2 else k]] for n in range(1, length + 1)]
