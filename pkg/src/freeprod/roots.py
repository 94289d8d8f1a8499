"""Periodicity, primitive roots and centralizers.

A mixed element ``x`` has infinite cyclic centralizer generated by its
primitive root ``y``, and ``x = y**k`` with ``k`` maximal, so the quotient
of the centralizer by the subgroup generated by ``x`` is cyclic of order
``k``.  Elements conjugate into a factor have the factor's centralizer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .conjugacy import (
    ClassId,
    ClassKind,
    canonical_rotation,
    cyclic_reduce,
)
from .errors import FreeProdError
from .groups import Side, element_order, finite_centralizer, finite_max_root
from .words import ReducedWord


class HypothesisViolated(FreeProdError):
    """``hypothesis`` is ``"i"`` or ``"ii"``; ``index`` is the 0-based
    position ``j`` whose comparison failed, ``other`` the position it was
    compared against."""

    def __init__(self, hypothesis, index, other):
        self.hypothesis = hypothesis
        self.index = index
        self.other = other
        super().__init__(
            f"hypothesis ({hypothesis}) fails: s[{index}] != s[{other}]"
        )


class TrivialWord(FreeProdError):
    pass


def lemma1_decompose(symbols: Sequence, p: int) -> tuple[int, list]:
    """Decompose a sequence that agrees with its shifts by ``p`` and ``n - p``.

    With ``n = len(symbols)`` and ``d = n - p`` the hypotheses are
    (i) ``s[j] == s[d + j]`` for ``j < p`` and (ii) ``s[j] == s[j + p]`` for
    ``j < d``.  Under both, the sequence is ``n / c`` copies of its first
    ``c = gcd(n, p)`` symbols, which is returned as ``(c, prefix)``.
    """
    n = len(symbols)
    if not 0 < p < n:
        raise ValueError(f"need 0 < p < n, got p={p}, n={n}")
    d = n - p
    for j in range(p):
        if symbols[j] != symbols[d + j]:
            raise HypothesisViolated("i", j, d + j)
    for j in range(d):
        if symbols[j] != symbols[j + p]:
            raise HypothesisViolated("ii", j, j + p)
    c = math.gcd(n, p)
    return c, list(symbols[:c])


@dataclass(frozen=True)
class RootData:
    """``root ** multiplicity`` is the analysed word.  ``canonical`` is the
    primitive core in canonical rotation (mixed words) or the root letter's
    core (factor words); commuting words share it."""

    root: ReducedWord
    multiplicity: int
    canonical: ReducedWord


def primitive_root(w: ReducedWord) -> RootData:
    if not w:
        raise TrivialWord("the identity has no primitive root")
    form = cyclic_reduce(w)
    core, u = form.core, form.conjugator
    ctx = w.context
    if len(core) == 1:
        side = core.first_side()
        y, k = finite_max_root(ctx.table(side), core.codes[0] >> 1)
        root_core = ctx.letter(side, y)
        return RootData(root_core.conjugate_by(u), k, root_core)
    codes = core.codes
    base = 2 * max(ctx.h.order, ctx.g.order)
    pairs = [codes[i] * base + codes[i + 1] for i in range(0, len(codes), 2)]
    period = kernels.minimal_period(pairs)
    root_core = ctx.from_codes(codes[: 2 * period])
    return RootData(
        root_core.conjugate_by(u), len(pairs) // period, canonical_rotation(root_core)
    )


def class_invariants(c: ClassId):
    """``(n, k)``: the element order (0 for the identity, ``math.inf`` for
    mixed classes) and the maximal root exponent (``None`` for the
    identity)."""
    if c.kind is ClassKind.IDENTITY:
        return 0, None
    if c.kind is ClassKind.MIXED:
        return math.inf, primitive_root(c.rep).multiplicity
    side = c.rep.first_side()
    t = c.rep.context.table(side)
    i = c.rep.codes[0] >> 1
    return element_order(t, i), finite_max_root(t, i)[1]


@dataclass(frozen=True)
class FullGroup:
    pass


@dataclass(frozen=True)
class FiniteSide:
    """Centralizer ``u * C * u**-1`` where ``C`` is the finite centralizer of
    the core letter inside its factor."""

    side: Side
    elements: frozenset
    conjugator: ReducedWord


@dataclass(frozen=True)
class InfiniteCyclic:
    """Centralizer generated by ``generator``; ``x`` generates the index-``k``
    subgroup."""

    generator: ReducedWord
    k: int


def centralizer(w: ReducedWord):
    if not w:
        return FullGroup()
    form = cyclic_reduce(w)
    if len(form.core) == 1:
        side = form.core.first_side()
        t = w.context.table(side)
        return FiniteSide(side, finite_centralizer(t, form.core.codes[0] >> 1), form.conjugator)
    data = primitive_root(w)
    return InfiniteCyclic(data.root, data.multiplicity)


def commutes(a: ReducedWord, b: ReducedWord) -> bool:
    return a * b == b * a

