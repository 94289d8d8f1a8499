"""Conjugacy classes of ``H * G``.

Classes split into four strata: the identity, classes meeting ``H``, classes
meeting ``G``, and the mixed classes (called U) that meet neither factor.
A word lies in U exactly when its cyclic core has two or more syllables.
Mixed classes are keyed by the least rotation of the core read as a
necklace of ``(h, g)`` pair symbols.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import kernels
from .groups import Side, class_index, finite_conjugacy_classes
from .words import FreeProduct, ReducedWord


class ClassKind(Enum):
    IDENTITY = "identity"
    H = "H"
    G = "G"
    MIXED = "mixed"


@dataclass(frozen=True)
class CyclicForm:
    core: ReducedWord
    conjugator: ReducedWord


@dataclass(frozen=True)
class ClassId:
    """Canonical label of a conjugacy class.

    ``rep`` is the canonical representative: the empty word, the least
    element of a finite class, or the canonical type-1 rotation.  ``index`` is
    the finite-class position for H and G classes.
    """

    kind: ClassKind
    rep: ReducedWord
    index: int | None = None

    def __str__(self):
        if self.kind is ClassKind.IDENTITY:
            return "identity"
        if self.kind is ClassKind.MIXED:
            return f"U[{self.rep}]"
        return f"{self.kind.value}[{self.index}]({self.rep})"


def cyclic_reduce(w: ReducedWord) -> CyclicForm:
    """Write ``w = u * core * u**-1`` with ``core`` cyclically reduced."""
    ctx = w.context
    codes = w.codes
    lo, hi = 0, len(codes)
    # peel matching end letters; the middle of a reduced word stays reduced
    while hi - lo >= 2 and (codes[lo] & 1) == (codes[hi - 1] & 1):
        side = codes[lo] & 1
        inv = ctx._inv[side]
        if inv[codes[lo] >> 1] == codes[hi - 1] >> 1:
            lo += 1
            hi -= 1
            continue
        # last * first merges into a single letter
        tab = ctx.table(side).table
        merged = tab[codes[hi - 1] >> 1][codes[lo] >> 1]
        core = codes[lo + 1 : hi - 1] + (merged << 1 | side,)
        return CyclicForm(ctx.from_codes(core), ctx.from_codes(codes[: lo + 1]))
    return CyclicForm(ctx.from_codes(codes[lo:hi]), ctx.from_codes(codes[:lo]))


def pair_symbols(core: ReducedWord) -> list[int]:
    """Read an h-first even-length core as integers ``h * |G| + g``."""
    gn = core.context.g.order
    c = core.codes
    return [(c[i] >> 1) * gn + (c[i + 1] >> 1) for i in range(0, len(c), 2)]


def from_pair_symbols(ctx: FreeProduct, symbols) -> ReducedWord:
    gn = ctx.g.order
    codes = []
    for s in symbols:
        codes.append((s // gn) << 1)
        codes.append((s % gn) << 1 | 1)
    return ctx.from_codes(tuple(codes))


def h_first(core: ReducedWord) -> ReducedWord:
    """Rotate a mixed cyclic core so it starts on the H side."""
    c = core.codes
    if c[0] & 1:
        return core.context.from_codes(c[1:] + c[:1])
    return core


def canonical_rotation(core: ReducedWord) -> ReducedWord:
    core = h_first(core)
    symbols = pair_symbols(core)
    start = kernels.least_rotation(symbols)
    return from_pair_symbols(core.context, symbols[start:] + symbols[:start])


def canonical_class(w: ReducedWord) -> ClassId:
    core = cyclic_reduce(w).core
    n = len(core)
    if n == 0:
        return ClassId(ClassKind.IDENTITY, core)
    if n == 1:
        side = core.first_side()
        t = core.context.table(side)
        idx = class_index(t, core.codes[0] >> 1)
        least = finite_conjugacy_classes(t)[idx][0]
        kind = ClassKind.H if side is Side.H else ClassKind.G
        return ClassId(kind, core.context.letter(side, least), idx)
    return ClassId(ClassKind.MIXED, canonical_rotation(core))


def are_conjugate(a: ReducedWord, b: ReducedWord) -> bool:
    a._check(b)
    return canonical_class(a) == canonical_class(b)


def _necklaces(k, n):
    """Necklaces of length n over range(k) in lexicographic order (FKM)."""
    a = [0] * (n + 1)

    def gen(t, p):
        if t > n:
            if n % p == 0:
                yield tuple(a[1 : n + 1])
            return
        a[t] = a[t - p]
        yield from gen(t + 1, p)
        for j in range(a[t - p] + 1, k):
            a[t] = j
            yield from gen(t + 1, t)

    yield from gen(1, 1)


def enumerate_U_classes(ctx: FreeProduct, max_pairs: int) -> list[ReducedWord]:
    """Canonical representatives of every mixed class whose cyclic core has at
    most ``2 * max_pairs`` syllables, ordered by length, then
    lexicographically.  Bound ``L`` output is a prefix of bound ``L + 1``."""
    hs = range(1, ctx.h.order)
    gs = range(1, ctx.g.order)
    alphabet = [h * ctx.g.order + g for h in hs for g in gs]
    out = []
    if not alphabet:
        return out
    for m in range(1, max_pairs + 1):
        for neck in _necklaces(len(alphabet), m):
            out.append(from_pair_symbols(ctx, [alphabet[i] for i in neck]))
    return out


def enumerate_U_classes_bruteforce(ctx: FreeProduct, max_pairs: int) -> list[ReducedWord]:
    """Same contract as :func:`enumerate_U_classes`, by canonicalising every
    type-1 word and removing duplicates."""
    from .words import SyllableType, classify_type, iter_words

    seen = set()
    for w in iter_words(ctx, 2 * max_pairs, 2):
        if classify_type(w) is SyllableType.TYPE1:
            seen.add(canonical_class(w).rep)
    return sorted(seen, key=lambda w: (len(w), w.sort_key()))
