"""Reduced words in the free product ``H * G`` of two finite groups.

Every element has a unique reduced form: no identity letters and strictly
alternating sides.  Reduction is a single left-to-right stack pass, which
suffices because deleting identities and merging same-side neighbours is
confluent.
"""
from __future__ import annotations

import re
from enum import Enum
from typing import Iterable, Iterator, NamedTuple

from . import kernels
from .errors import FreeProdError, MixedContexts
from .groups import GroupTable, Side


class IndexOutOfRange(FreeProdError):
    pass


class WordSyntaxError(FreeProdError):
    pass


class Letter(NamedTuple):
    side: Side
    index: int

    def __str__(self):
        return f"{self.side.letter}{self.index}"


class SyllableType(Enum):
    EMPTY = 0
    TYPE1 = 1  # h g h g ... h g
    TYPE2 = 2  # h g ... h g h
    TYPE3 = 3  # g h g ... h g
    TYPE4 = 4  # g h g ... g h, length >= 4
    TYPE5 = 5  # g
    TYPE6 = 6  # h
    TYPE7 = 7  # g h


_TOKEN = re.compile(r"([hg])(\d+)")


class FreeProduct:
    """The context ``H * G`` that words live in."""

    def __init__(self, h: GroupTable, g: GroupTable):
        self.h = h
        self.g = g
        self._hflat = h.flat
        self._gflat = g.flat
        self._inv = (h.inverses, g.inverses)
        self.identity = ReducedWord(self, ())

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, FreeProduct) and self.h == other.h and self.g == other.g

    def __hash__(self):
        return hash((self.h, self.g))

    def __repr__(self):
        return f"FreeProduct({self.h.name}, {self.g.name})"

    def table(self, side):
        return self.g if side else self.h

    def _reduce_codes(self, codes):
        return kernels.reduce_codes(
            codes, self._hflat, self.h.order, self._gflat, self.g.order
        )

    def word(self, raw: Iterable) -> ReducedWord:
        """Reduce a raw sequence of ``(side, index)`` pairs (identity letters
        allowed)."""
        codes = []
        for side, index in raw:
            side = Side(side)
            if not 0 <= index < self.table(side).order:
                raise IndexOutOfRange(
                    f"{side.letter}{index} out of range for {self.table(side).name}"
                )
            codes.append(index << 1 | side)
        return ReducedWord(self, tuple(self._reduce_codes(codes)))

    def letter(self, side, index) -> ReducedWord:
        return self.word([(side, index)])

    def parse(self, text: str) -> ReducedWord:
        """Parse ``"h1 g2 h1"``; ``e`` (or an empty string) is the identity."""
        raw = []
        for token in text.split():
            if token == "e":
                continue
            m = _TOKEN.fullmatch(token)
            if m is None:
                raise WordSyntaxError(f"bad token {token!r}: expected h<i>, g<i> or e")
            raw.append((Side.H if m[1] == "h" else Side.G, int(m[2])))
        return self.word(raw)

    def from_codes(self, codes) -> ReducedWord:
        return ReducedWord(self, tuple(codes))


class ReducedWord:
    """An element of ``H * G`` in normal form.  Immutable."""

    __slots__ = ("context", "codes", "_hash")

    def __init__(self, context: FreeProduct, codes: tuple[int, ...]):
        self.context = context
        self.codes = codes
        self._hash = None

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(Side(c & 1), c >> 1) for c in self.codes)

    def __len__(self):
        return len(self.codes)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self):
        return bool(self.codes)

    def __eq__(self, other):
        if not isinstance(other, ReducedWord):
            return NotImplemented
        return self.codes == other.codes and self.context == other.context

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.codes)
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return [(c & 1, c >> 1) for c in self.codes]

    def __str__(self):
        return " ".join(str(x) for x in self.letters) if self.codes else "e"

    def __repr__(self):
        return f"ReducedWord({str(self)!r})"

    def _check(self, other):
        if self.context != other.context:
            raise MixedContexts()

    def __mul__(self, other: ReducedWord) -> ReducedWord:
        self._check(other)
        if not self.codes:
            return other
        if not other.codes:
            return self
        return ReducedWord(
            self.context, tuple(self.context._reduce_codes(self.codes + other.codes))
        )

    def __invert__(self) -> ReducedWord:
        inv = self.context._inv
        return ReducedWord(
            self.context, tuple(inv[c & 1][c >> 1] << 1 | (c & 1) for c in reversed(self.codes))
        )

    def __pow__(self, m: int) -> ReducedWord:
        base = self if m >= 0 else ~self
        m = abs(m)
        result = self.context.identity
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def conjugate_by(self, u: ReducedWord) -> ReducedWord:
        """``u * self * u**-1``."""
        return u * self * ~u

    def first_side(self):
        return Side(self.codes[0] & 1)

    def last_side(self):
        return Side(self.codes[-1] & 1)


def reduce(raw, h: GroupTable, g: GroupTable) -> ReducedWord:
    return FreeProduct(h, g).word(raw)


def concat_mul(a: ReducedWord, b: ReducedWord) -> ReducedWord:
    return a * b


def invert(w: ReducedWord) -> ReducedWord:
    return ~w


def power(w: ReducedWord, m: int) -> ReducedWord:
    return w**m


def syllable_length(w: ReducedWord) -> int:
    return len(w.codes)


def classify_type(w: ReducedWord) -> SyllableType:
    n = len(w.codes)
    if n == 0:
        return SyllableType.EMPTY
    first, last = w.first_side(), w.last_side()
    if n == 1:
        return SyllableType.TYPE5 if first is Side.G else SyllableType.TYPE6
    if first is Side.H:
        return SyllableType.TYPE1 if last is Side.G else SyllableType.TYPE2
    if last is Side.G:
        return SyllableType.TYPE3
    return SyllableType.TYPE7 if n == 2 else SyllableType.TYPE4


def iter_words(context: FreeProduct, max_length: int, min_length: int = 0):
    """All reduced words with ``min_length <= len <= max_length``, by length
    and then lexicographically."""
    choices = (
        [i << 1 for i in range(1, context.h.order)],
        [i << 1 | 1 for i in range(1, context.g.order)],
    )

    def extend(prefix, n):
        if len(prefix) == n:
            yield prefix
            return
        if prefix:
            sides = (1 - (prefix[-1] & 1),)
        else:
            sides = (0, 1)
        for side in sides:
            for c in choices[side]:
                yield from extend(prefix + (c,), n)

    for n in range(min_length, max_length + 1):
        for codes in extend((), n):
            yield ReducedWord(context, codes)
