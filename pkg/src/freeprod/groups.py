"""Finite groups given by multiplication tables.

A group document is a mapping with keys ``name`` (str), ``order`` (int) and
``table`` (list of ``order`` rows of ``order`` ints).  Row ``i``, column ``j``
holds the index of ``i * j``; the identity must be index 0.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from pathlib import Path

from .errors import FreeProdError


class NonGroup(FreeProdError):
    """The table violates a group axiom.  ``witness`` names the offending
    indices."""

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"not a group: {axiom} fails at {witness}")


class MalformedDocument(FreeProdError):
    pass


class IdentityInput(FreeProdError):
    pass


class Side(IntEnum):
    H = 0
    G = 1

    @property
    def letter(self):
        return "hg"[self]


@dataclass(frozen=True)
class GroupTable:
    name: str
    order: int
    table: tuple[tuple[int, ...], ...] = field(repr=False)

    @cached_property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.table for x in row)

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for i, row in enumerate(self.table):
            inv[i] = row.index(0)
        return tuple(inv)

    def mul(self, i, j):
        return self.table[i][j]

    def inv(self, i):
        return self.inverses[i]

    def power(self, i, m):
        if m < 0:
            i, m = self.inverses[i], -m
        acc = 0
        for _ in range(m):
            acc = self.table[acc][i]
        return acc

    def is_trivial(self):
        return self.order == 1


def load_group(document) -> GroupTable:
    """Build a :class:`GroupTable` from a document, checking every axiom."""
    if not isinstance(document, dict):
        raise MalformedDocument("group document must be a mapping")
    try:
        order = document["order"]
        rows = document["table"]
    except KeyError as exc:
        raise MalformedDocument(f"missing field {exc.args[0]!r}") from None
    name = str(document.get("name", f"group{order}"))
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise MalformedDocument(f"order must be a positive integer, got {order!r}")
    if not isinstance(rows, (list, tuple)) or len(rows) != order:
        raise MalformedDocument(f"table must have {order} rows")
    table = []
    for i, row in enumerate(rows):
        if not isinstance(row, (list, tuple)) or len(row) != order:
            raise MalformedDocument(f"row {i} must have {order} entries")
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise MalformedDocument(f"row {i} holds a non-integer entry {x!r}")
        table.append(tuple(row))
    _check_axioms(table, order)
    return GroupTable(name, order, tuple(table))


def _check_axioms(t, n):
    for i in range(n):
        for j in range(n):
            if not 0 <= t[i][j] < n:
                raise NonGroup("closure", (i, j))
    for i in range(n):
        if t[0][i] != i:
            raise NonGroup("identity", (0, i))
        if t[i][0] != i:
            raise NonGroup("identity", (i, 0))
    for i in range(n):
        if not any(t[i][j] == 0 and t[j][i] == 0 for j in range(n)):
            raise NonGroup("inverse", (i,))
    for i in range(n):
        ti = t[i]
        for j in range(n):
            tij = t[ti[j]]
            tj = t[j]
            for k in range(n):
                if tij[k] != ti[tj[k]]:
                    raise NonGroup("associativity", (i, j, k))


def load_group_file(path) -> GroupTable:
    try:
        document = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"{path}: {exc}") from None
    return load_group(document)


def group_document(t: GroupTable) -> dict:
    return {"name": t.name, "order": t.order, "table": [list(r) for r in t.table]}


def cyclic(n) -> GroupTable:
    return GroupTable(
        f"cyclic{n}", n, tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    )


def klein_four() -> GroupTable:
    return GroupTable("klein4", 4, tuple(tuple(i ^ j for j in range(4)) for i in range(4)))


def sym3() -> GroupTable:
    # permutations of (0, 1, 2) in lexicographic order; index 0 is the identity
    from itertools import permutations

    perms = list(permutations(range(3)))
    pos = {p: i for i, p in enumerate(perms)}
    compose = lambda p, q: tuple(p[q[x]] for x in range(3))  # noqa: E731
    return GroupTable(
        "sym3", 6, tuple(tuple(pos[compose(p, q)] for q in perms) for p in perms)
    )


MAX_PRESET_CYCLIC = 12


def preset(name) -> GroupTable:
    key = name.lower().replace("-", "").replace("_", "")
    if key in ("trivial", "e"):
        return cyclic(1)
    if key in ("klein4", "kleinfour", "v4"):
        return klein_four()
    if key in ("sym3", "s3"):
        return sym3()
    if key.startswith("cyclic") and key[6:].isdigit():
        n = int(key[6:])
        if 1 <= n <= MAX_PRESET_CYCLIC:
            return cyclic(n)
    raise KeyError(name)


def element_order(t: GroupTable, i: int) -> int:
    m, acc = 1, i
    while acc != 0:
        acc = t.table[acc][i]
        m += 1
    return m


def finite_conjugacy_classes(t: GroupTable) -> list[list[int]]:
    """Conjugacy classes as sorted index lists, ordered by least member."""
    seen = [False] * t.order
    classes = []
    inv = t.inverses
    for x in range(t.order):
        if seen[x]:
            continue
        cls = sorted({t.table[t.table[y][x]][inv[y]] for y in range(t.order)})
        for z in cls:
            seen[z] = True
        classes.append(cls)
    return classes


def class_index(t: GroupTable, i: int) -> int:
    for pos, cls in enumerate(finite_conjugacy_classes(t)):
        if i in cls:
            return pos
    raise IndexError(i)


def finite_centralizer(t: GroupTable, i: int) -> frozenset[int]:
    return frozenset(y for y in range(t.order) if t.table[y][i] == t.table[i][y])


def finite_max_root(t: GroupTable, i: int) -> tuple[int, int]:
    """Largest ``k <= |t|`` with ``y**k == i`` for some ``y``, and that ``y``.

    Exponents are capped at the group order because in a finite group any
    solvable exponent recurs periodically.  Among roots for the maximal ``k``
    the least index is returned.
    """
    if i == 0:
        raise IdentityInput("the identity has roots of every exponent")
    best = (i, 1)
    for y in range(1, t.order):
        acc = 0
        for k in range(1, t.order + 1):
            acc = t.table[acc][y]
            if acc == i and k > best[1]:
                best = (y, k)
    return best
