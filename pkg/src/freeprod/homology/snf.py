"""Smith normal form over the integers with unimodular transforms."""
from __future__ import annotations


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _shape(a):
    if hasattr(a, "shape"):
        return tuple(a.shape)
    rows = len(a)
    return rows, (len(a[0]) if rows else 0)


def as_rows(a):
    if hasattr(a, "tolist"):
        a = a.tolist()
    return [[int(x) for x in row] for row in a]


def smith_normal_form(a, shape=None):
    """Return ``(factors, left, right)`` with ``left @ a @ right`` diagonal.

    ``factors`` are the nonzero diagonal entries ``d1 | d2 | ...`` (all
    positive).  ``left`` and ``right`` are integer matrices of determinant
    +-1.  Pivots are always the smallest nonzero entry of the remaining block,
    which keeps intermediate entries small.
    """
    m, n = shape if shape is not None else _shape(a)
    d = as_rows(a) if m and n else [[0] * n for _ in range(m)]
    left = _identity(m)
    right = _identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(src, dst, q):
        for row in d:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        entries = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // p))
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // p))
                    if d[t][j]:
                        dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # a remainder smaller than the pivot appeared; move it to the pivot
            _, i, j = min(
                (abs(d[i][j]), i, j)
                for i, j in [(i, t) for i in range(t, m)] + [(t, j) for j in range(t + 1, n)]
                if d[i][j]
            )
            swap_rows(t, i)
            swap_cols(t, j)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            left[t] = [-x for x in left[t]]
        t += 1
    factors = tuple(d[i][i] for i in range(min(m, n)) if d[i][i])
    return factors, left, right


def matmul(a, b):
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def determinant(a):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in a]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]
