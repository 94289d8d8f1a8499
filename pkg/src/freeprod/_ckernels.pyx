# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the loops in ``_pykernels``; same contracts."""


def reduce_codes(codes, htab, hn, gtab, gn):
    cdef Py_ssize_t n = len(codes), top = 0, i
    cdef long code, idx, side, prod, prev
    cdef long h_n = hn, g_n = gn
    cdef long[::1] ht = _as_longs(htab)
    cdef long[::1] gt = _as_longs(gtab)
    cdef long[::1] stack = _zeros(n)
    for i in range(n):
        code = codes[i]
        idx = code >> 1
        if idx == 0:
            continue
        side = code & 1
        if top and (stack[top - 1] & 1) == side:
            prev = stack[top - 1] >> 1
            top -= 1
            if side:
                prod = gt[prev * g_n + idx]
            else:
                prod = ht[prev * h_n + idx]
            if prod:
                stack[top] = prod << 1 | side
                top += 1
        else:
            stack[top] = code
            top += 1
    return [stack[i] for i in range(top)]


def failure_function(seq):
    cdef Py_ssize_t n = len(seq), i, k = 0
    cdef long[::1] s = _as_longs(seq)
    cdef long[::1] fail = _zeros(n)
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = fail[k - 1]
        if s[i] == s[k]:
            k += 1
        fail[i] = k
    return [fail[i] for i in range(n)]


def minimal_period(seq):
    cdef Py_ssize_t n = len(seq), p
    if n == 0:
        return 0
    p = n - failure_function(seq)[n - 1]
    return p if n % p == 0 else n


def least_rotation(seq):
    cdef Py_ssize_t n = len(seq), j, k = 0, i
    cdef long sj
    if n == 0:
        return 0
    cdef long[::1] s = _as_longs(list(seq) * 2)
    cdef long[::1] f = _zeros(2 * n)
    for j in range(2 * n):
        f[j] = -1
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


cdef long[::1] _as_longs(seq):
    import array
    return array.array("l", seq)


cdef long[::1] _zeros(Py_ssize_t n):
    import array
    return array.array("l", bytes(n * sizeof(long)) if n else b"")
