"""Pure-Python versions of the hot loops.

Letters are packed as ``index << 1 | side`` (side 0 = H, 1 = G).  Group
tables are flat row-major sequences, so ``table[i * n + j]`` is ``i * j``.
"""


def reduce_codes(codes, htab, hn, gtab, gn):
    stack = []
    for code in codes:
        idx = code >> 1
        if idx == 0:
            continue
        side = code & 1
        if stack and (stack[-1] & 1) == side:
            top = stack.pop() >> 1
            if side:
                prod = gtab[top * gn + idx]
            else:
                prod = htab[top * hn + idx]
            if prod:
                stack.append(prod << 1 | side)
        else:
            stack.append(code)
    return stack


def failure_function(seq):
    """Border array: ``fail[i]`` is the length of the longest proper border
    of ``seq[:i + 1]``."""
    n = len(seq)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and seq[i] != seq[k]:
            k = fail[k - 1]
        if seq[i] == seq[k]:
            k += 1
        fail[i] = k
    return fail


def minimal_period(seq):
    """Smallest p dividing len(seq) such that seq is len(seq)/p copies of
    its length-p prefix.  Returns 0 for the empty sequence."""
    n = len(seq)
    if n == 0:
        return 0
    p = n - failure_function(seq)[-1]
    return p if n % p == 0 else n


def least_rotation(seq):
    """Start index of the lexicographically least rotation (Booth)."""
    n = len(seq)
    if n == 0:
        return 0
    s = list(seq) * 2
    f = [-1] * (2 * n)
    k = 0
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
