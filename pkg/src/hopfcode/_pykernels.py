"""Pure-Python GF(p) kernels; the reference the compiled core must agree with."""

from __future__ import annotations


def rref_mod_p(rows, ncols, p):
    """Reduced row-echelon form over GF(p).

    Returns ``(basis, pivots)`` with zero rows dropped and every pivot
    normalized to 1.
    """
    m = [[v % p for v in r] for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        inv = pow(row[c], p - 2, p)
        if inv != 1:
            for k in range(c, ncols):
                row[k] = row[k] * inv % p
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    other = m[i]
                    for k in range(c, ncols):
                        if row[k]:
                            other[k] = (other[k] - f * row[k]) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def matmul_mod_p(a, b, p):
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * ncols
        for k in range(inner):
            f = row[k]
            if f:
                brow = b[k]
                for j in range(ncols):
                    acc[j] += f * brow[j]
        out.append([v % p for v in acc])
    return out
