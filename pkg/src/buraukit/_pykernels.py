"""Pure-Python versions of the integer coefficient kernels.

Every function here has a twin of the same name and signature in the
compiled ``_ckernels`` extension. Coefficient sequences are dense and
ascending (index i holds the coefficient of x**i).
"""


def convolve(a, b):
    """Coefficients of the product of two dense polynomials."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def reduce_monic(p, m):
    """Remainder of ``p`` modulo the monic polynomial ``m``, length ``deg m``."""
    d = len(m) - 1
    r = list(p)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            base = i - d
            for j in range(d):
                r[base + j] -= c * m[j]
    if len(r) < d:
        r.extend([0] * (d - len(r)))
    return r[:d]


def mulmod(a, b, m):
    return reduce_monic(convolve(a, b), m)


def matmul_mod(A, B, n, m):
    """Product of two n x n matrices over Z[x]/(m).

    ``A`` and ``B`` are flat row-major lists of reduced coefficient
    sequences of length ``deg m``. Each output entry is accumulated
    unreduced and reduced once.
    """
    d = len(m) - 1
    width = max(2 * d - 1, 1)
    out = []
    for i in range(n):
        row = A[i * n:(i + 1) * n]
        for j in range(n):
            acc = [0] * width
            for k in range(n):
                a = row[k]
                b = B[k * n + j]
                for u in range(d):
                    au = a[u]
                    if au:
                        for v in range(d):
                            acc[u + v] += au * b[v]
            out.append(reduce_monic(acc, m))
    return out
