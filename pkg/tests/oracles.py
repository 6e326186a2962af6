"""Reference implementations that share no code with buraukit.

Polynomials here are plain ``{exponent: coefficient}`` dicts.
"""

import cmath
from fractions import Fraction

import numpy as np


def dpoly(terms):
    out = {}
    for e, c in terms:
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def dmul(p, q):
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return {e: c for e, c in out.items() if c}


def dadd(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def long_divide(num, den):
    """Quotient and remainder over Q of ordinary polynomials (dicts, exps >= 0)."""
    r = {e: Fraction(c) for e, c in num.items()}
    dd = max(den)
    lead = Fraction(den[dd])
    q = {}
    while r and max(r) >= dd:
        top = max(r)
        c = r[top] / lead
        q[top - dd] = c
        for e, v in den.items():
            r[e + top - dd] = r.get(e + top - dd, 0) - c * v
        r = {e: v for e, v in r.items() if v}
    return q, r


def mobius(n):
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def cyclotomic_mobius(n):
    """Phi_n = prod_{d|n} (t^d - 1)^mu(n/d), carried out with Q long division."""
    num, den = {0: 1}, {0: 1}
    for d in range(1, n + 1):
        if n % d == 0:
            mu = mobius(n // d)
            f = {d: 1, 0: -1}
            if mu == 1:
                num = dmul(num, f)
            elif mu == -1:
                den = dmul(den, f)
    q, r = long_divide(num, den)
    assert not r
    return {e: int(c) for e, c in q.items() if c}


def numeric_matrix(rows, z):
    """Evaluate a matrix of dict polynomials at the complex number z."""
    return np.array([[sum(c * z ** e for e, c in cell.items()) for cell in row]
                     for row in rows], dtype=complex)


ZETA_ROWS = [
    [{0: 1, 1: -1}, {1: 1, 2: -1}, {2: 1}],
    [{0: 1, 1: -1}, {1: 1}, {}],
    [{0: 1}, {}, {}],
]


def numeric_order(M, cap, tol=1e-8):
    P = np.eye(len(M), dtype=complex)
    for k in range(1, cap + 1):
        P = P @ M
        if np.max(np.abs(P - np.eye(len(M)))) < tol:
            return k
    return None


def root(tau):
    return cmath.exp(2j * cmath.pi / tau)
