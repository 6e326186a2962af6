"""Cyclotomic polynomials and the quotient rings Z[x]/Phi_tau(x).

Reducing modulo Phi_tau is exact evaluation at a primitive tau-th root
of unity: two Laurent polynomials agree at ``exp(2*pi*i/tau)`` iff
their reductions are equal. This is what lets identity tests on
evaluated Burau matrices be exact.
"""

from __future__ import annotations

import cmath
import threading
from dataclasses import dataclass
from typing import Sequence

from . import _core
from .errors import TauMismatch
from .laurent import ONE, LaurentPoly, div_exact, mul

__all__ = [
    "cyclotomic_poly", "euler_phi", "divisors", "CyclotomicInt",
    "reduce_mod_cyclotomic", "eval_at_root", "cyc_add", "cyc_neg",
    "cyc_mul", "cyc_is_one", "cyc_is_zero", "embed_complex", "root_of_unity",
]

_memo: dict[int, LaurentPoly] = {}
_memo_lock = threading.Lock()


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def cyclotomic_poly(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial, via Phi_n = (t^n - 1) / prod_{d|n, d<n} Phi_d."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    cached = _memo.get(n)
    if cached is not None:
        return cached
    denom = ONE
    for d in divisors(n)[:-1]:
        denom = mul(denom, cyclotomic_poly(d))
    numer = LaurentPoly([-1] + [0] * (n - 1) + [1])
    phi = div_exact(numer, denom)
    with _memo_lock:
        # first writer wins so every reader sees one object per key
        return _memo.setdefault(n, phi)


def _modulus(tau: int) -> tuple[int, ...]:
    return cyclotomic_poly(tau).coeffs


@dataclass(frozen=True)
class CyclotomicInt:
    """Element of Z[x]/Phi_tau(x), stored as the reduced representative.

    ``coeffs`` always has exactly ``euler_phi(tau)`` entries.
    """

    tau: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != euler_phi(self.tau):
            raise ValueError(
                f"need {euler_phi(self.tau)} coefficients for tau={self.tau}, "
                f"got {len(self.coeffs)}")

    @classmethod
    def from_int(cls, c: int, tau: int) -> CyclotomicInt:
        out = [0] * euler_phi(tau)
        out[0] = c
        return cls(tau, tuple(out))

    @classmethod
    def zero(cls, tau: int) -> CyclotomicInt:
        return cls.from_int(0, tau)

    @classmethod
    def one(cls, tau: int) -> CyclotomicInt:
        return cls.from_int(1, tau)

    @classmethod
    def x(cls, tau: int) -> CyclotomicInt:
        return eval_at_root(LaurentPoly((1,), 1), tau)

    def __add__(self, other):
        return cyc_add(self, other)

    def __neg__(self):
        return cyc_neg(self)

    def __sub__(self, other):
        return cyc_add(self, cyc_neg(other))

    def __mul__(self, other):
        return cyc_mul(self, other)

    def __pow__(self, k: int):
        result = CyclotomicInt.one(self.tau)
        base = self
        while k > 0:
            if k & 1:
                result = cyc_mul(result, base)
            k >>= 1
            if k:
                base = cyc_mul(base, base)
        return result

    def is_zero(self) -> bool:
        return cyc_is_zero(self)

    def is_one(self) -> bool:
        return cyc_is_one(self)

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly(self.coeffs)

    def to_text(self) -> str:
        return self.to_poly().to_text(var="x")

    def to_json(self) -> dict:
        return {"tau": self.tau, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> CyclotomicInt:
        return cls(int(obj["tau"]), tuple(int(c) for c in obj["coeffs"]))

    def __str__(self):
        return self.to_text()


def reduce_mod_cyclotomic(p: LaurentPoly | Sequence[int], tau: int) -> CyclotomicInt:
    """Canonical remainder of an ordinary polynomial modulo Phi_tau.

    ``p`` may be a LaurentPoly with ``min_exp >= 0`` or a dense ascending
    coefficient sequence.
    """
    if isinstance(p, LaurentPoly):
        if p.min_exp < 0:
            raise ValueError("reduce_mod_cyclotomic needs min_exp >= 0; use eval_at_root")
        dense = [0] * p.min_exp + list(p.coeffs)
    else:
        dense = list(p)
    return CyclotomicInt(tau, tuple(_core.reduce_monic(dense, _modulus(tau))))


def eval_at_root(p: LaurentPoly, tau: int) -> CyclotomicInt:
    """Image of ``p`` under ``t -> x`` in Z[x]/Phi_tau.

    Exponents are first folded modulo tau (``x**tau == 1`` in the quotient,
    so ``t**-1`` lands on ``x**(tau-1)``), then the folded polynomial is
    reduced modulo Phi_tau.
    """
    if tau < 1:
        raise ValueError(f"tau must be >= 1, got {tau}")
    folded = [0] * tau
    for i, c in enumerate(p.coeffs):
        if c:
            folded[(p.min_exp + i) % tau] += c
    return CyclotomicInt(tau, tuple(_core.reduce_monic(folded, _modulus(tau))))


def _check(a: CyclotomicInt, b: CyclotomicInt) -> None:
    if a.tau != b.tau:
        raise TauMismatch(f"tau {a.tau} vs {b.tau}")


def cyc_add(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    _check(a, b)
    return CyclotomicInt(a.tau, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def cyc_neg(a: CyclotomicInt) -> CyclotomicInt:
    return CyclotomicInt(a.tau, tuple(-x for x in a.coeffs))


def cyc_mul(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    _check(a, b)
    return CyclotomicInt(a.tau, tuple(_core.mulmod(a.coeffs, b.coeffs, _modulus(a.tau))))


def cyc_is_zero(a: CyclotomicInt) -> bool:
    return not any(a.coeffs)


def cyc_is_one(a: CyclotomicInt) -> bool:
    return a.coeffs[0] == 1 and not any(a.coeffs[1:])


def root_of_unity(tau: int) -> complex:
    return cmath.exp(2j * cmath.pi / tau)


def embed_complex(a: CyclotomicInt) -> complex:
    """Value of the representative at ``exp(2*pi*i/tau)``."""
    z = root_of_unity(a.tau)
    acc = 0j
    for c in reversed(a.coeffs):
        acc = acc * z + c
    return acc
