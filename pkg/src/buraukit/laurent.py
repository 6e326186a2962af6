"""Integer Laurent polynomials, the ring Z[t, t^-1].

A polynomial is stored densely: ``coeffs[i]`` is the coefficient of
``t**(min_exp + i)``. Construction always trims zero coefficients from
both ends, so two equal polynomials have identical fields and structural
equality is ring equality. The zero polynomial is ``coeffs == ()`` with
``min_exp == 0``.

Instances are immutable and hashable.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import _core
from .errors import NotDivisible, ZeroBase

__all__ = [
    "LaurentPoly", "poly_from_terms", "add", "neg", "mul", "power",
    "div_exact", "eval_complex", "ZERO", "ONE", "T", "T_INV",
]


class LaurentPoly:
    __slots__ = ("min_exp", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        c = [int(x) for x in coeffs]
        lo, hi = 0, len(c)
        while lo < hi and c[lo] == 0:
            lo += 1
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "coeffs", ())
            object.__setattr__(self, "min_exp", 0)
        else:
            object.__setattr__(self, "coeffs", tuple(c[lo:hi]))
            object.__setattr__(self, "min_exp", int(min_exp) + lo)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls((coeff,), exp)

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls((c,), 0)

    @property
    def max_exp(self) -> int:
        """Highest exponent present; equals ``min_exp - 1`` for zero."""
        return self.min_exp + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,) and self.min_exp == 0

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs in ascending order."""
        return [(self.min_exp + i, c) for i, c in enumerate(self.coeffs) if c]

    def coeff(self, exp: int) -> int:
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.min_exp + k)

    def substitute_inverse(self) -> LaurentPoly:
        """The image under ``t -> t**-1``."""
        return LaurentPoly(self.coeffs[::-1], -self.max_exp)

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, neg(other))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, neg(self))

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            # only monomials are units
            if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
                return power(self.substitute_inverse(), -k)
            raise NotDivisible(f"{self} is not a unit of Z[t, t^-1]")
        return power(self, k)

    def __floordiv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return div_exact(self, other)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    def __call__(self, z: complex) -> complex:
        return eval_complex(self, z)

    # -- rendering ------------------------------------------------------

    def to_text(self, descending: bool = False, var: str = "t") -> str:
        """Render as e.g. ``t^-1 + 3*t^2`` (ascending unless ``descending``)."""
        terms = self.terms()
        if not terms:
            return "0"
        if descending:
            terms.reverse()
        out = []
        for idx, (e, c) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def to_latex(self, descending: bool = False) -> str:
        text = self.to_text(descending)
        out = []
        i = 0
        while i < len(text):
            if text[i] == "^":
                j = i + 1
                if j < len(text) and text[j] == "-":
                    j += 1
                while j < len(text) and text[j].isdigit():
                    j += 1
                out.append("^{" + text[i + 1:j] + "}")
                i = j
            elif text[i] == "*":
                i += 1
            else:
                out.append(text[i])
                i += 1
        return "".join(out)

    def to_json(self) -> dict:
        return {"terms": [{"exp": e, "coeff": c} for e, c in self.terms()]}

    @classmethod
    def from_json(cls, obj: dict) -> LaurentPoly:
        return poly_from_terms((t["exp"], t["coeff"]) for t in obj["terms"])

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


def poly_from_terms(terms: Iterable[tuple[int, int]]) -> LaurentPoly:
    """Sum of monomials ``coeff * t**exp``; repeated exponents are added."""
    acc: dict[int, int] = {}
    for e, c in terms:
        acc[e] = acc.get(e, 0) + c
    acc = {e: c for e, c in acc.items() if c}
    if not acc:
        return ZERO
    lo = min(acc)
    dense = [0] * (max(acc) - lo + 1)
    for e, c in acc.items():
        dense[e - lo] = c
    return LaurentPoly(dense, lo)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if not p.coeffs:
        return q
    if not q.coeffs:
        return p
    lo = min(p.min_exp, q.min_exp)
    hi = max(p.max_exp, q.max_exp)
    out = [0] * (hi - lo + 1)
    for i, c in enumerate(p.coeffs, p.min_exp - lo):
        out[i] = c
    for i, c in enumerate(q.coeffs, q.min_exp - lo):
        out[i] += c
    return LaurentPoly(out, lo)


def neg(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly([-c for c in p.coeffs], p.min_exp)


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if not p.coeffs or not q.coeffs:
        return ZERO
    return LaurentPoly(_core.convolve(p.coeffs, q.coeffs), p.min_exp + q.min_exp)


def power(p: LaurentPoly, k: int) -> LaurentPoly:
    """``p**k`` by repeated squaring; ``power(ZERO, 0)`` is ONE by convention."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = ONE
    base = p
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def div_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``r`` with ``r * q == p``, or raise NotDivisible.

    Both operands are shifted to ordinary polynomials with nonzero
    constant term and divided by integer long division; every quotient
    coefficient must be an integer and the remainder must vanish.
    """
    if not q.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p.coeffs:
        return ZERO
    num = list(p.coeffs)
    den = q.coeffs
    dq = len(den) - 1
    if len(num) - 1 < dq:
        raise NotDivisible(f"{p} is not divisible by {q}")
    lead = den[-1]
    quot = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c == 0:
            continue
        qc, rem = divmod(c, lead)
        if rem:
            raise NotDivisible(f"{p} is not divisible by {q}")
        quot[i - dq] = qc
        base = i - dq
        for j, dj in enumerate(den):
            num[base + j] -= qc * dj
    if any(num[:dq]):
        raise NotDivisible(f"{p} is not divisible by {q}")
    return LaurentPoly(quot, p.min_exp - q.min_exp)


def eval_complex(p: LaurentPoly, z: complex) -> complex:
    """Numeric value at ``z`` by Horner's rule on the ordinary part."""
    if not p.coeffs:
        return 0j
    if z == 0:
        if p.min_exp < 0:
            raise ZeroBase(f"{p} has negative exponents and cannot be evaluated at 0")
        return complex(p.coeff(0))
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc * (complex(z) ** p.min_exp)


def poly_product(factors: Sequence[LaurentPoly]) -> LaurentPoly:
    out = ONE
    for f in factors:
        out = mul(out, f)
    return out


ZERO = LaurentPoly()
ONE = LaurentPoly((1,))
T = LaurentPoly((1,), 1)
T_INV = LaurentPoly((1,), -1)
