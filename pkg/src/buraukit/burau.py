"""The unreduced Burau representation rho: B_n -> GL_n(Z[t, t^-1]).

sigma_i maps to I_{i-1} (+) [[1-t, t], [1, 0]] (+) I_{n-i-1} and its
inverse to I_{i-1} (+) [[0, 1], [t^-1, 1-t^-1]] (+) I_{n-i-1}. A word's
image is the product of its letters' images in stored order.

``zeta`` is rho(sigma_1 sigma_2 sigma_1) in B_3. For even k its powers
have a closed form in terms of the polynomials ``a_poly(m)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _core
from .braid import BraidWord, exponent_sum
from .errors import IndexOutOfRange, OddExponent, SizeMismatch
from .laurent import ONE, T, T_INV, ZERO, LaurentPoly, add, div_exact, mul, neg
from .cyclotomic import cyclotomic_poly

__all__ = [
    "BurauMatrix", "generator_image", "represent", "mat_mul", "mat_pow",
    "mat_eq", "mat_identity", "a_poly", "a_numerator", "zeta",
    "zeta_power_closed_form", "block_embed", "determinant",
]


@dataclass(frozen=True)
class BurauMatrix:
    size: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.size or any(len(r) != self.size for r in self.entries):
            raise SizeMismatch(f"entries are not {self.size}x{self.size}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[LaurentPoly | int]]) -> BurauMatrix:
        conv = tuple(tuple(e if isinstance(e, LaurentPoly) else LaurentPoly.const(e)
                           for e in row) for row in rows)
        return cls(len(conv), conv)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: BurauMatrix) -> BurauMatrix:
        return mat_mul(self, other)

    def __pow__(self, k: int) -> BurauMatrix:
        return mat_pow(self, k)

    def is_identity(self) -> bool:
        return all(e.is_one() if i == j else e.is_zero()
                   for i, row in enumerate(self.entries) for j, e in enumerate(row))

    def to_json(self) -> dict:
        return {"size": self.size,
                "entries": [[e.to_json() for e in row] for row in self.entries]}

    @classmethod
    def from_json(cls, obj: dict) -> BurauMatrix:
        return cls.from_rows([[LaurentPoly.from_json(e) for e in row] for row in obj["entries"]])

    def to_latex(self) -> str:
        rows = [" & ".join(e.to_latex() for e in row) for row in self.entries]
        return "\\begin{bmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{bmatrix}"

    def to_text(self) -> str:
        cells = [[e.to_text() for e in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __str__(self):
        return self.to_text()


def mat_identity(n: int) -> BurauMatrix:
    return BurauMatrix(n, tuple(tuple(ONE if i == j else ZERO for j in range(n))
                                for i in range(n)))


def mat_eq(A: BurauMatrix, B: BurauMatrix) -> bool:
    return A.size == B.size and A.entries == B.entries


def _dot(row: Sequence[LaurentPoly], col: Sequence[LaurentPoly]) -> LaurentPoly:
    # accumulate all products into one dense buffer spanning the exponent range
    pairs = [(a, b) for a, b in zip(row, col) if a.coeffs and b.coeffs]
    if not pairs:
        return ZERO
    lo = min(a.min_exp + b.min_exp for a, b in pairs)
    hi = max(a.max_exp + b.max_exp for a, b in pairs)
    acc = [0] * (hi - lo + 1)
    for a, b in pairs:
        off = a.min_exp + b.min_exp - lo
        for i, c in enumerate(_core.convolve(a.coeffs, b.coeffs), off):
            acc[i] += c
    return LaurentPoly(acc, lo)


def mat_mul(A: BurauMatrix, B: BurauMatrix) -> BurauMatrix:
    if A.size != B.size:
        raise SizeMismatch(f"{A.size}x{A.size} times {B.size}x{B.size}")
    cols = list(zip(*B.entries))
    return BurauMatrix(A.size, tuple(tuple(_dot(row, col) for col in cols)
                                     for row in A.entries))


def mat_pow(A: BurauMatrix, k: int) -> BurauMatrix:
    """A**k by repeated squaring."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = mat_identity(A.size)
    base = A
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def generator_image(i: int, sign: int, n: int) -> BurauMatrix:
    """rho(sigma_i) for sign +1, rho(sigma_i^-1) for sign -1, in B_n."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator sigma_{i} does not exist in B_{n}")
    if sign == 1:
        block = ((ONE - T, T), (ONE, ZERO))
    elif sign == -1:
        block = ((ZERO, ONE), (T_INV, ONE - T_INV))
    else:
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    for r in range(2):
        for c in range(2):
            rows[i - 1 + r][i - 1 + c] = block[r][c]
    return BurauMatrix(n, tuple(tuple(r) for r in rows))


def _apply_generator(M: list[list[LaurentPoly]], i: int, sign: int) -> None:
    # right-multiply in place; only columns i-1 and i change
    a, b = i - 1, i
    for row in M:
        x, y = row[a], row[b]
        if sign == 1:
            xt = mul(x, T)
            row[a] = add(add(x, neg(xt)), y)
            row[b] = xt
        else:
            row[a] = mul(y, T_INV)
            row[b] = add(x, add(y, neg(mul(y, T_INV))))


def represent(w: BraidWord) -> BurauMatrix:
    """rho(w), the ordered product of the letters' generator images."""
    n = w.strands
    M = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    for i, s in w.letters:
        _apply_generator(M, i, s)
    return BurauMatrix(n, tuple(tuple(r) for r in M))


def zeta() -> BurauMatrix:
    """rho(sigma_1 sigma_2 sigma_1) in B_3."""
    global _ZETA
    if _ZETA is None:
        _ZETA = represent(BraidWord(3, ((1, 1), (2, 1), (1, 1))))
    return _ZETA


def a_numerator(m: int) -> LaurentPoly:
    """Numerator over Phi_3 of ``a_poly(m)``, chosen by ``m mod 3``."""
    if m < 0:
        raise ValueError(f"a_m is defined for m >= 0, got {m}")
    r = m % 3
    if r == 0:
        return LaurentPoly.monomial(0) + LaurentPoly.monomial(m + 1) + LaurentPoly.monomial(m + 2)
    if r == 1:
        return ONE - LaurentPoly.monomial(m + 2)
    return LaurentPoly.monomial(0) + LaurentPoly.monomial(m) + LaurentPoly.monomial(m + 2)


def a_poly(m: int) -> LaurentPoly:
    """The entry polynomial a_m, computed by exact division by Phi_3."""
    return div_exact(a_numerator(m), cyclotomic_poly(3))


def zeta_power_closed_form(k: int) -> BurauMatrix:
    """Closed form of zeta**k for even k >= 2, assembled from a_m's."""
    if k % 2:
        raise OddExponent(f"closed form is only available for even k, got {k}")
    if k < 2:
        raise ValueError(f"closed form needs k >= 2, got {k}")
    h = 3 * k // 2
    top, mid, low, off = a_poly(h), a_poly(h - 1), a_poly(h - 3), a_poly(h - 2)
    t1, t2 = T, mul(T, T)
    o1, o2 = mul(t1, off), mul(t2, off)
    return BurauMatrix.from_rows([
        [top, o1, o2],
        [off, mul(t1, mid), o2],
        [off, o1, mul(t2, low)],
    ])


def block_embed(M: BurauMatrix, i: int, n: int) -> BurauMatrix:
    """I_{i-1} (+) M (+) I_{n-i-2} for a 3x3 block M."""
    if M.size != 3:
        raise SizeMismatch(f"block must be 3x3, got {M.size}x{M.size}")
    if not 1 <= i <= n - 2:
        raise IndexOutOfRange(f"3x3 block at position {i} does not fit in size {n}")
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    for r in range(3):
        for c in range(3):
            rows[i - 1 + r][i - 1 + c] = M.entries[r][c]
    return BurauMatrix(n, tuple(tuple(r) for r in rows))


def determinant(M: BurauMatrix) -> LaurentPoly:
    """Determinant by fraction-free (Bareiss) elimination over Z[t, t^-1]."""
    n = M.size
    if n == 0:
        return ONE
    A = [list(r) for r in M.entries]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not A[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mul(A[i][j], A[k][k]) - mul(A[i][k], A[k][j])
                A[i][j] = div_exact(num, prev)
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return det if sign == 1 else neg(det)


def expected_determinant(w: BraidWord) -> LaurentPoly:
    """(-t)**exponent_sum(w), the determinant every word image must have."""
    return LaurentPoly.monomial(exponent_sum(w), (-1) ** (exponent_sum(w) % 2))


_ZETA: BurauMatrix | None = None
