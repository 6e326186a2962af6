"""Burau matrices at primitive roots of unity, their orders, and kernel witnesses.

A witness is the word (sigma_i sigma_{i+1} sigma_i)^k with k the
predicted order of zeta at tau. Its exponent sum 3k is nonzero, so the
word is a nontrivial braid, and its evaluated image is checked to be
exactly the identity.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import _core
from .braid import BraidWord, exponent_sum, kernel_word
from .burau import BurauMatrix, represent, zeta
from .cyclotomic import CyclotomicInt, cyclotomic_poly, eval_at_root
from .errors import SizeMismatch, TauMismatch, TauTooSmall

__all__ = [
    "EvaluatedMatrix", "NotFound", "KernelWitness", "evaluate", "order_of",
    "predicted_min_k", "make_witness", "verify_corollary_root",
    "probe_small_tau", "default_cap",
]


@dataclass(frozen=True)
class NotFound:
    """No power up to ``cap`` gave the identity."""

    cap: int

    def __str__(self):
        return f"not found (cap {self.cap})"


@dataclass(frozen=True)
class EvaluatedMatrix:
    size: int
    tau: int
    entries: tuple[tuple[CyclotomicInt, ...], ...]

    def __post_init__(self):
        for row in self.entries:
            for e in row:
                if e.tau != self.tau:
                    raise TauMismatch(f"entry has tau {e.tau}, matrix has tau {self.tau}")

    @classmethod
    def identity(cls, n: int, tau: int) -> EvaluatedMatrix:
        one, zero = CyclotomicInt.one(tau), CyclotomicInt.zero(tau)
        return cls(n, tau, tuple(tuple(one if i == j else zero for j in range(n))
                                 for i in range(n)))

    def is_identity(self) -> bool:
        return all(e.is_one() if i == j else e.is_zero()
                   for i, row in enumerate(self.entries) for j, e in enumerate(row))

    def _flat(self) -> list[tuple[int, ...]]:
        return [e.coeffs for row in self.entries for e in row]

    @classmethod
    def _from_flat(cls, n: int, tau: int, flat: Sequence[Sequence[int]]) -> EvaluatedMatrix:
        return cls(n, tau, tuple(tuple(CyclotomicInt(tau, tuple(flat[i * n + j]))
                                       for j in range(n)) for i in range(n)))

    def __matmul__(self, other: EvaluatedMatrix) -> EvaluatedMatrix:
        if self.size != other.size:
            raise SizeMismatch(f"{self.size}x{self.size} times {other.size}x{other.size}")
        if self.tau != other.tau:
            raise TauMismatch(f"tau {self.tau} vs {other.tau}")
        flat = _core.matmul_mod(self._flat(), other._flat(), self.size,
                                cyclotomic_poly(self.tau).coeffs)
        return EvaluatedMatrix._from_flat(self.size, self.tau, flat)

    def to_json(self) -> dict:
        return {"size": self.size, "tau": self.tau,
                "entries": [[e.to_json() for e in row] for row in self.entries]}

    def to_text(self) -> str:
        cells = [[e.to_text() for e in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


@dataclass(frozen=True)
class KernelWitness:
    word: BraidWord
    tau: int
    power_k: int
    exponent_sum: int
    verified_identity: bool

    def to_json(self) -> dict:
        return {
            "strands": self.word.strands,
            "tau": self.tau,
            "word": self.word.as_ints(),
            "power_k": self.power_k,
            "exponent_sum": self.exponent_sum,
            "verified_identity": self.verified_identity,
        }


def evaluate(M: BurauMatrix, tau: int) -> EvaluatedMatrix:
    """Entrywise image in Z[x]/Phi_tau, i.e. M at t = exp(2*pi*i/tau)."""
    if tau < 1:
        raise ValueError(f"tau must be >= 1, got {tau}")
    return EvaluatedMatrix(M.size, tau, tuple(tuple(eval_at_root(e, tau) for e in row)
                                              for row in M.entries))


def default_cap(tau: int) -> int:
    return 4 * tau


def order_of(M: EvaluatedMatrix, cap: int) -> int | NotFound:
    """Least k in [1, cap] with M**k == I, checking every k (odd and even)."""
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    P = M
    for k in range(1, cap + 1):
        if P.is_identity():
            return k
        if k < cap:
            P = P @ M
    return NotFound(cap)


def predicted_min_k(tau: int) -> int:
    """Predicted order of zeta at a primitive tau-th root: 2*tau/3 if 3 | tau, else 2*tau."""
    if tau <= 3:
        raise TauTooSmall(f"prediction requires tau > 3, got {tau}")
    return 2 * tau // 3 if tau % 3 == 0 else 2 * tau


def make_witness(strands: int, i: int, tau: int) -> KernelWitness:
    k = predicted_min_k(tau)
    word = kernel_word(i, k, strands)
    image = evaluate(represent(word), tau)
    return KernelWitness(word=word, tau=tau, power_k=k, exponent_sum=exponent_sum(word),
                         verified_identity=image.is_identity())


@dataclass
class RootReportRow:
    tau: int
    predicted_k: int
    found_k: int | None
    passed: bool = field(default=False)

    def to_json(self) -> dict:
        return {"tau": self.tau, "predicted_k": self.predicted_k,
                "found_k": self.found_k, "pass": self.passed}


def _check_tau(tau: int, cap_factor: int) -> RootReportRow:
    predicted = predicted_min_k(tau)
    found = order_of(evaluate(zeta(), tau), cap_factor * tau)
    found_k = found if isinstance(found, int) else None
    return RootReportRow(tau, predicted, found_k, found_k == predicted)


def verify_corollary_root(tau_max: int, cap_factor: int = 4,
                          workers: int = 1) -> list[RootReportRow]:
    """Compare the scanned order of zeta with the prediction for tau in [4, tau_max].

    Mismatches are reported in the rows, never raised. With ``workers > 1``
    the per-tau scans run in separate processes; rows stay sorted by tau.
    """
    if tau_max < 4:
        raise ValueError(f"tau_max must be >= 4, got {tau_max}")
    taus = range(4, tau_max + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_check_tau, taus, [cap_factor] * len(taus)))
    else:
        rows = [_check_tau(tau, cap_factor) for tau in taus]
    return sorted(rows, key=lambda r: r.tau)


def probe_small_tau(tau: int, cap: int) -> int | NotFound:
    """Order of zeta at tau in {1, 2, 3}, found by scanning; no formula is implied."""
    if tau not in (1, 2, 3):
        raise ValueError(f"probe_small_tau covers tau in {{1, 2, 3}}, got {tau}")
    return order_of(evaluate(zeta(), tau), cap)
