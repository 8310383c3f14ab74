"""Unipotent character degrees and their l-adic behaviour.

``P_lambda(X) = X^d (X^n - 1)...(X - 1) / prod_h (X^h - 1)`` evaluated with
exact integers.  ``GL_n(q^2)`` has degree ``P(q^2)`` and ``U_n(q)`` has
degree ``|P(-q)|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NonIntegralDivision, ValuationMismatch, ZeroInput
from .numtheory import prime_power, require_odd_prime, require_unitary
from .partitions import Partition, d_statistic, hook_multiset


@dataclass(frozen=True)
class SignedDegree:
    magnitude: int
    sign: int

    @property
    def value(self) -> int:
        return self.sign * self.magnitude


@dataclass(frozen=True)
class LAdicValue:
    """``value = sign * l^valuation * u`` with ``l`` not dividing ``u``."""

    value: int
    l: int
    valuation: int
    unit_residue: int  # |u| mod l

    @property
    def sign(self) -> int:
        return 1 if self.value > 0 else -1

    @property
    def lpart(self) -> int:
        return self.l ** self.valuation


@lru_cache(maxsize=4096)
def _factorial_product(n: int, x: int) -> int:
    """``prod_{i=1}^n (x^i - 1)``, shared across every partition of ``n``."""
    out = 1
    for i in range(1, n + 1):
        out *= x ** i - 1
    return out


def eval_P(lam: Partition, x: int) -> SignedDegree:
    if abs(x) < 2:
        raise ValueError("need |x| >= 2")
    num = x ** d_statistic(lam) * _factorial_product(lam.size, x)
    den = 1
    for h in hook_multiset(lam):
        den *= x ** h - 1
    val, rem = divmod(num, den)
    if rem:
        raise NonIntegralDivision(f"P_{lam}({x}) is not an integer")
    return SignedDegree(abs(val), 1 if val > 0 else -1)


def degree_polynomial(lam: Partition) -> list[int]:
    """Integer coefficients of ``P_lambda``, constant term first."""

    def mul(f, g):
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    out[i + j] += a * b
        return out

    def x_pow_minus_one(k):
        return [-1] + [0] * (k - 1) + [1]

    num = [0] * d_statistic(lam) + [1]
    for i in range(1, lam.size + 1):
        num = mul(num, x_pow_minus_one(i))
    for h in hook_multiset(lam):
        # exact division by the monic X^h - 1
        quot = [0] * (len(num) - h)
        rem = num[:]
        for k in range(len(rem) - 1, h - 1, -1):
            c = rem[k]
            quot[k - h] = c
            rem[k] -= c
            rem[k - h] += c
        if any(rem[:h]):
            raise NonIntegralDivision(f"X^{h} - 1 does not divide")
        num = quot
    return num


def degree_GL(lam: Partition, q: int) -> int:
    prime_power(q)
    return eval_P(lam, q * q).magnitude


def degree_U(lam: Partition, q: int) -> int:
    prime_power(q)
    return eval_P(lam, -q).magnitude


def l_valuation(N: int, l: int) -> LAdicValue:
    if N == 0:
        raise ZeroInput("valuation of zero")
    require_odd_prime(l)
    u, v = abs(N), 0
    while u % l == 0:
        u //= l
        v += 1
    return LAdicValue(N, l, v, u % l)


def check_lpart_equality(lam: Partition, q: int, l: int) -> bool:
    require_unitary(q, l)
    return (l_valuation(eval_P(lam, q * q).value, l).valuation
            == l_valuation(eval_P(lam, -q).value, l).valuation)


def ratio_residue(lam: Partition, q: int, l: int) -> int:
    """Residue mod ``l`` of the l-adic unit ``P(q^2) / P(-q)``, sign included."""
    A = l_valuation(eval_P(lam, q * q).value, l)
    B = l_valuation(eval_P(lam, -q).value, l)
    if A.valuation != B.valuation:
        raise ValuationMismatch(
            f"v_{l}(P({q}^2)) = {A.valuation} but v_{l}(P(-{q})) = {B.valuation}")
    return A.sign * B.sign * A.unit_residue * pow(B.unit_residue, -1, l) % l


def epsilon_sign(lam: Partition, q: int) -> int:
    """Sign of ``P_lambda(-q)``."""
    prime_power(q)
    sign = eval_P(lam, -q).sign
    if sign != epsilon_sign_by_parity(lam, q):
        raise AssertionError(f"sign mismatch for {lam}, q={q}")
    return sign


def epsilon_sign_by_parity(lam: Partition, q: int) -> int:
    """Sign of ``P_lambda(-q)`` from counting negative factors."""
    negatives = d_statistic(lam) % 2
    # (-q)^k - 1 < 0 exactly for odd k
    negatives += sum(1 for i in range(1, lam.size + 1) if i % 2)
    negatives += sum(1 for h in hook_multiset(lam) if h % 2)
    return -1 if negatives % 2 else 1


def degree_records(lam: Partition, q: int, l: int | None = None) -> list[dict]:
    """One record per group, in the per-group schema."""
    out = []
    for group, x in (("GL", q * q), ("U", -q)):
        sd = eval_P(lam, x)
        rec = {"partition": str(lam), "q": q, "group": group,
               "degree": str(sd.magnitude), "sign": sd.sign}
        if l is not None:
            lv = l_valuation(sd.value, l)
            rec["l"] = l
            rec["valuation"] = lv.valuation
            try:
                rec["residue"] = ratio_residue(lam, q, l)
            except ValuationMismatch:
                rec["residue"] = None
        out.append(rec)
    return out
