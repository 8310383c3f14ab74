"""Small integer helpers: prime powers, multiplicative orders, flavor guards."""

from __future__ import annotations

import enum
from functools import lru_cache

from sympy import isprime, perfect_power
from sympy.ntheory import n_order

from .errors import NotOddPrime, NotOddPrimePower, NotUnitaryFlavor, PrimeDividesQ


class Flavor(str, enum.Enum):
    LINEAR = "linear"
    UNITARY = "unitary"


@lru_cache(maxsize=None)
def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, f)`` with ``q = p**f`` for an odd prime power ``q``."""
    if q < 3:
        raise NotOddPrimePower(f"{q} is not an odd prime power")
    if isprime(q):
        p, f = int(q), 1
    else:
        pp = perfect_power(q)
        if not pp:
            raise NotOddPrimePower(f"{q} is not a prime power")
        p, f = int(pp[0]), int(pp[1])
        # perfect_power may return a composite base, e.g. 64 -> (8, 2)
        inner = prime_power(p) if p % 2 else None
        if inner is None:
            raise NotOddPrimePower(f"{q} is not an odd prime power")
        p, f = inner[0], inner[1] * f
    if p == 2:
        raise NotOddPrimePower(f"{q} is even")
    return p, f


def require_odd_prime(l: int) -> int:
    if l < 3 or not isprime(l):
        raise NotOddPrime(f"{l} is not an odd prime")
    return l


def check_pair(q: int, l: int) -> None:
    prime_power(q)
    require_odd_prime(l)
    if q % l == 0:
        raise PrimeDividesQ(f"l={l} divides q={q}")


def mult_order(x: int, m: int) -> int:
    """Multiplicative order of ``x`` modulo ``m`` (1 when ``m == 1``)."""
    if m == 1:
        return 1
    return n_order(x % m, m)


def unitary_order(q: int, l: int) -> int:
    """Order of ``-q`` mod ``l``."""
    check_pair(q, l)
    return mult_order(-q, l)


def flavor_of(q: int, l: int) -> Flavor:
    return Flavor.UNITARY if unitary_order(q, l) % 2 else Flavor.LINEAR


def require_unitary(q: int, l: int) -> int:
    """Return ``e`` for a unitary pair, else raise :class:`NotUnitaryFlavor`."""
    e = unitary_order(q, l)
    if e % 2 == 0:
        raise NotUnitaryFlavor(f"order of -{q} mod {l} is {e}, which is even")
    return e


def valuation(n: int, l: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    n = abs(n)
    v = 0
    while n % l == 0:
        n //= l
        v += 1
    return v


def unitary_pairs(qs, ls) -> list[tuple[int, int]]:
    """The ``(q, l)`` pairs from the grid with ``l`` not dividing ``q`` and unitary flavor."""
    return [(q, l) for q in qs for l in ls
            if q % l and flavor_of(q, l) is Flavor.UNITARY]
