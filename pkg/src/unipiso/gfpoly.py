"""Monic polynomials over F_{q^2} and the involution Gamma -> Gamma~.

Field elements are integers ``0 .. Q-1`` whose base-``p`` digits are the
coordinates in the basis ``1, x, x^2, ...`` of ``F_p[x]/(modulus)``.
Polynomials are tuples of field elements, constant term first.

Two representations of elements of Delta coexist:

* :class:`MonicPoly` -- explicit coefficients, only for fields below the
  configured size bound;
* :class:`OrbitPoly` -- the irreducible factor of ``X^(l^a) - 1`` whose roots
  are ``zeta^j`` for ``j`` in one orbit of multiplication by ``q^2`` on the
  units mod ``l^a``.  Exact at any degree and never touches field arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from sympy import factorint, primefactors

from .errors import (EnumerationTooLarge, FieldTooLarge, NotIrreducible,
                     PreconditionViolation, ZeroConstantTerm)
from .numtheory import check_pair, prime_power, require_unitary
from .report import VerificationReport

FIELD_BOUND = 10 ** 6
ENUMERATION_BOUND = 10 ** 7
_ADD_TABLE_BOUND = 4096


# -- polynomial arithmetic over any field object -------------------------------

def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly_add(F, f, g):
    n = max(len(f), len(g))
    f = tuple(f) + (0,) * (n - len(f))
    g = tuple(g) + (0,) * (n - len(g))
    return _trim(F.add(a, b) for a, b in zip(f, g))


def poly_sub(F, f, g):
    return poly_add(F, f, tuple(F.neg(b) for b in g))


def poly_mul(F, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return _trim(out)


def poly_divmod(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    inv_lead = F.inv(g[-1])
    dg = len(g) - 1
    quot = [0] * max(len(f) - dg, 0)
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if c == 0:
            continue
        c = F.mul(c, inv_lead)
        quot[k - dg] = c
        for j, b in enumerate(g):
            if b:
                f[k - dg + j] = F.sub(f[k - dg + j], F.mul(c, b))
    return _trim(quot), _trim(f[:dg])


def poly_mod(F, f, g):
    return poly_divmod(F, f, g)[1]


def poly_powmod(F, f, exp, modulus):
    result = (1,)
    base = poly_mod(F, f, modulus)
    while exp:
        if exp & 1:
            result = poly_mod(F, poly_mul(F, result, base), modulus)
        exp >>= 1
        if exp:
            base = poly_mod(F, poly_mul(F, base, base), modulus)
    return result


def poly_gcd(F, f, g):
    f, g = _trim(f), _trim(g)
    while g:
        f, g = g, poly_mod(F, f, g)
    if not f:
        return f
    inv = F.inv(f[-1])
    return tuple(F.mul(c, inv) for c in f)


def is_irreducible(F, f) -> bool:
    """Rabin's test: ``X^(Q^d) = X`` mod ``f`` and ``gcd(X^(Q^(d/r)) - X, f) = 1``."""
    f = _trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    X = (0, 1)
    frob = [X]
    for _ in range(d):
        frob.append(poly_powmod(F, frob[-1], F.order, f))
    if frob[d] != poly_mod(F, X, f):
        return False
    for r in primefactors(d):
        if len(poly_gcd(F, poly_sub(F, frob[d // r], X), f)) != 1:
            return False
    return True


# -- fields ---------------------------------------------------------------------

class PrimeField:
    def __init__(self, p: int):
        self.p = self.order = p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        return pow(a, -1, self.p)


def _least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``k`` over F_p."""
    Fp = PrimeField(p)
    for low in itertools.product(range(p), repeat=k):
        f = low + (1,)
        if low[0] and is_irreducible(Fp, f):
            return f
    raise AssertionError("no irreducible found")  # pragma: no cover


@dataclass(frozen=True, eq=True)
class FieldSpec:
    """The field F_{q^2} built as ``F_p[x]/(modulus)``."""

    p: int
    f: int
    modulus: tuple[int, ...]
    _exp: list = field(repr=False, compare=False, hash=False)
    _log: list = field(repr=False, compare=False, hash=False)
    _add: list | None = field(repr=False, compare=False, hash=False)
    _neg: list = field(repr=False, compare=False, hash=False)

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def order(self) -> int:
        return self.p ** (2 * self.f)

    @property
    def degree(self) -> int:
        return 2 * self.f

    @property
    def generator(self) -> int:
        return self._exp[1]

    # element <-> coordinates
    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_digits(self, ds: Sequence[int]) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d % self.p
        return a

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[-self._log[a] % (self.order - 1)]

    def pow(self, a, k: int):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if k == 0 else 0
        return self._exp[self._log[a] * k % (self.order - 1)]

    def log(self, a) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def elem_order(self, a) -> int:
        return (self.order - 1) // math.gcd(self.log(a), self.order - 1)

    def frobenius(self, a):
        """``a -> a^q``."""
        return self.pow(a, self.q)

    def format(self, a) -> str:
        return "[" + ",".join(map(str, self.digits(a))) + "]"

    def describe(self) -> dict:
        return {"p": self.p, "f": self.f, "order": self.order,
                "modulus": list(self.modulus)}


def field_build(q: int, bound: int = FIELD_BOUND) -> FieldSpec:
    """Deterministic F_{q^2} for an odd prime power ``q``."""
    p, f = prime_power(q)
    k = 2 * f
    Q = p ** k
    if Q > bound:
        raise FieldTooLarge(f"q^2 = {Q} exceeds bound {bound}")
    modulus = _least_irreducible(p, k)
    Fp = PrimeField(p)

    def to_int(poly):
        poly = tuple(poly) + (0,) * (k - len(poly))
        a = 0
        for d in reversed(poly):
            a = a * p + d
        return a

    def from_int(a):
        out = []
        for _ in range(k):
            a, r = divmod(a, p)
            out.append(r)
        return _trim(out)

    group = Q - 1
    divisors = [group // r for r in primefactors(group)]
    for cand in range(2, Q):
        g = from_int(cand)
        if all(poly_powmod(Fp, g, d, modulus) != (1,) for d in divisors):
            break
    else:  # pragma: no cover - only Q = 3 would get here and q is odd so Q >= 9
        raise AssertionError("no primitive element")

    exp = [0] * group
    log = [0] * Q
    x = (1,)
    for i in range(group):
        a = to_int(x)
        exp[i] = a
        log[a] = i
        x = poly_mod(Fp, poly_mul(Fp, x, g), modulus)

    add = None
    if Q <= _ADD_TABLE_BOUND:
        digs = [from_int(a) + (0,) * (k - len(from_int(a))) for a in range(Q)]
        add = [[to_int(tuple((x + y) % p for x, y in zip(da, db))) for db in digs] for da in digs]
    neg = [to_int(tuple(-x % p for x in from_int(a))) for a in range(Q)]
    return FieldSpec(p, f, modulus, exp, log, add, neg)


_FIELDS: dict[int, FieldSpec] = {}


def get_field(q: int) -> FieldSpec:
    if q not in _FIELDS:
        _FIELDS[q] = field_build(q)
    return _FIELDS[q]


# -- Delta elements -----------------------------------------------------------------

@dataclass(frozen=True)
class MonicPoly:
    """``X^m + a_{m-1} X^{m-1} + ... + a_0`` with ``a_0 != 0``."""

    F: FieldSpec
    coeffs: tuple[int, ...]  # a_0 .. a_{m-1}

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroConstantTerm("constant term must be non-zero")

    @classmethod
    def linear(cls, F: FieldSpec, root: int) -> "MonicPoly":
        """``X - root``."""
        return cls(F, (F.neg(root),))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def full(self) -> tuple[int, ...]:
        return self.coeffs + (1,)

    @property
    def is_trivial(self) -> bool:
        return self.coeffs == (self.F.neg(1),)

    def __str__(self) -> str:
        terms = ["X" if self.degree == 1 else f"X^{self.degree}"]
        for k in range(self.degree - 1, -1, -1):
            c = self.F.format(self.coeffs[k])
            terms.append(c if k == 0 else f"{c}*X" if k == 1 else f"{c}*X^{k}")
        return " + ".join(terms)

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))


def tilde(gamma: MonicPoly) -> MonicPoly:
    """``a_0^{-q} (a_0^q X^m + a_1^q X^{m-1} + ... + a_{m-1}^q X + 1)``."""
    F = gamma.F
    a0 = gamma.coeffs[0]
    if a0 == 0:
        raise ZeroConstantTerm("tilde needs a non-zero constant term")
    scale = F.inv(F.frobenius(a0))
    m = gamma.degree
    full = gamma.full
    # coefficient of X^k is a_{m-k}^q * scale, with a_m = 1
    new = tuple(F.mul(F.frobenius(full[m - k]), scale) for k in range(m))
    return MonicPoly(F, new)


def poly_is_irreducible(gamma: MonicPoly) -> bool:
    return is_irreducible(gamma.F, gamma.full)


def root_order(gamma: MonicPoly) -> int:
    """Multiplicative order of a root of the irreducible ``gamma``."""
    F, f = gamma.F, gamma.full
    n = F.order ** gamma.degree - 1
    for r, k in factorint(n).items():
        for _ in range(k):
            if poly_powmod(F, (0, 1), n // r, f) == (1,):
                n //= r
            else:
                break
    return n


@dataclass(frozen=True, order=True)
class OrbitPoly:
    """Irreducible factor of ``X^(l^a) - 1`` with roots ``zeta^j``, ``j`` in one orbit."""

    l: int
    a: int
    exponents: tuple[int, ...]

    @property
    def modulus_order(self) -> int:
        return self.l ** self.a

    @property
    def degree(self) -> int:
        return len(self.exponents)

    @property
    def representative(self) -> int:
        return self.exponents[0]

    @property
    def is_trivial(self) -> bool:
        return self.a == 0

    def __str__(self) -> str:
        return f"orbit({self.l}^{self.a}; {self.representative}; size={self.degree})"

    def sort_key(self):
        return (self.degree, self.l, self.a, self.representative)


def trivial_orbit() -> OrbitPoly:
    """``X - 1``; shared by every ``l``."""
    return OrbitPoly(1, 0, (0,))


def orbit_of(j: int, mult: int, modulus: int) -> tuple[int, ...]:
    seen = []
    x = j % modulus
    while x not in seen:
        seen.append(x)
        x = x * mult % modulus
    return tuple(sorted(seen))


def cyclotomic_l_orbits(q: int, l: int, a: int) -> list[OrbitPoly]:
    """Symbolic irreducible factors of ``X^(l^a) - 1`` whose roots have order exactly ``l^a``."""
    check_pair(q, l)
    if a < 0:
        raise ValueError("a must be non-negative")
    if a == 0:
        return [trivial_orbit()]
    m = l ** a
    out, seen = [], set()
    for j in range(1, m):
        if j % l == 0 or j in seen:
            continue
        orb = orbit_of(j, q * q, m)
        seen.update(orb)
        out.append(OrbitPoly(l, a, orb))
    return out


def orbit_tilde(gamma: OrbitPoly, q: int) -> OrbitPoly:
    """Image under ``alpha -> alpha^(-q)``, i.e. ``j -> -q j``."""
    if gamma.is_trivial:
        return gamma
    m = gamma.modulus_order
    return OrbitPoly(gamma.l, gamma.a, orbit_of(-q * gamma.representative, q * q, m))


def orbit_tilde_fixed(gamma: OrbitPoly, q: int) -> bool:
    m = gamma.modulus_order
    members = set(gamma.exponents)
    return all((-q * j) % m in members for j in members)


def materialize(gamma: OrbitPoly, F: FieldSpec) -> MonicPoly:
    """Concrete polynomial for an orbit whose roots lie in ``F``."""
    m = gamma.modulus_order
    if (F.order - 1) % m:
        raise PreconditionViolation(f"roots of order {m} do not lie in F_{F.order}")
    zeta = F.pow(F.generator, (F.order - 1) // m)
    poly = (1,)
    for j in gamma.exponents:
        poly = poly_mul(F, poly, (F.neg(F.pow(zeta, j)), 1))
    return MonicPoly(F, poly[:-1])


# -- Lambda classes ---------------------------------------------------------------

@dataclass(frozen=True)
class LambdaClass:
    tag: str  # "L1" or "L2"
    members: tuple

    @property
    def degree(self) -> int:
        return sum(g.degree for g in self.members)

    @property
    def is_trivial(self) -> bool:
        return self.tag == "L1" and self.members[0].is_trivial

    def __str__(self) -> str:
        return f"{self.tag}{{" + "; ".join(map(str, self.members)) + "}"

    def sort_key(self):
        return (self.degree, tuple(m.sort_key() for m in self.members))


def _pair(a, b) -> tuple:
    return tuple(sorted((a, b), key=lambda g: g.sort_key()))


def classify(gamma: MonicPoly, check: bool = True) -> LambdaClass:
    if check and not poly_is_irreducible(gamma):
        raise NotIrreducible(str(gamma))
    t = tilde(gamma)
    if t == gamma:
        return LambdaClass("L1", (gamma,))
    return LambdaClass("L2", _pair(gamma, t))


def classify_orbit(gamma: OrbitPoly, q: int) -> LambdaClass:
    if orbit_tilde_fixed(gamma, q):
        return LambdaClass("L1", (gamma,))
    return LambdaClass("L2", _pair(gamma, orbit_tilde(gamma, q)))


def enumerate_irreducibles(F: FieldSpec, d: int, bound: int = ENUMERATION_BOUND) -> list[MonicPoly]:
    """All monic irreducibles of degree ``d`` with non-zero constant term."""
    Q = F.order
    if d < 1:
        raise ValueError("degree must be positive")
    if Q ** d > bound:
        raise EnumerationTooLarge(f"{Q}^{d} candidates exceed bound {bound}")
    out = []
    for coeffs in itertools.product(range(Q), repeat=d):
        if coeffs[0] == 0:
            continue
        if d == 1 or is_irreducible(F, coeffs + (1,)):
            out.append(MonicPoly(F, coeffs))
    return out


def necklace_count(Q: int, d: int) -> int:
    """Number of monic irreducibles of degree ``d`` over F_Q, excluding ``X``."""
    total = sum(_mobius(d // k) * Q ** k for k in range(1, d + 1) if d % k == 0) // d
    return total - (1 if d == 1 else 0)


def _mobius(n: int) -> int:
    fac = factorint(n)
    if any(k > 1 for k in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def verify_la_fixed(q: int, l: int, a_max: int) -> VerificationReport:
    """Every l-power cyclotomic factor is fixed by tilde when ``l`` is unitary."""
    require_unitary(q, l)
    report = VerificationReport()
    for a in range(a_max + 1):
        for gamma in cyclotomic_l_orbits(q, l, a):
            inputs = {"q": q, "l": l, "a": a, "orbit": str(gamma)}
            if not gamma.is_trivial:
                report.add("l_not_dividing_minus_q_power_plus_one", inputs, True,
                           ((-q) ** gamma.degree + 1) % l != 0)
            report.add("orbit_tilde_fixed", inputs, True, orbit_tilde_fixed(gamma, q))
    return report
