"""Unipotent l-blocks of GL_n(q^2) and U_n(q).

A block is labelled by an e-core; ``e`` is the order of ``q^2`` (GL) or of
``-q`` (U) modulo ``l``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .degrees import l_valuation
from .errors import NotUnitaryFlavor, UnsupportedLabel
from .gfpoly import LambdaClass, MonicPoly, OrbitPoly, root_order, trivial_orbit
from .numtheory import Flavor, check_pair, flavor_of, mult_order, prime_power, require_odd_prime
from .partitions import Partition, e_core, is_e_core, partitions_of


class GroupKind(str, enum.Enum):
    GL2 = "GL"  # GL_n(q^2)
    U = "U"     # U_n(q)

    @classmethod
    def parse(cls, text: str) -> "GroupKind":
        t = text.strip().upper()
        if t in ("GL", "GL2"):
            return cls.GL2
        if t == "U":
            return cls.U
        raise ValueError(f"unknown group kind {text!r}")


@dataclass(frozen=True)
class GroupSpec:
    kind: GroupKind
    n: int
    q: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        prime_power(self.q)

    @property
    def order(self) -> int:
        if self.kind is GroupKind.GL2:
            return order_GL(self.n, self.q * self.q)
        return order_U(self.n, self.q)


def e_param(q: int, l: int, kind: GroupKind) -> int:
    check_pair(q, l)
    x = q * q if kind is GroupKind.GL2 else -q
    return mult_order(x, l)


def flavor(q: int, l: int) -> Flavor:
    return flavor_of(q, l)


def e_gamma(d_gamma: int, in_lambda1: bool, kind: GroupKind, flv: Flavor, e: int) -> int:
    """Additive order of ``2 d`` mod ``e`` in the unitary-linear-Lambda_1 case, else of ``d``."""
    if e < 1:
        raise ValueError("e must be positive")
    if kind is GroupKind.U and in_lambda1 and flv is Flavor.LINEAR:
        return e // math.gcd(e, 2 * d_gamma)
    return e // math.gcd(e, d_gamma)


@dataclass(frozen=True)
class BlockLabel:
    group: GroupSpec
    l: int
    e: int
    core: Partition

    def __post_init__(self):
        n, c, e = self.group.n, self.core.size, self.e
        if c > n or (n - c) % e:
            raise ValueError(f"core {self.core} cannot label a block of rank {n} with e={e}")
        if not is_e_core(self.core, e):
            raise ValueError(f"{self.core} is not a {e}-core")

    @property
    def weight(self) -> int:
        return (self.group.n - self.core.size) // self.e

    def to_json(self) -> dict:
        g = self.group
        return {
            "kind": g.kind.value,
            "n": g.n,
            "q": g.q,
            "l": self.l,
            "e": self.e,
            "flavor": flavor(g.q, self.l).value,
            "core": str(self.core),
            "weight": self.weight,
            "defect_lpart": str(defect_group_lpart(self)),
        }


@dataclass(frozen=True)
class CharacterLabel:
    """``(s, lambda)``: a partition for each polynomial in the support of ``s``.

    ``X - 1`` is implicit and carries ``unipotent``; ``others`` maps every
    other support element to its partition, whose size is the multiplicity.
    Keys are :class:`OrbitPoly` or :class:`MonicPoly` on the GL side and
    :class:`LambdaClass` on the U side.
    """

    group: GroupSpec
    unipotent: Partition
    others: tuple = ()

    def __post_init__(self):
        items = tuple(sorted(((k, v) for k, v in dict(self.others).items() if v.size),
                             key=lambda kv: kv[0].sort_key()))
        object.__setattr__(self, "others", items)
        total = self.unipotent.size + sum(k.degree * v.size for k, v in items)
        if total != self.group.n:
            raise ValueError(f"label has rank {total}, expected {self.group.n}")
        for k, _ in items:
            if k.is_trivial:
                raise ValueError("X - 1 goes in the unipotent slot")
            if self.group.kind is GroupKind.U and not isinstance(k, LambdaClass):
                raise ValueError("U-side support is indexed by Lambda classes")

    @classmethod
    def unipotent_label(cls, group: GroupSpec, lam: Partition) -> "CharacterLabel":
        return cls(group, lam)

    @property
    def multipartition(self) -> dict:
        out = {trivial_orbit(): self.unipotent} if self.unipotent.size else {}
        out.update(self.others)
        return out

    @property
    def support(self) -> dict:
        return {k: v.size for k, v in self.multipartition.items()}

    @property
    def is_unipotent(self) -> bool:
        return not self.others

    def __str__(self) -> str:
        body = ", ".join([f"X-1: {self.unipotent}"] + [f"{k}: {v}" for k, v in self.others])
        return f"{self.group.kind.value}_{self.group.n}({body})"


def unipotent_block_labels(group: GroupSpec, l: int, e: int | None = None) -> list[BlockLabel]:
    """Every e-core of size ``n - k e``, largest core first."""
    if e is None:
        e = e_param(group.q, l, group.kind)
    require_odd_prime(l)
    out = []
    for size in range(group.n, -1, -e):
        for kappa in partitions_of(size):
            if is_e_core(kappa, e):
                out.append(BlockLabel(group, l, e, kappa))
    return out


def block_of_unipotent(lam: Partition, e: int) -> Partition:
    return e_core(lam, e)


def order_GL(n: int, Q: int) -> int:
    out = Q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        out *= Q ** i - 1
    return out


def order_U(n: int, q: int) -> int:
    out = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        out *= q ** i - (-1) ** i
    return out


def check_group_lpart(n: int, q: int, l: int) -> bool:
    if flavor(q, l) is not Flavor.UNITARY:
        raise NotUnitaryFlavor(f"l={l} is linear for q={q}")
    return (l_valuation(order_GL(n, q * q), l).valuation
            == l_valuation(order_U(n, q), l).valuation)


def defect_group_lpart(block: BlockLabel) -> int:
    """l-part of the order of GL_{n-|core|}(q^2), resp. U_{n-|core|}(q)."""
    m = block.group.n - block.core.size
    if m == 0:
        return 1
    g = block.group
    order = order_GL(m, g.q * g.q) if g.kind is GroupKind.GL2 else order_U(m, g.q)
    return l_valuation(order, block.l).lpart


# -- membership -------------------------------------------------------------------

def _is_l_power(n: int, l: int) -> bool:
    while n % l == 0:
        n //= l
    return n == 1


def _root_order_of(key, l: int) -> int:
    members = key.members if isinstance(key, LambdaClass) else (key,)
    orders = set()
    for m in members:
        if isinstance(m, OrbitPoly):
            orders.add(m.modulus_order if m.l == l else 0)
        elif isinstance(m, MonicPoly):
            if m.F.order ** m.degree > 10 ** 12:
                raise UnsupportedLabel(f"{m} is beyond the concrete-arithmetic bound")
            orders.add(root_order(m))
        else:
            raise UnsupportedLabel(f"unknown support element {m!r}")
    return max(orders)


def support_fits_defect(block: BlockLabel, ch: CharacterLabel) -> bool:
    """Stand-in for "t is conjugate into the defect group".

    ``t`` must be an l-element whose non-trivial eigenvalue blocks fit into
    the rank ``n - |core|`` of the group containing the defect group.
    """
    used = 0
    for key, lam in ch.others:
        order = _root_order_of(key, block.l)
        if order <= 1 or not _is_l_power(order, block.l):
            return False
        used += key.degree * lam.size
    return used <= block.group.n - block.core.size


def e_gamma_of(key, block: BlockLabel) -> int:
    g = block.group
    in_l1 = isinstance(key, LambdaClass) and key.tag == "L1"
    return e_gamma(key.degree, in_l1, g.kind, flavor(g.q, block.l), block.e)


def block_contains(block: BlockLabel, ch: CharacterLabel) -> bool:
    if ch.group != block.group:
        return False
    if not support_fits_defect(block, ch):
        return False
    if e_core(ch.unipotent, block.e) != block.core:
        return False
    return all(e_core(lam, e_gamma_of(key, block)).size == 0 for key, lam in ch.others)
