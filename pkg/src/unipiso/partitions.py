"""Young-diagram combinatorics.

Partitions are immutable tuples of weakly decreasing positive parts.  Rows and
columns are 1-indexed throughout, so cell ``(i, j)`` sits in row ``i`` and
column ``j`` with ``1 <= j <= parts[i-1]``.

Cores, weights and rim-hook additions go through the abacus (beta-sets of
first-column hook lengths).  The shape-search versions live in the tests.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .errors import InvalidHookPlacement, PreconditionViolation
from .report import VerificationReport

_TEXT = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(p for p in parts if p))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the bracketed form ``[4,1]``; ``[]`` is the empty partition."""
        m = _TEXT.match(text.strip())
        if not m:
            raise ValueError(f"not a bracketed partition: {text!r}")
        body = m.group(1)
        if body is None:
            return cls()
        return cls(tuple(int(x) for x in body.split(",")))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def row(self, i: int) -> int:
        """Length of row ``i`` (1-indexed); zero past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col(self, j: int) -> int:
        """Length of column ``j`` (1-indexed)."""
        return self.conjugate.row(j)

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j)
                               for j in range(1, self.parts[0] + 1)))

    def cells(self) -> set[tuple[int, int]]:
        return {(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)}

    def __contains__(self, cell) -> bool:
        i, j = cell
        return i >= 1 and 1 <= j <= self.row(i)

    def addable_corners(self) -> list[tuple[int, int]]:
        return [(i, self.row(i) + 1) for i in range(1, len(self.parts) + 2)
                if i == 1 or self.row(i - 1) > self.row(i)]

    def add_cell(self, cell: tuple[int, int]) -> "Partition":
        i, j = cell
        if (i, j) not in self.addable_corners():
            raise PreconditionViolation(f"{cell} is not an addable corner of {self}")
        parts = list(self.parts) + [0]
        parts[i - 1] += 1
        return Partition.of(*parts)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self.parts, other.parts))


class HookExtremes(NamedTuple):
    u: int
    v: int


class StraightHookSpec(NamedTuple):
    r: int
    c: int
    a: int
    e: int


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition.of(*lam)


def conjugate(lam: Partition) -> Partition:
    return _as_partition(lam).conjugate


def hook_length(lam: Partition, i: int, j: int) -> int:
    return lam.row(i) + lam.col(j) - i - j + 1


def hook_multiset(lam: Partition) -> tuple[int, ...]:
    """Sorted hook lengths, one per cell."""
    lam = _as_partition(lam)
    conj = lam.conjugate
    return tuple(sorted(p + conj.row(j) - i - j + 1
                        for i, p in enumerate(lam.parts, 1) for j in range(1, p + 1)))


def d_statistic(lam: Partition) -> int:
    """Sum of squared column lengths minus sum of ``i * lambda_i``."""
    lam = _as_partition(lam)
    return (sum(c * c for c in lam.conjugate.parts)
            - sum(i * p for i, p in enumerate(lam.parts, 1)))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def gen(m, cap):
        if m == 0:
            yield ()
            return
        for first in range(min(m, cap), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    for parts in gen(n, max_part):
        yield Partition(parts)


# -- abacus -----------------------------------------------------------------

def beta_set(lam: Partition, beads: int | None = None) -> tuple[int, ...]:
    """First-column hook lengths padded to ``beads`` beads, decreasing."""
    lam = _as_partition(lam)
    k = len(lam) if beads is None else beads
    if k < len(lam):
        raise ValueError(f"need at least {len(lam)} beads, got {k}")
    return tuple(lam.row(i) + k - i for i in range(1, k + 1))


def from_beta_set(beta: Iterable[int]) -> Partition:
    b = sorted(beta, reverse=True)
    k = len(b)
    return Partition.of(*(b[i] - (k - 1 - i) for i in range(k)))


def e_core(lam: Partition, e: int, beads: int | None = None) -> Partition:
    """Slide every bead as far up its runner as it goes."""
    if e < 1:
        raise ValueError("e must be positive")
    beta = beta_set(_as_partition(lam), beads)
    runners = Counter(b % e for b in beta)
    core = [r + e * t for r, cnt in runners.items() for t in range(cnt)]
    return from_beta_set(core)


def e_weight(lam: Partition, e: int) -> int:
    lam = _as_partition(lam)
    return (lam.size - e_core(lam, e).size) // e


def is_e_core(lam: Partition, e: int) -> bool:
    return e_core(lam, e) == _as_partition(lam)


def is_2_core(lam: Partition) -> bool:
    lam = _as_partition(lam)
    return lam.parts == tuple(range(len(lam), 0, -1))


def skew_extremes(mu: Partition, lam: Partition) -> HookExtremes:
    cells = mu.cells() - lam.cells()
    if not cells:
        raise PreconditionViolation("empty skew shape")
    return HookExtremes(min(i for i, _ in cells), min(j for _, j in cells))


def is_rim_hook(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu / lam`` is a non-empty edge-connected strip with no 2x2 square."""
    if not mu.contains(lam):
        return False
    cells = mu.cells() - lam.cells()
    if not cells:
        return False
    if any({(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells for i, j in cells):
        return False
    start = next(iter(cells))
    seen, stack = {start}, [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def add_rim_hooks(lam: Partition, e: int) -> dict[Partition, HookExtremes]:
    """Every ``mu`` obtained from ``lam`` by adding one rim ``e``-hook.

    Each bead that can move ``e`` places to a free position gives one ``mu``.
    """
    if e < 1:
        raise ValueError("e must be positive")
    lam = _as_partition(lam)
    beta = beta_set(lam, len(lam) + e)
    occupied = set(beta)
    out = {}
    for b in beta:
        if b + e not in occupied:
            mu = from_beta_set((occupied - {b}) | {b + e})
            out[mu] = skew_extremes(mu, lam)
    return dict(sorted(out.items(), reverse=True))


def remove_rim_hooks(mu: Partition, e: int) -> list[Partition]:
    mu = _as_partition(mu)
    beta = beta_set(mu)
    occupied = set(beta)
    return sorted((from_beta_set((occupied - {b}) | {b - e})
                   for b in beta if b >= e and b - e not in occupied), reverse=True)


def additions_I2(lam: Partition) -> list[Partition]:
    return list(add_rim_hooks(lam, 2))


def additions_I11(lam: Partition) -> list[Partition]:
    """Shapes from adding two boxes in distinct rows and distinct columns."""
    lam = _as_partition(lam)
    corners = lam.addable_corners()
    out = set()
    for x in range(len(corners)):
        for y in range(x + 1, len(corners)):
            (i1, j1), (i2, j2) = corners[x], corners[y]
            if i1 != i2 and j1 != j2:
                out.add(lam.add_cell(corners[x]).add_cell(corners[y]))
    return sorted(out, reverse=True)


# -- special shapes -----------------------------------------------------------

def staircase(t: int) -> Partition:
    if t < 1:
        raise ValueError("t must be at least 1")
    return Partition(tuple(range(t, 0, -1)))


@dataclass(frozen=True)
class SpecialShapes:
    t: int
    e: int
    mu_e_plus: Partition
    lam_plus: Partition
    lam_minus: Partition
    lam_e_minus: Partition

    @property
    def lam_e_plus(self) -> Partition:
        return self.mu_e_plus


def special_shapes(t: int, e: int) -> SpecialShapes:
    """The staircase variants used in the 2-weight 0 and 1 cases."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if e < 2:
        raise ValueError("e must be at least 2")
    tail = tuple(range(t - 1, 0, -1))
    stair = staircase(t).parts
    return SpecialShapes(
        t, e,
        mu_e_plus=Partition((t + e - 1,) + tail),
        lam_plus=Partition((t + 2,) + tail),
        lam_minus=Partition(stair + (1, 1)),
        lam_e_minus=Partition(stair + (1,) * (e - 1)),
    )


# -- hook bookkeeping ---------------------------------------------------------

def add_straight_hook(lam: Partition, r: int, a: int, e: int) -> tuple[Partition, StraightHookSpec]:
    """Add ``a`` boxes to row ``r`` and one box to each of rows ``r+1 .. r+e-a``."""
    lam = _as_partition(lam)
    if not (1 <= a <= e) or r < 1:
        raise InvalidHookPlacement(f"need r >= 1 and 1 <= a <= e, got r={r}, a={a}, e={e}")
    if r > len(lam) + 1:
        raise InvalidHookPlacement(f"row {r} is not reachable from {lam}")
    rows = list(lam.parts) + [0] * (r + e - a - len(lam))
    rows[r - 1] += a
    for i in range(r + 1, r + e - a + 1):
        rows[i - 1] += 1
    rows = [x for x in rows if x]
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise InvalidHookPlacement(f"shape {rows} is not a partition")
    mu = Partition(tuple(rows))
    if not is_rim_hook(mu, lam):
        raise InvalidHookPlacement(f"{mu} / {lam} is not a rim hook")
    return mu, StraightHookSpec(r, lam.row(r) + 1, a, e)


def straight_placements(lam: Partition, e: int) -> Iterator[tuple[Partition, StraightHookSpec]]:
    lam = _as_partition(lam)
    for r in range(1, len(lam) + 2):
        for a in range(1, e + 1):
            try:
                yield add_straight_hook(lam, r, a, e)
            except InvalidHookPlacement:
                continue


def _replace(base: Counter, old: Iterable[int], new: Iterable[int]) -> Counter | None:
    old = Counter(old)
    if any(base[k] < v for k, v in old.items()):
        return None
    out = base - old
    out.update(new)
    return out


def _sorted(counter: Counter | None):
    return None if counter is None else tuple(sorted(counter.elements()))


def verify_straight_hook_tables(lam: Partition, r: int, a: int, e: int) -> VerificationReport:
    lam = _as_partition(lam)
    mu, (r, c, a, e) = add_straight_hook(lam, r, a, e)
    conj = lam.conjugate
    inputs = {"lambda": lam, "r": r, "a": a, "e": e}
    rows = range(1, r)
    cols = range(1, c)
    predicted = _replace(
        Counter(hook_multiset(lam)),
        [lam.row(i) - c + r - a + 1 - i for i in rows]
        + [conj.row(j) - r + c - e + a - j for j in cols],
        [lam.row(i) - c + r + e - a + 1 - i for i in rows]
        + [conj.row(j) - r + c + a - j for j in cols]
        + [e] + list(range(1, a)) + list(range(1, e - a + 1)),
    )
    report = VerificationReport()
    report.add("straight_hook_multiset", inputs, _sorted(predicted), hook_multiset(mu))
    report.add("straight_hook_d_delta", inputs,
               (r - a) * e + e * (e - 1) // 2 + a * (a - 1) // 2,
               d_statistic(mu) - d_statistic(lam))
    return report


def deformation_admissible(lam: Partition, mu: Partition, r: int, c: int, e: int) -> str | None:
    """Name of the first failed geometric precondition, or ``None``."""
    if mu not in add_rim_hooks(lam, e):
        return "mu is not lambda plus a rim e-hook"
    if (r, c) not in lam.addable_corners():
        return "(r,c) is not an addable corner of lambda"
    for cell in ((r, c), (r + 1, c), (r, c + 1)):
        if cell not in mu:
            return f"cell {cell} is not in mu"
    if (r + 1, c + 1) not in mu.addable_corners():
        return "(r+1,c+1) is not an addable corner of mu"
    return None


def verify_deformation_step(lam: Partition, mu: Partition, r: int, c: int, e: int) -> VerificationReport:
    """Check the identities used when a rim hook is pushed one box off straight."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    why = deformation_admissible(lam, mu, r, c, e)
    if why:
        raise PreconditionViolation(why)
    lam_bar = lam.add_cell((r, c))
    mu_bar = mu.add_cell((r + 1, c + 1))
    lc, mc = lam.conjugate, mu.conjugate
    inputs = {"lambda": lam, "mu": mu, "r": r, "c": c, "e": e}
    report = VerificationReport()

    report.add("deformation_d_delta", inputs, 1,
               d_statistic(mu_bar) - d_statistic(lam_bar) - d_statistic(mu) + d_statistic(lam))

    old = [lam.row(i) - c + r - i for i in range(1, r)] + [lc.row(j) - r + c - j for j in range(1, c)]
    predicted = _replace(Counter(hook_multiset(lam)), old, [h + 1 for h in old] + [1])
    report.add("deformation_lambda_table", inputs, _sorted(predicted), hook_multiset(lam_bar))

    old = ([mu.row(i) - c + r - i for i in range(1, r + 1)]
           + [mc.row(j) - r + c - j for j in range(1, c + 1)])
    predicted = _replace(Counter(hook_multiset(mu)), old, [h + 1 for h in old] + [1])
    report.add("deformation_mu_table", inputs, _sorted(predicted), hook_multiset(mu_bar))

    u, v = skew_extremes(mu, lam)
    report.add("deformation_extremes", {**inputs, "u": u, "v": v},
               e, mu.row(u) + mc.row(v) - u - v + 1)

    report.add("deformation_row_shift", inputs,
               [mu.row(i + 1) - 1 for i in range(u, r)], [lam.row(i) for i in range(u, r)])
    report.add("deformation_col_shift", inputs,
               [mc.row(j + 1) - 1 for j in range(v, c)], [lc.row(j) for j in range(v, c)])
    return report


def deformation_steps(lam: Partition, e: int) -> Iterator[tuple[Partition, int, int]]:
    """All ``(mu, r, c)`` meeting the deformation preconditions for ``lam``."""
    lam = _as_partition(lam)
    for mu in add_rim_hooks(lam, e):
        for r, c in lam.addable_corners():
            if deformation_admissible(lam, mu, r, c, e) is None:
                yield mu, r, c
