"""Label-level Shintani correspondence and the checkers built on it.

Everything here works with labels and degrees; no class functions are
evaluated.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .blocks import (BlockLabel, CharacterLabel, GroupKind, GroupSpec, block_contains,
                     e_gamma_of, order_GL, order_U)
from .degrees import (check_lpart_equality, degree_GL, degree_U, epsilon_sign,
                      ratio_residue)
from .errors import EParamTooSmall, NonIntegralIndex, PreconditionViolation
from .gfpoly import MonicPoly, OrbitPoly, cyclotomic_l_orbits, orbit_tilde, tilde
from .numtheory import require_unitary, unitary_order
from .partitions import (Partition, add_rim_hooks, additions_I2, additions_I11, e_core,
                         partitions_of, special_shapes, staircase)
from .report import VerificationReport


@dataclass(frozen=True)
class SignedChar:
    label: Partition
    sign: int

    def __str__(self) -> str:
        inner = ",".join(map(str, self.label.parts))
        if len(self.label) == 1:
            inner += ","
        return f"(({inner}), {self.sign:+d})"


@dataclass
class InductionPattern:
    base: Partition
    gl_terms: dict[Partition, int]
    u_terms: dict[Partition, int]

    @property
    def gl_total(self) -> int:
        return sum(self.gl_terms.values())

    def to_json(self) -> dict:
        return {
            "base": str(self.base),
            "gl_terms": {str(k): v for k, v in self.gl_terms.items()},
            "u_terms": {str(k): v for k, v in self.u_terms.items()},
        }


# -- F-action and sigma-stability ------------------------------------------------

def _tilde_key(key, q: int):
    if isinstance(key, OrbitPoly):
        return orbit_tilde(key, q)
    if isinstance(key, MonicPoly):
        return tilde(key)
    raise TypeError(f"cannot apply tilde to {key!r}")


def f_action_on_label(ch: CharacterLabel) -> CharacterLabel:
    """``(s, lambda) -> (F s, F lambda)`` with ``(F lambda)_{Gamma~} = lambda_Gamma``."""
    if ch.group.kind is not GroupKind.GL2:
        raise ValueError("the F-action is defined on GL_n(q^2) labels")
    q = ch.group.q
    return CharacterLabel(ch.group, ch.unipotent,
                          tuple((_tilde_key(k, q), lam) for k, lam in ch.others))


def sigma_stable(ch: CharacterLabel) -> bool:
    return f_action_on_label(ch) == ch


def _multiplicity_choices(orbits: list[OrbitPoly], capacity: int) -> Iterator[list[tuple[OrbitPoly, int]]]:
    if not orbits:
        yield []
        return
    head, rest = orbits[0], orbits[1:]
    for m in range(capacity // head.degree + 1):
        for tail in _multiplicity_choices(rest, capacity - m * head.degree):
            yield ([(head, m)] if m else []) + tail


def block_character_labels(block: BlockLabel, a_max: int) -> list[CharacterLabel]:
    """GL-side labels of the block whose semisimple part has l-power order at most ``l^a_max``."""
    g = block.group
    capacity = g.n - block.core.size
    orbits = [o for a in range(1, a_max + 1) for o in cyclotomic_l_orbits(g.q, block.l, a)
              if o.degree <= capacity]
    out = []
    for choice in _multiplicity_choices(orbits, capacity):
        used = sum(o.degree * m for o, m in choice)
        options = []
        for o, m in choice:
            eg = e_gamma_of(o, block)
            options.append([lam for lam in partitions_of(m) if e_core(lam, eg).size == 0])
        unip = [mu for mu in partitions_of(g.n - used) if e_core(mu, block.e) == block.core]
        for parts in product(*options):
            for mu in unip:
                ch = CharacterLabel(g, mu, tuple((o, lam) for (o, _), lam in zip(choice, parts)))
                if block_contains(block, ch):
                    out.append(ch)
    return out


def verify_block_sigma_stability(block: BlockLabel, a_max: int, n_cap: int | None = None,
                                 require_unitary_flavor: bool = True) -> VerificationReport:
    g = block.group
    if g.kind is not GroupKind.GL2:
        raise ValueError("sigma-stability is a GL_n(q^2) statement")
    if require_unitary_flavor:
        require_unitary(g.q, block.l)
    if n_cap is not None and g.n > n_cap:
        raise PreconditionViolation(f"n={g.n} exceeds n_cap={n_cap}")
    report = VerificationReport()
    for ch in block_character_labels(block, a_max):
        report.add("sigma_stable", {"block": str(block.core), "n": g.n, "q": g.q,
                                    "l": block.l, "label": str(ch)}, True, sigma_stable(ch))
    return report


# -- unipotent correspondence -------------------------------------------------------

def shintani_unipotent_map(lam: Partition, q: int, flipped_cores: Iterable[Partition] = (),
                           e: int | None = None) -> SignedChar:
    """``chi^GL_{1,lam} -> eps_lam chi^U_{1,lam}``.

    ``flipped_cores`` (with ``e``) negates the sign on whole blocks; the
    signs are only determined relative to one another inside a block.
    """
    sign = epsilon_sign(lam, q)
    flipped = set(flipped_cores)
    if flipped:
        if e is None:
            raise ValueError("flipping block signs needs e")
        if e_core(lam, e) in flipped:
            sign = -sign
    return SignedChar(lam, sign)


def pieri_pattern(lam: Partition) -> InductionPattern:
    """Harish-Chandra induction from the Levi GL_1 x GL_{n-2} x GL_1 (resp. GL_1(q^2) x U_{n-2})."""
    gl = {mu: 2 for mu in additions_I11(lam)}
    gl.update({mu: 1 for mu in additions_I2(lam)})
    gl = dict(sorted(gl.items(), reverse=True))
    u = {mu: 1 for mu in additions_I2(lam)}
    return InductionPattern(lam, gl, u)


def _exact_index(num: int, den: int, what: str) -> int:
    idx, rem = divmod(num, den)
    if rem:
        raise NonIntegralIndex(f"{what}: {den} does not divide {num}")
    return idx


def verify_pieri_degree_identity(lam: Partition, q: int) -> VerificationReport:
    n = lam.size + 2
    Q = q * q
    pat = pieri_pattern(lam)
    inputs = {"lambda": lam, "n": n, "q": q}
    report = VerificationReport()

    gl_index = _exact_index(order_GL(n, Q), (Q - 1) ** 2 * order_GL(n - 2, Q) * Q ** (2 * n - 3),
                            "GL parabolic index")
    report.add("pieri_GL_degree", inputs, gl_index * degree_GL(lam, q),
               sum(m * degree_GL(mu, q) for mu, m in pat.gl_terms.items()))

    u_index = _exact_index(order_U(n, q), (Q - 1) * order_U(n - 2, q) * q ** (2 * n - 3),
                           "U parabolic index")
    report.add("pieri_U_degree", inputs, u_index * degree_U(lam, q),
               sum(m * degree_U(mu, q) for mu, m in pat.u_terms.items()))
    return report


# -- ratio congruences ------------------------------------------------------------------

def verify_hook_step_congruence(lam: Partition, mu: Partition, q: int, l: int) -> VerificationReport:
    e = require_unitary(q, l)
    if mu not in add_rim_hooks(lam, e):
        raise PreconditionViolation(f"{mu} is not {lam} plus a rim {e}-hook")
    report = VerificationReport()
    report.add("hook_step_ratio", {"lambda": lam, "mu": mu, "q": q, "l": l, "e": e},
               ratio_residue(lam, q, l), ratio_residue(mu, q, l))
    return report


def verify_ratio_constant_on_blocks(n: int, q: int, l: int) -> VerificationReport:
    e = require_unitary(q, l)
    classes: dict[Partition, list[Partition]] = defaultdict(list)
    for lam in partitions_of(n):
        classes[e_core(lam, e)].append(lam)
    report = VerificationReport()
    for core, members in classes.items():
        reference = ratio_residue(members[0], q, l)
        for lam in members:
            inputs = {"n": n, "q": q, "l": l, "e": e, "core": core, "lambda": lam}
            report.add("lpart_equality", inputs, True, check_lpart_equality(lam, q, l))
            report.add("ratio_constant_on_core", inputs, reference, ratio_residue(lam, q, l))
    return report


# -- staircase endgame -------------------------------------------------------------------

def verify_staircase_chain(t: int, q: int, l: int) -> VerificationReport:
    """Combinatorial inputs of the 2-weight 0 and 1 cases for ``staircase(t)``."""
    e = require_unitary(q, l)
    stair = staircase(t)
    if e <= stair.size:
        raise EParamTooSmall(f"e={e} must exceed |staircase({t})| = {stair.size}")
    sh = special_shapes(t, e)
    # (t-1, t-1, t-2, ..., 1): mu_e^+ with its first-row e-hook removed
    kappa = Partition.of(t - 1, *range(t - 1, 0, -1))
    nu = Partition(kappa.parts + (1,) * e)
    inputs = {"t": t, "q": q, "l": l, "e": e}
    report = VerificationReport()

    report.add("mu_e_plus_core", {**inputs, "shape": sh.mu_e_plus}, kappa, e_core(sh.mu_e_plus, e))
    report.add("column_chain_core", {**inputs, "shape": nu}, kappa, e_core(nu, e))
    report.add("mu_e_plus_is_hook_step", inputs, True, sh.mu_e_plus in add_rim_hooks(kappa, e))
    report.add("column_chain_is_hook_step", inputs, True, nu in add_rim_hooks(kappa, e))
    report.add("domino_additions", {**inputs, "staircase": stair},
               sorted([sh.lam_plus, sh.lam_minus]), sorted(additions_I2(stair)))
    report.add("domino_additions_same_2core", inputs,
               e_core(sh.lam_plus, 2), e_core(sh.lam_minus, 2))
    report.add("domino_2core_is_staircase", inputs, stair, e_core(sh.lam_plus, 2))
    if t >= 2:
        report.add("lam_e_minus_core", {**inputs, "shape": sh.lam_e_minus},
                   kappa.conjugate, e_core(sh.lam_e_minus, e))
        report.add("plus_minus_blocks_differ", inputs, True,
                   e_core(sh.lam_e_plus, e) != e_core(sh.lam_e_minus, e))
    return report


def find_unitary_pair(q: int, e_min: int, l_max: int = 100) -> tuple[int, int] | None:
    """Smallest odd prime ``l < l_max`` that is unitary for ``q`` with ``e > e_min``."""
    from sympy import primerange

    for l in primerange(3, l_max):
        if q % l == 0:
            continue
        e = unitary_order(q, l)
        if e % 2 and e > e_min:
            return q, l
    return None


def unipotent_labels_GL(n: int, q: int) -> list[CharacterLabel]:
    g = GroupSpec(GroupKind.GL2, n, q)
    return [CharacterLabel(g, lam) for lam in partitions_of(n)]
