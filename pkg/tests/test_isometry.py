import pytest

import oracles
from unipiso.blocks import BlockLabel, CharacterLabel, GroupKind, GroupSpec, unipotent_block_labels
from unipiso.degrees import degree_GL, degree_U, epsilon_sign
from unipiso.errors import EParamTooSmall, NotUnitaryFlavor, PreconditionViolation
from unipiso.gfpoly import MonicPoly, cyclotomic_l_orbits, get_field
from unipiso.isometry import (block_character_labels, f_action_on_label, find_unitary_pair,
                              pieri_pattern, shintani_unipotent_map, sigma_stable,
                              verify_block_sigma_stability, verify_hook_step_congruence,
                              verify_pieri_degree_identity, verify_ratio_constant_on_blocks,
                              verify_staircase_chain)
from unipiso.numtheory import unitary_order
from unipiso.partitions import Partition, add_rim_hooks, e_core, partitions_of

P = Partition.of
GL = GroupKind.GL2


class TestFAction:
    def test_unipotent_fixed(self):
        g = GroupSpec(GL, 3, 3)
        for lam in partitions_of(3):
            ch = CharacterLabel(g, lam)
            assert f_action_on_label(ch) == ch and sigma_stable(ch)

    def test_unitary_orbit_fixed(self):
        g = GroupSpec(GL, 3, 3)
        for orb in cyclotomic_l_orbits(3, 7, 1):
            ch = CharacterLabel(g, Partition(), ((orb, P(1)),))
            assert sigma_stable(ch)

    def test_order_8_root_moves(self):
        g = GroupSpec(GL, 1, 3)
        F = get_field(3)
        gamma = MonicPoly.linear(F, F.generator)
        moved = MonicPoly.linear(F, F.inv(F.pow(F.generator, 3)))
        ch = CharacterLabel(g, Partition(), ((gamma, P(1)),))
        assert f_action_on_label(ch) == CharacterLabel(g, Partition(), ((moved, P(1)),))
        assert not sigma_stable(ch)

    def test_f_action_is_involution(self):
        F = get_field(3)
        for a in range(2, 9):  # a = 1 is X - 1, which lives in the unipotent slot
            ch = CharacterLabel(GroupSpec(GL, 1, 3), Partition(),
                                ((MonicPoly.linear(F, a), P(1)),))
            assert f_action_on_label(f_action_on_label(ch)) == ch
        g = GroupSpec(GL, 3, 3)
        for orb in cyclotomic_l_orbits(3, 13, 1):
            ch = CharacterLabel(g, Partition(), ((orb, P(1)),))
            assert f_action_on_label(f_action_on_label(ch)) == ch


class TestSigmaStability:
    def test_block_example(self):
        block = BlockLabel(GroupSpec(GL, 3, 3), 7, 3, Partition())
        labels = block_character_labels(block, 1)
        assert len(labels) == 5
        rep = verify_block_sigma_stability(block, a_max=1)
        assert rep.overall and len(rep.checks) == 5

    def test_weight_zero_block(self):
        block = BlockLabel(GroupSpec(GL, 2, 3), 7, 3, P(2))
        rep = verify_block_sigma_stability(block, a_max=1)
        assert rep.overall
        assert [c.inputs["label"] for c in rep.checks] == [str(CharacterLabel(block.group, P(2)))]

    def test_linear_guard(self):
        block = BlockLabel(GroupSpec(GL, 3, 3), 13, 3, Partition())
        with pytest.raises(NotUnitaryFlavor):
            verify_block_sigma_stability(block, a_max=1)

    def test_linear_prime_has_unstable_labels(self):
        block = BlockLabel(GroupSpec(GL, 3, 3), 13, 3, Partition())
        rep = verify_block_sigma_stability(block, a_max=1, require_unitary_flavor=False)
        assert len(rep.failures) == 4 and len(rep.checks) == 7

    def test_n_cap(self):
        block = BlockLabel(GroupSpec(GL, 4, 3), 7, 3, P(1))
        with pytest.raises(PreconditionViolation):
            verify_block_sigma_stability(block, a_max=1, n_cap=3)

    def test_grid(self):
        for n in range(1, 5):
            for q, l in [(3, 7), (5, 7), (5, 3), (3, 19)]:
                for block in unipotent_block_labels(GroupSpec(GL, n, q), l):
                    assert verify_block_sigma_stability(block, a_max=2).overall


class TestUnipotentMap:
    @pytest.mark.parametrize("lam,sign,text", [(P(3), 1, "((3,), +1)"),
                                               (P(1, 1), -1, "((1,1), -1)"),
                                               (P(2, 1), 1, "((2,1), +1)")])
    def test_examples(self, lam, sign, text):
        sc = shintani_unipotent_map(lam, 3)
        assert sc.label == lam and sc.sign == sign and str(sc) == text

    def test_bijection_and_signs(self):
        for n in range(1, 9):
            lams = list(partitions_of(n))
            images = [shintani_unipotent_map(lam, 5) for lam in lams]
            assert [s.label for s in images] == lams
            for s in images:
                assert s.sign == epsilon_sign(s.label, 5)

    def test_block_flip(self):
        base = shintani_unipotent_map(P(1, 1), 3)
        flipped = shintani_unipotent_map(P(1, 1), 3, flipped_cores=[P(1, 1)], e=3)
        assert flipped.sign == -base.sign
        assert shintani_unipotent_map(P(2, 1), 3, flipped_cores=[P(1, 1)], e=3).sign == 1
        with pytest.raises(ValueError):
            shintani_unipotent_map(P(1), 3, flipped_cores=[P(1)])


class TestPieri:
    def test_patterns(self):
        pat = pieri_pattern(P(1))
        assert pat.gl_terms == {P(2, 1): 2, P(3): 1, P(1, 1, 1): 1}
        assert pat.u_terms == {P(3): 1, P(1, 1, 1): 1}
        pat = pieri_pattern(Partition())
        assert pat.gl_terms == {P(2): 1, P(1, 1): 1} == pat.u_terms
        assert pieri_pattern(P(2)).u_terms == {P(4): 1, P(2, 2): 1, P(2, 1, 1): 1}

    def test_spot_values(self):
        rep = verify_pieri_degree_identity(P(1), 3)
        gl, u = rep.checks
        assert gl.expected == gl.actual == 910 == 2 * 90 + 1 + 729
        assert u.expected == u.actual == 28 == 1 + 27
        rep = verify_pieri_degree_identity(Partition(), 3)
        assert rep.checks[1].actual == 4 == degree_U(P(2), 3) + degree_U(P(1, 1), 3)

    def test_index_against_oracle(self):
        for n in range(2, 7):
            for q in (3, 5):
                Q = q * q
                gl_index = oracles.group_order_GL(n, Q) // (
                    (Q - 1) ** 2 * oracles.group_order_GL(n - 2, Q) * Q ** (2 * n - 3))
                # index of the parabolic is the number of flags of type (1, n-2, 1)
                flags = (Q ** n - 1) // (Q - 1) * (Q ** (n - 1) - 1) // (Q - 1)
                assert gl_index == flags
                lam = Partition.of(n - 2) if n > 2 else Partition()
                rep = verify_pieri_degree_identity(lam, q)
                assert rep.checks[0].expected == gl_index * degree_GL(lam, q)

    def test_small_grid(self):
        for n in range(2, 8):
            for lam in partitions_of(n - 2):
                for q in (3, 5, 7):
                    assert verify_pieri_degree_identity(lam, q).overall


class TestRatios:
    def test_hook_step_example(self):
        rep = verify_hook_step_congruence(P(1, 1), P(4, 1), 3, 7)
        assert rep.overall and rep.checks[0].expected == rep.checks[0].actual == 4

    def test_hook_step_from_empty(self):
        e = unitary_order(3, 7)
        rep = verify_hook_step_congruence(Partition(), Partition((1,) * e), 3, 7)
        assert rep.overall

    def test_hook_step_guard(self):
        with pytest.raises(PreconditionViolation):
            verify_hook_step_congruence(P(3), P(3), 3, 7)
        with pytest.raises(NotUnitaryFlavor):
            verify_hook_step_congruence(P(1), P(3), 3, 5)

    def test_all_hook_steps(self):
        for q, l in [(3, 7), (5, 3), (7, 11), (5, 7)]:
            e = unitary_order(q, l)
            for n in range(0, 8):
                for lam in partitions_of(n):
                    for mu in add_rim_hooks(lam, e):
                        assert verify_hook_step_congruence(lam, mu, q, l).overall

    def test_blocks_examples(self):
        assert verify_ratio_constant_on_blocks(5, 3, 7).overall
        assert verify_ratio_constant_on_blocks(1, 5, 7).overall
        assert verify_ratio_constant_on_blocks(8, 7, 11).overall
        # -5 has order 10 mod 11, so (5, 11) is outside the hypotheses
        with pytest.raises(NotUnitaryFlavor):
            verify_ratio_constant_on_blocks(8, 5, 11)


class TestStaircase:
    def test_t1(self):
        rep = verify_staircase_chain(1, 3, 7)
        assert rep.overall
        dom = next(c for c in rep.checks if c.name == "domino_additions")
        assert dom.actual == sorted([P(3), P(1, 1, 1)])

    def test_t2_found_by_search(self):
        q, l = find_unitary_pair(3, e_min=3)
        assert (q, l) == (3, 19) and unitary_order(3, 19) == 9
        rep = verify_staircase_chain(2, q, l)
        assert rep.overall
        names = {c.name for c in rep.checks}
        assert {"mu_e_plus_core", "column_chain_core", "domino_additions",
                "domino_additions_same_2core", "lam_e_minus_core"} <= names

    def test_e_too_small(self):
        with pytest.raises(EParamTooSmall):
            verify_staircase_chain(2, 3, 7)

    def test_range(self):
        for t in range(1, 5):
            pair = find_unitary_pair(3, e_min=t * (t + 1) // 2)
            if pair is None:
                continue
            assert verify_staircase_chain(t, *pair).overall
            for q in (5, 7):
                pair = find_unitary_pair(q, e_min=t * (t + 1) // 2)
                assert pair is not None and verify_staircase_chain(t, *pair).overall

    def test_core_is_staircase_shaped(self):
        q, l = find_unitary_pair(3, e_min=6)
        e = unitary_order(q, l)
        rep = verify_staircase_chain(3, q, l)
        core = next(c for c in rep.checks if c.name == "mu_e_plus_core").actual
        assert core == P(2, 2, 1) and e_core(core, e) == core


def test_reports_are_deterministic():
    a = verify_ratio_constant_on_blocks(7, 3, 7).to_dict()
    b = verify_ratio_constant_on_blocks(7, 3, 7).to_dict()
    assert a == b
    block = BlockLabel(GroupSpec(GL, 4, 3), 7, 3, P(1))
    assert (verify_block_sigma_stability(block, 1).to_dict()
            == verify_block_sigma_stability(block, 1).to_dict())
