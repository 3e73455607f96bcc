"""
test_fermionic.py
~~~~~~~~~~~~~~~~~

This test suite checks the parity vectors, fermionic case tables and
fermionic sums of virasoro_paths against path enumeration and Rocha-Caridi
characters.

Created by the virasoro-paths developers on 2026-10-17

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details.
"""

import unittest
from fractions import Fraction

import virasoro_paths as vp
from virasoro_paths.fermionic import ROW_FLAGS, ROWS, _binomial_factor

"""
Constants
"""
Q_8_12 = (0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0)
R_7_12 = (0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0)
R_6_12 = (1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 0)
ISING_SIGMA = [1, 1, 1, 2, 2, 3, 4]
LEE_YANG_1_2 = [1, 1, 1, 1, 2, 2, 3]
LEE_YANG_1_1 = [1, 0, 1, 1, 1, 1, 2]
ONE_PLUS_Q = vp.QPoly.from_coefficients([1, 1])
ORDER = 6
SHORT_ORDER = 4


def _rows(maker, *args):
    cases = []
    for row in ROWS:
        try:
            cases.append(maker(*args, row))
        except vp.ExcludedCaseError:
            continue
    return cases


class ParityVectorTestCase(unittest.TestCase):
    def test_fermionic_parity_q(self):
        self.assertEqual(vp.parity_q(8, 12).entries, Q_8_12)
        self.assertEqual(vp.parity_q(8, 12).component(2), 1)

    def test_fermionic_parity_r(self):
        self.assertEqual(vp.parity_r(7, 12).entries, R_7_12)
        self.assertEqual(vp.parity_r(6, 12).entries, R_6_12)

    def test_fermionic_parity_tilde(self):
        tilde = vp.parity_r(6, 12).tilde
        self.assertEqual(len(tilde), 11)
        self.assertEqual(tilde.entries, R_6_12[1:])

    def test_fermionic_parity_range(self):
        with self.assertRaises(vp.InvalidParametersError):
            vp.parity_q(0, 3)
        with self.assertRaises(vp.InvalidParametersError):
            vp.parity_r(5, 3)
        with self.assertRaises(vp.InvalidParametersError):
            vp.parity_q(1, -1)


class FermionicCaseTestCase(unittest.TestCase):
    def test_fermionic_excluded_rows(self):
        with self.assertRaises(vp.ExcludedCaseError):
            vp.FermionicCase.abf_finitized(3, 1, 2, "a")
        with self.assertRaises(vp.ExcludedCaseError):
            vp.FermionicCase.abf_character(4, 3, 2, "c")
        with self.assertRaises(vp.ExcludedCaseError):
            vp.FermionicCase.hl_character(2, 1, 1, "b")

    def test_fermionic_invalid_cases(self):
        with self.assertRaises(vp.InvalidParametersError):
            vp.FermionicCase.abf_finitized(3, 1, 2, "e")
        with self.assertRaises(vp.InvalidParametersError):
            vp.FermionicCase.abf_finitized(2, 1, 2, "c")
        with self.assertRaises(vp.InvalidParametersError):
            vp.FermionicCase.abf_character(3, 3, 1, "c")
        with self.assertRaises(vp.InvalidParametersError):
            vp.FermionicCase.hl_finitized(2, 3, 1, "c")

    def test_fermionic_valid_rows(self):
        self.assertEqual([case.case_id for case in _rows(vp.FermionicCase.abf_character, 3, 1, 2)], ["c", "d"])
        self.assertEqual([case.case_id for case in _rows(vp.FermionicCase.hl_character, 2, 1, 1)], ["c"])
        self.assertEqual([case.case_id for case in _rows(vp.FermionicCase.hl_character, 2, 1, 2)], ["d"])

    def test_fermionic_case_band_form(self):
        case = vp.FermionicCase.hl_finitized(Fraction(5, 2), Fraction(3, 2), 2, "c")
        self.assertEqual((case.P, case.A, case.B), (4, 2, 3))
        self.assertEqual(case.flags, ROW_FLAGS["c"])
        self.assertEqual(case.top, 3)
        self.assertTrue(case.hatted)
        self.assertEqual(case.binomial, "modified")
        self.assertEqual(case.scale, 1)

    def test_fermionic_case_json(self):
        case = vp.FermionicCase.abf_character(3, 1, 2, "c")
        self.assertEqual(case.to_json(), {"family": "abf_character", "row": "c", "p": 3, "r": 1, "s": 2})

    def test_fermionic_m_system(self):
        case = vp.FermionicCase.abf_finitized(3, 1, 3, "b")
        system = vp.MSystem.solve(case, (0, 2))
        self.assertEqual(system.m, (2, 1, 0))
        self.assertIsNone(system.hat_m)
        self.assertEqual(system.quadratic(), 2)
        with self.assertRaises(vp.InvalidParametersError):
            vp.MSystem.solve(case, (1,))

    def test_fermionic_hatted_m_system(self):
        case = vp.FermionicCase.rabf_finitized(3, 2, 2, "a")
        system = vp.MSystem.solve(case, (0, 1))
        self.assertEqual(system.m, (2, 2, 0))
        self.assertEqual(system.hat_m, (1, 0))
        self.assertEqual(system.binomial_entry(1), 1)


class FinitizedSumTestCase(unittest.TestCase):
    def test_fermionic_melzer_examples(self):
        self.assertEqual(vp.melzer_finitized(vp.FermionicCase.abf_finitized(3, 2, 2, "a"), 2), ONE_PLUS_Q)
        staircase = vp.melzer_finitized(vp.FermionicCase.abf_finitized(3, 1, 3, "b"), 2)
        self.assertEqual(staircase, vp.QPoly.monomial(Fraction(1, 2)))

    def test_fermionic_melzer_equals_paths(self):
        p = 4
        for a in range(1, p + 1):
            for b in range(1, p + 1):
                for case in _rows(vp.FermionicCase.abf_finitized, p, a, b):
                    e, f = case.flags
                    for L in range(0, 7):
                        if (L + a + b) % 2:
                            continue
                        self.assertEqual(vp.melzer_finitized(case, L), vp.gf_abf(p, a, b, e, f, L))

    def test_fermionic_rabf_example(self):
        case = vp.FermionicCase.rabf_finitized(3, 2, 2, "a")
        self.assertEqual(vp.rabf_finitized(case, 2), ONE_PLUS_Q)
        self.assertEqual(vp.rabf_finitized(case, 2), vp.gf_abf_restricted(3, 2, 2, 1, 1, 2))

    def test_fermionic_hl_example(self):
        case = vp.FermionicCase.hl_finitized(2, 1, 2, "b")
        self.assertEqual(vp.hl_finitized(case, 1), vp.QPoly.monomial(Fraction(1, 4)))
        self.assertEqual(vp.hl_finitized(case, 1), vp.gf_half(2, 1, 2, 0, 1, 1))

    def test_fermionic_unreachable_length(self):
        case = vp.FermionicCase.abf_finitized(4, 2, 2, "c")
        self.assertEqual(vp.melzer_finitized(case, 3), vp.QPoly.zero())

    def test_fermionic_wrong_family(self):
        finite = vp.FermionicCase.abf_finitized(3, 2, 2, "a")
        character = vp.FermionicCase.abf_character(3, 1, 2, "c")
        with self.assertRaises(vp.InvalidParametersError):
            vp.rabf_finitized(finite, 2)
        with self.assertRaises(vp.InvalidParametersError):
            vp.evaluate_finitized(character, 2)
        with self.assertRaises(vp.InvalidParametersError):
            vp.evaluate_character(finite, ORDER)
        with self.assertRaises(vp.InvalidParametersError):
            vp.evaluate_finitized(finite, 2, binomial="other")


class CharacterSumTestCase(unittest.TestCase):
    def test_fermionic_ising_rows(self):
        expected = vp.rocha_caridi(vp.CharacterParams(3, 4, 1, 2), ORDER)
        self.assertEqual(expected.coefficients(), ISING_SIGMA)
        for case in _rows(vp.FermionicCase.abf_character, 3, 1, 2):
            self.assertEqual(vp.melzer_character(case, ORDER), expected)

    def test_fermionic_lee_yang_rows(self):
        (row_c,) = _rows(vp.FermionicCase.hl_character, 2, 1, 1)
        (row_d,) = _rows(vp.FermionicCase.hl_character, 2, 1, 2)
        self.assertEqual(vp.hl_character(row_c, ORDER).coefficients(), LEE_YANG_1_2)
        self.assertEqual(vp.hl_character(row_d, ORDER).coefficients(), LEE_YANG_1_1)

    def test_fermionic_character_pair_needs_b(self):
        with self.assertRaises(vp.InvalidParametersError):
            vp.hl_character_pair(3, 1, 1, ORDER)

    def test_fermionic_half_lattice_row_a_modified_binomials(self):
        case = vp.FermionicCase.hl_character(Fraction(5, 2), 2, 2, "a")
        self.assertEqual(case.binomial, "modified")
        self.assertEqual(case.allowed_modified_indices(), frozenset())
        # the (0, -1) binomial is 1 when modified and 0 when plain
        self.assertEqual(_binomial_factor(case, 0, -1, "case", None), (vp.QPoly.one(), True))
        self.assertEqual(_binomial_factor(case, 0, -1, "plain", None), (vp.QPoly.zero(), False))
        modified = vp.evaluate_character(case, SHORT_ORDER, "case")
        plain = vp.evaluate_character(case, SHORT_ORDER, "plain")
        self.assertEqual(modified.firings, ())
        self.assertEqual(modified.value, plain.value)
