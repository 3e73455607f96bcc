"""
test_bosonic.py
~~~~~~~~~~~~~~~

This test suite checks the Rocha-Caridi characters, the bosonic polynomials
and the BosonicRecurrences and BosonicLimits suites of virasoro_paths.

Created by the virasoro-paths developers on 2026-10-17

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details.
"""

import unittest
from fractions import Fraction

import virasoro_paths as vp

"""
Constants
"""
ISING_SIGMA = [1, 1, 1, 2, 2, 3, 4]
LEE_YANG_1_2 = [1, 1, 1, 1, 2, 2, 3]
LEE_YANG_1_1 = [1, 0, 1, 1, 1, 1, 2]
TRINOMIAL_0_0_2 = vp.QPoly.from_coefficients([1, 1, 1])
ORDER = 6


class RochaCaridiTestCase(unittest.TestCase):
    def test_bosonic_rocha_caridi_values(self):
        self.assertEqual(vp.rocha_caridi(vp.CharacterParams(2, 5, 1, 2), ORDER).coefficients(), LEE_YANG_1_2)
        self.assertEqual(vp.rocha_caridi(vp.CharacterParams(2, 5, 1, 1), ORDER).coefficients(), LEE_YANG_1_1)
        self.assertEqual(vp.rocha_caridi(vp.CharacterParams(3, 4, 1, 2), ORDER).coefficients(), ISING_SIGMA)

    def test_bosonic_rocha_caridi_reflection(self):
        # chi_{r,s} = chi_{p-r,p'-s}
        for r in range(1, 4):
            for s in range(1, 5):
                left = vp.rocha_caridi(vp.CharacterParams(4, 5, r, s), ORDER)
                right = vp.rocha_caridi(vp.CharacterParams(4, 5, 4 - r, 5 - s), ORDER)
                self.assertEqual(left, right)

    def test_bosonic_rocha_caridi_order(self):
        series = vp.rocha_caridi(vp.CharacterParams(3, 4, 1, 1), 4)
        self.assertEqual(series.order, vp.QExponent.of(4))
        with self.assertRaises(vp.InvalidParametersError):
            vp.rocha_caridi(vp.CharacterParams(3, 4, 1, 1), -1)

    def test_bosonic_character_params(self):
        self.assertEqual(vp.CharacterParams.half_lattice(2, 1, 1), vp.CharacterParams(2, 5, 1, 2))
        self.assertEqual(vp.CharacterParams.half_lattice("5/2", 1, 1).p_prime, 6)
        with self.assertRaises(vp.InvalidParametersError):
            vp.CharacterParams(Fraction(1, 3), 4, 1, 1)
        with self.assertRaises(vp.InvalidParametersError):
            vp.CharacterParams(3, 4, 1, Fraction(1, 2))
        with self.assertRaises(vp.InvalidParametersError):
            vp.CharacterParams(0, 4, 1, 1)


class BosonicPolynomialTestCase(unittest.TestCase):
    def test_bosonic_abf_staircase(self):
        self.assertEqual(vp.abf_bosonic_finitized(3, 1, 3, 0, 0, 2), vp.QPoly.monomial(Fraction(3, 2)))

    def test_bosonic_abf_equals_paths(self):
        p = 4
        for a in range(1, p + 1):
            for b in range(1, p + 1):
                for e in (0, 1):
                    for f in (0, 1):
                        for L in range(0, 7):
                            self.assertEqual(vp.abf_bosonic_finitized(p, a, b, e, f, L), vp.gf_abf(p, a, b, e, f, L))

    def test_bosonic_abf_truncated(self):
        truncated = vp.abf_bosonic_finitized(3, 2, 2, 1, 1, 2, order=1)
        self.assertEqual(truncated, vp.QPoly.from_coefficients([1, 1]).truncate(1))

    def test_bosonic_y_polynomial(self):
        # Y^{0;2}_{1,0} vanishes identically
        for L in range(0, 6):
            self.assertEqual(vp.y_polynomial(vp.YParams(0, 2, 1, 0, L)), vp.QPoly.zero())
        with self.assertRaises(vp.InvalidParametersError):
            vp.YParams(0, 2, 1, 1, -1)

    def test_bosonic_y_polynomial_truncated(self):
        params = vp.YParams(0, Fraction(5, 2), 2, 1, 6)
        self.assertEqual(vp.y_polynomial(params, order=3), vp.y_polynomial(params).truncate(3))

    def test_bosonic_trinomial_example(self):
        self.assertEqual(vp.q_trinomial(vp.TrinomialIndex(0, 0, 2)), TRINOMIAL_0_0_2)

    def test_bosonic_half_lattice(self):
        self.assertEqual(vp.half_bosonic_finitized(2, 1, 2, 0, 0, 1), vp.QPoly.monomial(Fraction(3, 4)))
        self.assertEqual(vp.half_bosonic_finitized(2, 1, Fraction(3, 2), 0, 0, 1), vp.QPoly.zero())
        with self.assertRaises(vp.InvalidParametersError):
            vp.half_bosonic_finitized(Fraction(5, 2), Fraction(3, 2), 1, 0, 0, 1)

    def test_bosonic_half_lattice_equals_paths(self):
        t = Fraction(5, 2)
        halves = [Fraction(k, 2) for k in range(2, 6)]
        for a in (1, 2):
            for b in halves:
                for e in (0, 1):
                    for f in (0, 1):
                        for L in [Fraction(k, 2) for k in range(0, 7)]:
                            expected = vp.gf_half(t, a, b, e, f, L)
                            self.assertEqual(vp.half_bosonic_finitized(t, a, b, e, f, L), expected)

    def test_bosonic_half_lattice_extended_flags(self):
        with self.assertRaises(vp.InvalidParametersError):
            vp.half_bosonic_extended(2, 1, 1, 2, 0, 1)
        with self.assertRaises(vp.InvalidParametersError):
            vp.half_bosonic_extended(2, 1, 1, 0, 0, -1)


class BosonicRecurrencesTestCase(unittest.TestCase):
    def test_bosonic_recurrences_integer_top(self):
        records = vp.verify_bosonic_recurrences(2, L_range=range(0, 4))
        self.assertTrue(records)
        self.assertEqual([r.identity for r in records if not r.passed], [])

    def test_bosonic_recurrences_half_integer_top(self):
        records = vp.verify_bosonic_recurrences(Fraction(5, 2), L_range=range(0, 4))
        self.assertEqual([r.identity for r in records if not r.passed], [])

    def test_bosonic_recurrences_names(self):
        suite = vp.BosonicRecurrences()
        records = suite.vanishing(3, [1], [2])
        self.assertEqual([r.identity for r in records], ["bosonic.y_vanishes_at_b0", "bosonic.y_cancels_past_band"])
        self.assertTrue(suite.passed)

    def test_bosonic_recurrences_sweep_lengths(self):
        tasks = list(vp.BosonicRecurrences().tasks(vp.SweepConfig(suite="recurrence")))
        self.assertTrue(tasks)
        for task in tasks:
            self.assertEqual(task.kwargs["L_values"], list(range(0, 9)))
        suite = vp.BosonicRecurrences()
        records = suite.y_recurrences(2, [0, 1], [1, 2], list(range(-1, 5)), [8])
        self.assertTrue(records)
        self.assertTrue(all(record.indices["L"] == 8 for record in records))
        self.assertTrue(suite.passed)


class BosonicLimitsTestCase(unittest.TestCase):
    def test_bosonic_limits_y(self):
        records = vp.y_limits_check(2, 1, 1, order=ORDER)
        self.assertEqual(len(records), 2)
        self.assertTrue(all(r.passed for r in records))

    def test_bosonic_limits_abf(self):
        records = vp.abf_limit_check(3, 2, 2, 1, 1, order=ORDER)
        self.assertTrue(records[0].passed)
        records = vp.abf_limit_check(4, 1, 3, 0, 1, order=4)
        self.assertTrue(records[0].passed)

    def test_bosonic_limits_half_lattice(self):
        records = vp.half_limits_check(3, 1, 2, order=4)
        self.assertEqual(len(records), 4)
        self.assertTrue(all(r.passed for r in records))
        records = vp.half_limits_check(Fraction(5, 2), 2, 1, order=4)
        self.assertEqual(len(records), 3)
        self.assertTrue(all(r.passed for r in records))

    def test_bosonic_limits_pair_needs_b(self):
        with self.assertRaises(vp.InvalidParametersError):
            vp.hl_character_pair(Fraction(5, 2), 1, 1, ORDER)
