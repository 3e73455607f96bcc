"""
test_paths.py
~~~~~~~~~~~~~

This test suite checks the ABF and half-lattice paths of virasoro_paths:
weights, vertex words, enumeration and generating functions.

Created by the virasoro-paths developers on 2026-10-17

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details.
"""

import unittest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

import virasoro_paths as vp
from virasoro_paths.paths import (
    flag_quadruple,
    gf_abf_restricted_m,
    half_valleys_allowed,
    restricted_parameters,
    seed_value,
    valley_heights,
    with_flags,
)

"""
Constants
"""
STAIRCASE = vp.AbfPath((2, 1, 2, 3, 4), 3)
STAIRCASE_WORD = "NSS"
HALF = Fraction(1, 2)
T_VALUES = [2, Fraction(5, 2)]


def _all_paths(p, L):
    paths = []
    for a in range(1, p + 1):
        for b in range(1, p + 1):
            for e in (0, 1):
                for f in (0, 1):
                    paths.extend(vp.enumerate_abf(p, a, b, e, f, L))
    return paths


def _halves(top):
    return [Fraction(k, 2) for k in range(2, int(2 * top) + 1)]


paths = st.tuples(st.integers(min_value=2, max_value=4), st.integers(min_value=0, max_value=6)).flatmap(
    lambda pL: st.sampled_from(_all_paths(*pL))
)


class AbfPathTestCase(unittest.TestCase):
    def test_paths_staircase_weight_and_word(self):
        self.assertEqual(vp.abf_weight(STAIRCASE), vp.QExponent.of(Fraction(3, 2)))
        self.assertEqual(vp.vertex_word(STAIRCASE).symbols, STAIRCASE_WORD)
        self.assertEqual(vp.straight_count(STAIRCASE), 2)
        self.assertEqual((STAIRCASE.a, STAIRCASE.b, STAIRCASE.e, STAIRCASE.f, STAIRCASE.L), (1, 3, 0, 0, 2))

    def test_paths_rebuild_from_word(self):
        rebuilt = vp.path_from_vertex_word(vp.VertexWord(STAIRCASE_WORD), 1, 0, 3)
        self.assertEqual(rebuilt, STAIRCASE)

    def test_paths_invalid_path(self):
        with self.assertRaises(vp.InvalidPathError):
            vp.AbfPath((1, 2, 4), 4)
        with self.assertRaises(vp.InvalidPathError):
            vp.AbfPath((1, 2), 4)

    def test_paths_invalid_word(self):
        with self.assertRaises(vp.InvalidPathError):
            vp.VertexWord("")
        with self.assertRaises(vp.InvalidPathError):
            vp.VertexWord("NXS")

    def test_paths_even_valleys_zero_length(self):
        # h_{-1} = h_1 = a + 1 makes vertex 0 a valley at height a
        self.assertEqual(vp.even_valley_count(vp.AbfPath((3, 2, 3), 3)), 1)
        self.assertEqual(vp.even_valley_count(vp.AbfPath((2, 1, 2), 3)), 0)
        self.assertEqual(valley_heights(vp.AbfPath((3, 2, 3), 3)), [2])

    def test_paths_flags(self):
        quad = flag_quadruple(STAIRCASE)
        self.assertEqual(sorted(quad), [(0, 0), (0, 1), (1, 0), (1, 1)])
        for (e, f), h in quad.items():
            self.assertEqual((h.e, h.f), (e, f))
            self.assertEqual(h.heights[1:-1], STAIRCASE.heights[1:-1])
        with self.assertRaises(vp.InvalidParametersError):
            with_flags(STAIRCASE, 2, 0)

    @given(paths)
    def test_paths_word_round_trip(self, h):
        word = vp.vertex_word(h)
        self.assertEqual(vp.path_from_vertex_word(word, h.a, h.e, h.p), h)
        self.assertEqual(vp.weight_from_word(word), vp.abf_weight(h))

    @given(paths)
    def test_paths_straight_count_parity(self, h):
        self.assertEqual((vp.straight_count(h) - h.L - h.e - h.f) % 2, 0)

    @given(paths)
    def test_paths_even_valleys_by_inspection(self, h):
        evens = sum(1 for height in valley_heights(h) if height % 2 == 0)
        self.assertEqual(vp.even_valley_count(h), evens)


class AbfEnumerationTestCase(unittest.TestCase):
    def test_paths_staircase_gf(self):
        self.assertEqual(vp.enumerate_abf(3, 1, 3, 0, 0, 2), (STAIRCASE,))
        self.assertEqual(vp.gf_abf(3, 1, 3, 0, 0, 2), vp.QPoly.monomial(Fraction(3, 2)))

    def test_paths_restricted_example(self):
        expected = vp.QPoly.from_coefficients([1, 1])
        self.assertEqual(vp.gf_abf(3, 2, 2, 1, 1, 2), expected)
        self.assertEqual(vp.gf_abf_restricted(3, 2, 2, 1, 1, 2), expected)

    def test_paths_unreachable_endpoints(self):
        self.assertEqual(vp.enumerate_abf(4, 1, 2, 0, 0, 2), ())
        self.assertEqual(vp.gf_abf(4, 1, 2, 0, 0, 2), vp.QPoly.zero())

    def test_paths_invalid_band(self):
        with self.assertRaises(vp.InvalidParametersError):
            vp.enumerate_abf(3, 4, 1, 0, 0, 3)
        with self.assertRaises(vp.InvalidParametersError):
            vp.enumerate_abf(3, 1, 1, 2, 0, 2)
        with self.assertRaises(vp.InvalidParametersError):
            vp.enumerate_abf(3, 1, 1, 0, 0, -2)

    def test_paths_m_refinement_sums(self):
        for a in range(1, 5):
            for b in range(1, 5):
                total = sum((vp.gf_abf_m(4, a, b, 0, 1, 5, m) for m in range(0, 7)), vp.QPoly.zero())
                self.assertEqual(total, vp.gf_abf(4, a, b, 0, 1, 5))

    def test_paths_seed_values(self):
        self.assertEqual(seed_value(3, 2, 2, 0, 0, 0, 0), vp.QPoly.one())
        self.assertEqual(seed_value(3, 2, 2, 0, 1, 0, 1), vp.QPoly.one())
        self.assertEqual(seed_value(3, 2, 2, 0, 0, 2, 0), vp.gf_abf_m(3, 2, 2, 0, 0, 2, 0))
        self.assertEqual(seed_value(3, 2, 2, 0, 0, 2, 0), vp.QPoly.one())
        self.assertIsNone(seed_value(3, 2, 2, 0, 0, 2, 2))

    def test_paths_restricted_seeds(self):
        for p in (3, 4):
            for a in range(1, p + 1):
                for b in range(1, p + 1):
                    for e in (0, 1):
                        for f in (0, 1):
                            for L in range(0, 5):
                                for m in (0,) if L else (0, 1):
                                    expected = seed_value(p, a, b, e, f, L, m, restricted=True)
                                    self.assertEqual(gf_abf_restricted_m(p, a, b, e, f, L, m), expected)

    def test_paths_dump(self):
        self.assertEqual(vp.dump_paths(vp.enumerate_abf(3, 1, 3, 0, 0, 2)), "0 0 12/8 1 2 3\n")
        self.assertEqual(vp.dump_paths(()), "")


class HalfLatticeTestCase(unittest.TestCase):
    def test_paths_half_lattice_single_path(self):
        found = vp.enumerate_half(2, 1, 2, 0, 0, 1)
        self.assertEqual(len(found), 1)
        self.assertEqual(found[0].heights(), (Fraction(3, 2), 1, Fraction(3, 2), 2, Fraction(5, 2)))
        self.assertEqual(vp.half_weight(found[0]), vp.QExponent.of(Fraction(3, 4)))
        self.assertEqual(vp.gf_half(2, 1, 2, 0, 0, 1), vp.QPoly.monomial(Fraction(3, 4)))

    def test_paths_half_lattice_zero_length(self):
        self.assertEqual(vp.gf_half(2, 1, 1, 0, 0, 0), vp.QPoly.one())
        self.assertEqual(vp.gf_half(2, 1, HALF + 1, 0, 0, 0), vp.QPoly.zero())

    def test_paths_half_lattice_invalid(self):
        with self.assertRaises(vp.InvalidParametersError):
            vp.enumerate_half(2, 3, 1, 0, 0, 1)
        with self.assertRaises(vp.InvalidParametersError):
            vp.enumerate_half(2, Fraction(1, 3), 1, 0, 0, 1)

    def test_paths_restricted_parameters(self):
        self.assertEqual(restricted_parameters(Fraction(5, 2), 1, Fraction(3, 2), 2), (4, 1, 2, 4))

    def test_paths_half_from_restricted(self):
        restricted = vp.gf_abf_restricted(3, 2, 2, 1, 1, 2)
        self.assertEqual(restricted, vp.QPoly.from_coefficients([1, 1]))
        self.assertEqual(vp.half_from_restricted(restricted), vp.QPoly({0: 1, 4: 1}))

    def test_paths_half_lattice_valleys(self):
        for t in T_VALUES:
            for a in _halves(t):
                for b in _halves(t):
                    for L in [Fraction(k, 2) for k in range(0, 7)]:
                        for h in vp.enumerate_half(t, a, b, 0, 1, L):
                            self.assertTrue(half_valleys_allowed(h))

    def test_paths_half_lattice_rescaling(self):
        for t in T_VALUES:
            for a in _halves(t):
                for b in _halves(t):
                    for e in (0, 1):
                        for f in (0, 1):
                            for L in [Fraction(k, 2) for k in range(0, 7)]:
                                self.assertEqual(
                                    vp.gf_half(t, a, b, e, f, L), vp.gf_half_via_restricted(t, a, b, e, f, L)
                                )
