"""
test_transforms.py
~~~~~~~~~~~~~~~~~~

This test suite checks the path transforms of virasoro_paths and the
TransformChecks suite.

Created by the virasoro-paths developers on 2026-10-17

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details.
"""

import unittest

from hypothesis import given
from hypothesis import strategies as st

import virasoro_paths as vp
from virasoro_paths.transforms import refined_parities

"""
Constants
"""
ZIGZAG = vp.AbfPath((3, 2, 3, 2, 3), 3)
DILATED = vp.AbfPath((3, 2, 3, 4, 3, 2, 3), 4)
INSERTED = vp.AbfPath((3, 2, 3, 4, 3, 2, 3, 2, 3), 4)
WAVED = vp.AbfPath((3, 2, 3, 4, 3, 4, 3, 2, 3), 4)
ONE = vp.Partition((1,))
SHORT = [0, 1, 2]


def _c_domain(p, L):
    found = []
    for a in range(1, p + 1):
        for b in range(1, p + 1):
            for e in (0, 1):
                for f in (0, 1):
                    if L == 0 and e != f:
                        continue
                    found.extend(vp.enumerate_abf(p, a, b, e, f, L))
    return found


def _with_excitations(h):
    return st.integers(min_value=0, max_value=2).flatmap(
        lambda n: st.sampled_from(vp.partitions_in_box(n, h.L)).map(lambda lambda_: (h, n, lambda_))
    )


triples = (
    st.tuples(st.integers(min_value=2, max_value=3), st.integers(min_value=0, max_value=4))
    .flatmap(lambda pL: st.sampled_from(_c_domain(*pL)))
    .flatmap(_with_excitations)
)


class PartitionTestCase(unittest.TestCase):
    def test_transforms_partition_validation(self):
        with self.assertRaises(vp.InvalidParametersError):
            vp.Partition((1, 2))
        with self.assertRaises(vp.InvalidParametersError):
            vp.Partition((0, -1))
        self.assertEqual(vp.Partition.of([1, 3, 2]).parts, (3, 2, 1))

    def test_transforms_partition_padding(self):
        partition = vp.Partition((2, 0, 0))
        self.assertEqual(partition.size, 2)
        self.assertEqual(partition.padded(1), vp.Partition((2,)))
        self.assertEqual(vp.Partition(()).padded(2), vp.Partition((0, 0)))
        with self.assertRaises(vp.InvalidParametersError):
            vp.Partition((2, 1)).padded(1)

    def test_transforms_partitions_in_box(self):
        box = vp.partitions_in_box(2, 2)
        self.assertEqual(len(box), 6)
        self.assertEqual(box[0], vp.Partition((2, 2)))
        self.assertEqual(box[-1], vp.Partition((0, 0)))

    def test_transforms_partitions_in_empty_box(self):
        self.assertEqual(vp.partitions_in_box(0, -1), [vp.Partition(())])
        self.assertEqual(vp.partitions_in_box(1, -1), [])
        with self.assertRaises(vp.InvalidParametersError):
            vp.partitions_in_box(-1, 2)

    def test_transforms_decomposition_shape(self):
        with self.assertRaises(vp.DecompositionError):
            vp.CDecomposition(ZIGZAG, 2, ONE)
        with self.assertRaises(vp.DecompositionError):
            vp.CDecomposition(ZIGZAG, 1, vp.Partition((3,)))


class TransformTestCase(unittest.TestCase):
    def test_transforms_dilation(self):
        image = vp.c1_transform(ZIGZAG)
        self.assertEqual(image, DILATED)
        self.assertEqual(vp.vertex_word(image).symbols, "NSNSN")
        self.assertEqual(vp.abf_weight(image), vp.QExponent.of(2))

    def test_transforms_dilation_undefined(self):
        with self.assertRaises(vp.UndefinedTransformError):
            vp.c1_transform(vp.AbfPath((3, 2, 1), 3))

    def test_transforms_insertion(self):
        self.assertEqual(vp.c2_insert(DILATED, 0), DILATED)
        self.assertEqual(vp.c2_insert(DILATED, 1), INSERTED)
        with self.assertRaises(vp.InvalidParametersError):
            vp.c2_insert(DILATED, -1)

    def test_transforms_insertion_leaves_band(self):
        staircase = vp.AbfPath((2, 1, 2, 3, 4), 3)
        with self.assertRaises(vp.TransformError):
            vp.c2_insert(staircase, 1)

    def test_transforms_wave(self):
        waved = vp.c3_wave(INSERTED, ONE)
        self.assertEqual(waved, WAVED)
        self.assertEqual(vp.vertex_word(waved).symbols, "NSNNNSN")
        self.assertEqual(vp.abf_weight(waved), vp.QExponent.of(3))
        self.assertEqual(vp.c3_wave(INSERTED, vp.Partition((0,))), INSERTED)

    def test_transforms_wave_out_of_range(self):
        with self.assertRaises(vp.TransformError):
            vp.c3_wave(INSERTED, vp.Partition((3,)))
        with self.assertRaises(vp.TransformError):
            vp.c3_wave(INSERTED, vp.Partition((1, 1)))

    def test_transforms_composite_and_decompose(self):
        image = vp.c_transform(ZIGZAG, 1, ONE)
        self.assertEqual(image, WAVED)
        self.assertEqual(vp.c_decompose(image), vp.CDecomposition(ZIGZAG, 1, ONE))
        with self.assertRaises(vp.DecompositionError):
            vp.c_decompose(image, expected_m_of_base=1)

    def test_transforms_forward_move(self):
        self.assertEqual(vp.forward_move(vp.VertexWord("SNN"), 0), vp.VertexWord("NNS"))
        self.assertEqual(vp.forward_move(vp.VertexWord("NSNSNNN"), 3).symbols, "NSNNNSN")
        with self.assertRaises(vp.TransformError):
            vp.forward_move(vp.VertexWord("NNS"), 0)

    def test_transforms_refined_parities(self):
        self.assertEqual(refined_parities(1, 2), (0, 1))
        self.assertEqual(refined_parities(4, 3), (1, 0))

    @given(triples)
    def test_transforms_decompose_inverts_transform(self, triple):
        h, n, lambda_ = triple
        image = vp.c_transform(h, n, lambda_)
        self.assertEqual(image.p, h.p + 1)
        self.assertEqual(image.a, h.a + h.e)
        self.assertEqual(vp.straight_count(image), h.L)
        self.assertEqual(vp.c_decompose(image, vp.straight_count(h)), vp.CDecomposition(h, n, lambda_))


class TransformChecksTestCase(unittest.TestCase):
    def test_transform_checks_laws(self):
        suite = vp.TransformChecks()
        suite.dilation_laws(3, [0, 1, 2, 3])
        self.assertTrue(suite.passed)
        suite.insertion_laws(2, SHORT, [0, 1, 2])
        self.assertTrue(suite.passed)
        suite.moves(2, [1, 2], [1, 2])
        self.assertTrue(suite.passed)
        suite.round_trip(2, SHORT, [0, 1])
        self.assertTrue(suite.passed)

    def test_transform_checks_generating_functions(self):
        suite = vp.TransformChecks()
        lengths = [0, 1, 2, 3, 4]
        suite.generating_functions(2, lengths, lengths)
        self.assertTrue(suite.passed)
        suite.restricted_generating_functions(2, lengths, lengths)
        self.assertTrue(suite.passed)

    def test_transform_checks_refined_bijection(self):
        records = vp.refined_bijection_check(3, 1, 1, 0, 0, 2, 4)
        self.assertEqual(len(records), 3)
        self.assertTrue(all(record.passed for record in records))
        self.assertEqual(records[-1].identity, "bijection.refined_bijection")

    def test_transform_checks_refined_bijection_undefined(self):
        with self.assertRaises(vp.UndefinedTransformError):
            vp.refined_bijection_check(3, 1, 2, 0, 1, 0, 1)
