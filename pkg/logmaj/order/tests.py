## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""tests -- unit tests"""

import math, unittest
import numpy as np
from numpy.testing import assert_allclose
from ..linalg import PsdMatrix, ComplexMatrix, NotPositive, DimMismatch, singular_values
from ..randgen import Stream, GenSpec, random_matrix, unitary
from . import *

LOG2 = math.log(2.0)

class TestWeak(unittest.TestCase):

    def test_equal(self):
        verdict = weak_log_majorizes((2, 1), (2, 1))
        self.assertTrue(verdict.holds)
        assert_allclose(verdict.k_margins, [0.0, 0.0], atol=1e-15)
        self.assertEqual(verdict.kind, 'weak_log')
        self.assertIsNone(verdict.det_gap)

    def test_strict(self):
        verdict = weak_log_majorizes((1, 1), (2, 1))
        self.assertTrue(verdict.holds)
        assert_allclose(verdict.k_margins, [LOG2, LOG2])
        assert_allclose(verdict.min_margin, LOG2)

    def test_fails_first(self):
        verdict = weak_log_majorizes((3, 1), (2, 2))
        self.assertFalse(verdict.holds)
        assert_allclose(verdict.k_margins[0], math.log(2.0 / 3.0))
        assert_allclose(verdict.min_margin, math.log(2.0 / 3.0))

    def test_unsorted(self):
        a = weak_log_majorizes((1, 3), (2, 2))
        b = weak_log_majorizes((3, 1), (2, 2))
        self.assertEqual(a.k_margins, b.k_margins)

    def test_tolerance(self):
        self.assertTrue(weak_log_majorizes((1 + 1e-12, 1), (1, 1)).holds)
        self.assertFalse(weak_log_majorizes((1 + 1e-6, 1), (1, 1)).holds)

    def test_length(self):
        self.assertRaises(LengthMismatch, lambda: weak_log_majorizes((1, 1), (1, 1, 1)))

    def test_negative(self):
        self.assertRaises(NotPositive, lambda: weak_log_majorizes((1, -0.5), (1, 1)))


class TestStrict(unittest.TestCase):

    def test_holds(self):
        verdict = log_majorizes((2, 2), (4, 1))
        self.assertTrue(verdict.holds)
        assert_allclose(verdict.k_margins, [LOG2, 0.0], atol=1e-15)
        assert_allclose(verdict.det_gap, 0.0, atol=1e-15)
        assert_allclose(verdict.min_margin, LOG2)

    def test_determinant(self):
        verdict = log_majorizes((1, 1), (2, 1))
        self.assertFalse(verdict.holds)
        assert_allclose(verdict.det_gap, LOG2)
        self.assertGreater(verdict.min_margin, 0)

    def test_single(self):
        self.assertTrue(log_majorizes((3.0, ), (3.0, )).holds)
        self.assertEqual(log_majorizes((3.0, ), (3.0, )).min_margin, 0.0)

    def test_reverse(self):
        verdict = reverse_log_majorizes((4, 1), (2, 2))
        self.assertTrue(verdict.holds)
        self.assertEqual(verdict.kind, 'reverse_log')
        self.assertFalse(reverse_log_majorizes((2, 2), (4, 1)).holds)

    def test_scale(self):
        rng = Stream(11, 'order', 'scale').generator()
        for _ in range(20):
            x = rng.uniform(0.1, 10.0, 4)
            y = rng.uniform(0.1, 10.0, 4)
            c = rng.uniform(0.1, 10.0)
            base = log_majorizes(x, y)
            scaled = log_majorizes(c * x, c * y)
            assert_allclose(scaled.k_margins, base.k_margins, atol=1e-12)


class TestZeros(unittest.TestCase):

    def test_both(self):
        verdict = log_majorizes((1, 0), (1, 0))
        self.assertTrue(verdict.holds)
        self.assertEqual(verdict.k_margins, [0.0, 0.0])

    def test_right(self):
        verdict = weak_log_majorizes((1, 1), (1, 0))
        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.k_margins[1], -math.inf)

    def test_left(self):
        verdict = weak_log_majorizes((1, 0), (1, 1))
        self.assertTrue(verdict.holds)
        self.assertEqual(verdict.k_margins[1], math.inf)

    def test_roundoff(self):
        verdict = log_majorizes((1, 1e-20), (1, 0))
        self.assertTrue(verdict.holds)
        self.assertEqual(verdict.det_gap, 0.0)


class TestNorms(unittest.TestCase):

    def test_identity(self):
        for n in (1, 2, 5):
            eye = PsdMatrix(np.eye(n))
            for p in P_SET:
                expect = 1.0 if math.isinf(p) else n ** (1.0 / p)
                assert_allclose(schatten(eye, p), expect, rtol=1e-12)

    def test_diagonal(self):
        m = np.diag([3.0, 4.0])
        assert_allclose(schatten(m, 2), 5.0, rtol=1e-12)
        assert_allclose(schatten(m, 'inf'), 4.0, rtol=1e-12)
        assert_allclose(schatten(m, 1), 7.0, rtol=1e-12)

    def test_zero(self):
        self.assertEqual(schatten(np.zeros((2, 2)), 3), 0.0)

    def test_large_p(self):
        m = np.diag([1e200, 1e200])
        assert_allclose(schatten(m, 3), 1e200 * 2 ** (1.0 / 3), rtol=1e-12)

    def test_bad_p(self):
        self.assertRaises(InvalidP, lambda: schatten(np.eye(2), 0.5))
        self.assertRaises(InvalidP, lambda: parse_p('big'))
        self.assertEqual(parse_p('inf'), math.inf)

    def test_ky_fan(self):
        m = np.diag([3.0, 4.0])
        assert_allclose(ky_fan(m, 1), 4.0)
        assert_allclose(ky_fan(m, 2), 7.0)
        self.assertRaises(BadK, lambda: ky_fan(m, 0))
        self.assertRaises(BadK, lambda: ky_fan(m, 3))
        self.assertRaises(BadK, lambda: ky_fan(m, 1.5))

    def test_unitary_invariance(self):
        rng = Stream(3, 'order', 'unitary').generator()
        for trial in range(1000):
            n = 2 + trial % 5
            x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            (u, v) = (unitary(n, rng), unitary(n, rng))
            (s, moved) = (singular_values(x), singular_values(u @ x @ v))
            for p in P_SET:
                assert_allclose(schatten(moved, p), schatten(s, p), rtol=1e-10)
            for k in range(1, n + 1):
                assert_allclose(ky_fan(moved, k), ky_fan(s, k), rtol=1e-10)

    def test_triangle(self):
        rng = Stream(4, 'order', 'triangle').generator()
        for _ in range(20):
            x = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
            y = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
            for p in P_SET:
                self.assertLessEqual(schatten(x + y, p), (schatten(x, p) + schatten(y, p)) * (1 + 1e-12))

    def test_monotone(self):
        rng = Stream(5, 'order', 'monotone').generator()
        x = rng.standard_normal((4, 4))
        for (p, q) in zip(P_SET, P_SET[1:]):
            self.assertGreaterEqual(schatten(x, p) * (1 + 1e-12), schatten(x, q))


class TestFan(unittest.TestCase):

    def test_examples(self):
        verdict = fan_dominates(np.eye(2), np.diag([2.0, 0.0]))
        self.assertTrue(verdict.holds)
        assert_allclose(verdict.gaps, [1.0, 0.0], atol=1e-12)
        self.assertFalse(fan_dominates(np.diag([2.0, 0.0]), np.eye(2)).holds)

    def test_mismatch(self):
        self.assertRaises(DimMismatch, lambda: fan_dominates(np.eye(2), np.eye(3)))

    def test_implies_norms(self):
        root = Stream(6, 'order', 'fan')
        for trial in range(1000):
            spec = GenSpec(dim=2 + trial % 4, kind='psd', rank=1 + trial % 2, cond_target=100.0)
            a = random_matrix(spec, root.split(trial, 'A'))
            b = random_matrix(spec, root.split(trial, 'B'))
            (x, y) = (a, ComplexMatrix(a.entries + b.entries))
            self.assertTrue(fan_dominates(x, y).holds)
            for p in P_SET:
                self.assertLessEqual(schatten(x, p), schatten(y, p) * (1 + 1e-9))
