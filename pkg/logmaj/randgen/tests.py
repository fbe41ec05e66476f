## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""tests -- unit tests"""

import unittest
import numpy as np
from numpy.testing import assert_allclose
from ..linalg import PsdMatrix, HermitianMatrix
from . import *

class TestStream(unittest.TestCase):

    def test_reproducible(self):
        a = Stream(7, 'THM-3.1', 4, 17).generator().standard_normal(5)
        b = Stream(7, 'THM-3.1', 4, 17).generator().standard_normal(5)
        self.assertEqual(a.tolist(), b.tolist())

    def test_labels(self):
        root = Stream(7, 'THM-3.1')
        self.assertEqual(root.split(4, 17), Stream(7, 'THM-3.1', 4, 17))
        self.assertNotEqual(root.split(4, 17).key, root.split(17, 4).key)
        self.assertNotEqual(root.split('4').key, root.split(4).key)
        self.assertNotEqual(Stream(8, 'THM-3.1').key, root.key)

    def test_independent(self):
        a = Stream(1, 'x').generator().standard_normal(1000)
        b = Stream(1, 'y').generator().standard_normal(1000)
        self.assertLess(abs(np.corrcoef(a, b)[0, 1]), 0.15)

    def test_bad_label(self):
        self.assertRaises(TypeError, lambda: Stream(1, 2.5))


class TestSpec(unittest.TestCase):

    def test_defaults(self):
        spec = GenSpec(dim=3, kind='pd')
        self.assertEqual(spec.cond_target, 1e4)
        self.assertEqual(spec.scale, 1.0)
        self.assertIsNone(spec.rank)
        self.assertEqual(spec.effective_rank, 3)

    def test_invalid(self):
        bad = (
            dict(dim=0, kind='pd'),
            dict(dim=65, kind='pd'),
            dict(dim=2, kind='normal'),
            dict(dim=2, kind='pd', rank=1),
            dict(dim=2, kind='psd', rank=3),
            dict(dim=2, kind='pd', cond_target=0.5),
            dict(dim=2, kind='pd', scale=0.0),
        )
        for kw in bad:
            self.assertRaises(BadSpec, GenSpec(**kw).validate)


class TestRandom(unittest.TestCase):

    def test_identity(self):
        for c in (0.5, 1.0, 3.0):
            m = random_matrix(GenSpec(dim=2, kind='pd', cond_target=1.0, scale=c), Stream(1, 'eye', str(c)))
            self.assertIsInstance(m, PsdMatrix)
            assert_allclose(m.entries, c * np.eye(2), atol=1e-12)

    def test_rank(self):
        root = Stream(2, 'rank')
        for trial in range(20):
            m = random_matrix(GenSpec(dim=3, kind='psd', rank=2, cond_target=100.0), root.split(trial))
            self.assertEqual(m.rank, 2)
            self.assertFalse(m.definite)
            self.assertEqual(m.eigenvalues.values.tolist().count(0.0), 1)

    def test_definite(self):
        root = Stream(3, 'pd')
        for trial in range(20):
            m = random_matrix(GenSpec(dim=4, kind='pd'), root.split(trial))
            self.assertTrue(m.definite)

    def test_conditioning(self):
        root = Stream(4, 'cond')
        for cond in (10.0, 1e3, 1e6):
            for trial in range(10):
                m = random_matrix(GenSpec(dim=4, kind='pd', cond_target=cond), root.split(str(cond), trial))
                values = m.eigenvalues.values
                achieved = values[0] / values[-1]
                self.assertTrue(cond / 2 <= achieved <= 2 * cond)

    def test_scale(self):
        m = random_matrix(GenSpec(dim=3, kind='pd', cond_target=10.0, scale=5.0), Stream(5, 'scale'))
        assert_allclose(m.eigenvalues[0], 5.0, rtol=1e-10)

    def test_signs(self):
        root = Stream(6, 'signs')
        mixed = 0
        for trial in range(1000):
            m = random_matrix(GenSpec(dim=2, kind='hermitian', cond_target=10.0), root.split(trial))
            self.assertIsInstance(m, HermitianMatrix)
            values = m.eigenvalues.values
            mixed += values[0] > 0 > values[-1]
        self.assertGreaterEqual(mixed, 900)

    def test_deterministic(self):
        spec = GenSpec(dim=3, kind='hermitian')
        a = random_matrix(spec, Stream(9, 'same'))
        b = random_matrix(spec, Stream(9, 'same'))
        c = random_matrix(spec, Stream(9, 'other'))
        self.assertEqual(a, b)
        self.assertNotEqual(a, c)

    def test_unitary(self):
        q = unitary(5, Stream(10, 'q').generator())
        assert_allclose(q.conj().T @ q, np.eye(5), atol=1e-12)


class TestPerturb(unittest.TestCase):

    def test_definite(self):
        root = Stream(11, 'perturb')
        for trial in range(100):
            m = random_matrix(GenSpec(dim=3, kind='pd', cond_target=100.0), root.split(trial, 'm'))
            p = perturb(m, 0.5, root.split(trial, 'h'))
            self.assertIsInstance(p, PsdMatrix)
            self.assertTrue(p.definite)
            values = p.eigenvalues.values
            self.assertLessEqual(values[0] / values[-1], 1e4 * (1 + 1e-9))

    def test_rank(self):
        root = Stream(12, 'perturb')
        for trial in range(100):
            m = random_matrix(GenSpec(dim=4, kind='psd', rank=2), root.split(trial, 'm'))
            p = perturb(m, 1e-3, root.split(trial, 'h'))
            self.assertEqual(p.rank, 2)

    def test_hermitian(self):
        m = random_matrix(GenSpec(dim=3, kind='hermitian'), Stream(13, 'm'))
        p = perturb(m, 0.1, Stream(13, 'h'))
        self.assertIsInstance(p, HermitianMatrix)
        assert_allclose(np.linalg.norm(p.entries - m.entries), 0.1, rtol=1e-12)

    def test_zero(self):
        m = random_matrix(GenSpec(dim=3, kind='pd'), Stream(14, 'm'))
        assert_allclose(perturb(m, 0.0, Stream(14, 'h')).entries, m.entries, atol=1e-12)
        self.assertRaises(ValueError, lambda: perturb(m, -1.0, Stream(14, 'h')))
