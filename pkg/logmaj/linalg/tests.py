## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""tests -- unit tests"""

import math, unittest
import numpy as np
from numpy.testing import assert_allclose
from .. import avro
from ..randgen import Stream, GenSpec, random_matrix
from . import *
from .means import MeanParams, geometric_mean_t, generalized_mean_rt, natural_natural

def hermitian(n, rng):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (z + z.conj().T) / 2

def positive(n, rng, floor=0.1):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return z @ z.conj().T + floor * np.eye(n)

def sqrt2(m):
    """Closed-form square root of a 2 x 2 positive definite matrix."""

    root_det = math.sqrt(np.linalg.det(m).real)
    return (m + root_det * np.eye(2)) / math.sqrt(np.trace(m).real + 2 * root_det)

def close(a, b, tol):
    a = getattr(a, 'entries', a)
    b = getattr(b, 'entries', b)
    return np.linalg.norm(a - b) <= tol * max(np.linalg.norm(b), 1.0)

class TestJacobi(unittest.TestCase):

    def test_eigenvalues(self):
        rng = np.random.default_rng(1)
        for n in (1, 2, 3, 5, 8, 16):
            m = hermitian(n, rng)
            (values, vectors) = jacobi.eigh(m)
            self.assertTrue(np.allclose(values, np.linalg.eigvalsh(m)[::-1], atol=1e-12))
            self.assertTrue(np.all(np.diff(values) <= 0))
            self.assertTrue(np.allclose(vectors.conj().T @ vectors, np.eye(n), atol=1e-12))
            self.assertTrue(np.allclose((vectors * values) @ vectors.conj().T, m, atol=1e-12))

    def test_diagonal(self):
        (values, vectors) = jacobi.eigh(np.diag([1.0, 3.0, 2.0]))
        self.assertEqual(values.tolist(), [3.0, 2.0, 1.0])

    def test_zero(self):
        (values, _) = jacobi.eigh(np.zeros((3, 3)))
        self.assertEqual(values.tolist(), [0.0, 0.0, 0.0])

    def test_non_convergence(self):
        m = hermitian(4, np.random.default_rng(2))
        self.assertRaises(NonConvergence, lambda: jacobi.eigh(m, max_sweeps=0))

    def test_singular_values(self):
        rng = np.random.default_rng(3)
        for n in (1, 2, 4, 7):
            x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            self.assertTrue(np.allclose(jacobi.svd_values(x), np.linalg.svd(x, compute_uv=False),
                                        rtol=1e-12, atol=1e-13))

    def test_singular_values_rank_deficient(self):
        x = np.outer([1.0, 2.0, 3.0], [1.0, 0.0, -1.0])
        values = jacobi.svd_values(x)
        self.assertAlmostEqual(values[0], math.sqrt(14.0) * math.sqrt(2.0), places=12)
        self.assertTrue(np.all(values[1:] < 1e-12))

    def test_reconstruction(self):
        root = Stream(1, 'jacobi', 'reconstruct')
        for trial in range(1000):
            n = 1 + trial % 8
            m = random_matrix(GenSpec(dim=n, kind='hermitian'), root.split(trial)).entries
            (values, vectors) = jacobi.eigh(m)
            size = np.linalg.norm(m)
            self.assertLessEqual(np.linalg.norm(vectors.conj().T @ vectors - np.eye(n)), 1e-12 * n)
            self.assertLessEqual(np.linalg.norm((vectors * values) @ vectors.conj().T - m), 1e-12 * n * size)
            self.assertLessEqual(abs(np.sum(values) - np.trace(m).real), 1e-12 * size)

    def test_extreme_scales(self):
        assert_allclose(jacobi.svd_values(np.diag([1e200, 1e200])), [1e200, 1e200], rtol=1e-14)
        assert_allclose(jacobi.svd_values(np.diag([1e-200, 3e-200])), [3e-200, 1e-200], rtol=1e-14)

        rng = np.random.default_rng(9)
        x = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        h = hermitian(4, rng)
        for scale in (1e200, 1e-200):
            assert_allclose(jacobi.svd_values(scale * x), scale * jacobi.svd_values(x), rtol=1e-12)
            assert_allclose(jacobi.eigh(scale * h)[0], scale * jacobi.eigh(h)[0],
                            rtol=1e-12, atol=1e-12 * scale * np.max(np.abs(h)))

class TestMatrix(unittest.TestCase):

    def test_shapes(self):
        self.assertRaises(UnsupportedShape, lambda: ComplexMatrix(np.zeros((2, 3))))
        self.assertRaises(UnsupportedShape, lambda: ComplexMatrix(np.zeros((0, 0))))
        self.assertRaises(UnsupportedShape, lambda: ComplexMatrix(np.eye(MAX_DIM + 1)))
        self.assertRaises(NonFinite, lambda: ComplexMatrix([[1.0, float('nan')], [0.0, 1.0]]))

    def test_read_only(self):
        m = ComplexMatrix(np.eye(2))
        self.assertRaises(ValueError, lambda: m.entries.__setitem__((0, 0), 2.0))

    def test_hermitian(self):
        self.assertRaises(NotHermitian, lambda: HermitianMatrix([[1.0, 2.0], [0.0, 1.0]]))
        h = HermitianMatrix([[1.0, 1j], [-1j, 1.0]])
        assert_allclose(h.eigenvalues.values, [2.0, 0.0], atol=1e-12)

    def test_positive(self):
        self.assertRaises(NotPositive, lambda: PsdMatrix([[1.0, 0.0], [0.0, -1.0]]))
        self.assertRaises(NotPositive, lambda: PsdMatrix(-np.eye(2)))
        p = PsdMatrix(np.diag([2.0, 1e-20, 0.0]))
        self.assertEqual((p.rank, p.definite), (1, False))
        self.assertEqual(p.decomposition.values.values.tolist(), [2.0, 0.0, 0.0])
        self.assertTrue(PsdMatrix(np.eye(3)).definite)

    def test_reuse_decomposition(self):
        h = HermitianMatrix(positive(3, np.random.default_rng(4)))
        p = PsdMatrix(h)
        self.assertIs(p.decomposition.vectors, h.decomposition.vectors)

    def test_json(self):
        p = PsdMatrix(positive(3, np.random.default_rng(5)))
        data = avro.dumps(p)
        restored = avro.loads(data, 'logmaj.Matrix')
        self.assertIsInstance(restored, ComplexMatrix)
        self.assertEqual(restored.digest(), p.digest())
        self.assertEqual(avro.dumps(PsdMatrix(restored)), data)
        avro.validate(p, 'logmaj.Matrix')

    def test_bare_reals(self):
        m = load_matrix({'n': 2, 'entries': [[4, 0], [0, [1, 0]]]})
        self.assertTrue(np.array_equal(m.entries, np.diag([4.0, 1.0])))
        self.assertRaises(DimMismatch, lambda: load_matrix({'n': 3, 'entries': [[1]]}))

    def test_spectrum(self):
        s = Spectrum([1.0, 3.0, 2.0])
        self.assertEqual(list(s), [3.0, 2.0, 1.0])
        self.assertEqual(list(s ** 2), [9.0, 4.0, 1.0])
        self.assertEqual(list(Spectrum([4.0, -1e-14]) ** 0.5), [2.0, 0.0])
        self.assertRaises(ValueError, lambda: Spectrum([1.0, -1.0]) ** 0.5)
        self.assertEqual(list(Spectrum([1.0, -2.0]) ** 2), [4.0, 1.0])
        self.assertEqual(list(abs(Spectrum([1.0, -2.0]))), [2.0, 1.0])
        self.assertEqual(avro.dumps(2 * s), '[6.0, 4.0, 2.0]')

class TestCalculus(unittest.TestCase):

    def setUp(self):
        rng = np.random.default_rng(6)
        self.a = PsdMatrix(positive(4, rng))
        self.b = PsdMatrix(positive(4, rng))

    def test_power(self):
        root = matrix_power(self.a, 0.5)
        self.assertTrue(close(root.entries @ root.entries, self.a, 1e-12))
        inverse = matrix_power(self.a, -1)
        self.assertTrue(close(inverse.entries @ self.a.entries, np.eye(4), 1e-10))
        self.assertTrue(np.array_equal(matrix_power(self.a, 0).entries, np.eye(4)))
        self.assertIs(matrix_power(self.a, 1), self.a)

    def test_eig_hermitian(self):
        (values, vectors) = eig_hermitian(HermitianMatrix([[2.0, 1j], [-1j, 2.0]]))
        assert_allclose(values.values, [3.0, 1.0], rtol=1e-12)
        (values, _) = eig_hermitian(HermitianMatrix([[2.0, 1.0], [1.0, 2.0]]))
        assert_allclose(values.values, [3.0, 1.0], rtol=1e-12)
        (values, _) = eig_hermitian(HermitianMatrix(np.diag([3.0, 1.0, 2.0])))
        self.assertEqual(values.values.tolist(), [3.0, 2.0, 1.0])

    def test_power_oracle(self):
        m = np.array([[2.0, 1.0], [1.0, 1.0]])
        self.assertTrue(close(matrix_power(PsdMatrix(m), 0.5), sqrt2(m), 1e-10))

    def test_square_roots(self):
        root = Stream(2, 'calculus', 'sqrt')
        for trial in range(100):
            m = random_matrix(GenSpec(dim=2, kind='pd', cond_target=100.0), root.split(trial))
            self.assertTrue(close(matrix_power(m, 0.5), sqrt2(m.entries), 1e-10))

    def test_power_multiplicative(self):
        root = Stream(3, 'calculus', 'power')
        for trial in range(100):
            stream = root.split(trial)
            a = random_matrix(GenSpec(dim=2 + trial % 4, kind='pd', cond_target=10.0), stream)
            (s, t) = stream.split('exponents').generator().uniform(-2.0, 2.0, 2)
            self.assertTrue(close(matrix_power(matrix_power(a, s), t), matrix_power(a, s * t), 1e-10))

    def test_product_symmetric(self):
        root = Stream(4, 'calculus', 'product')
        for trial in range(100):
            spec = GenSpec(dim=2 + trial % 7, kind='pd', cond_target=1000.0)
            a = random_matrix(spec, root.split(trial, 'A'))
            b = random_matrix(spec, root.split(trial, 'B'))
            ab = eigenvalues_of_product(a, b).values
            assert_allclose(eigenvalues_of_product(b, a).values, ab, rtol=0, atol=1e-10 * ab[0])

    def test_product_oracle(self):
        values = eigenvalues_of_product(PsdMatrix([[2.0, 1.0], [1.0, 1.0]]), PsdMatrix(np.diag([1.0, 2.0])))
        assert_allclose(values.values, [2 + math.sqrt(2), 2 - math.sqrt(2)], rtol=1e-12)
        assert_allclose(eigenvalues_of_product(np.diag([1.0, 2.0]), np.diag([3.0, 4.0])).values, [8.0, 3.0], rtol=1e-14)

    def test_singular_power(self):
        p = PsdMatrix(np.diag([4.0, 0.0]))
        self.assertTrue(np.allclose(matrix_power(p, 0.5).entries, np.diag([2.0, 0.0])))
        self.assertRaises(SingularMatrix, lambda: matrix_power(p, -0.5))

    def test_hermitian_power(self):
        h = HermitianMatrix(np.diag([2.0, -1.0]))
        self.assertTrue(np.allclose(hermitian_power(h, 3).entries, np.diag([8.0, -1.0])))
        self.assertRaises(ValueError, lambda: hermitian_power(h, 0.5))

    def test_product_eigenvalues(self):
        expected = np.sort(np.linalg.eigvals(self.a.entries @ self.b.entries).real)[::-1]
        self.assertTrue(np.allclose(eigenvalues_of_product(self.a, self.b).values, expected, rtol=1e-10))

    def test_det(self):
        self.assertAlmostEqual(float(det(self.a)), np.linalg.det(self.a.entries).real,
                               delta=1e-10 * abs(np.linalg.det(self.a.entries)))
        x = ComplexMatrix(self.a.entries @ self.b.entries + 1j * np.eye(4))
        self.assertTrue(abs(complex(det(x)) - np.linalg.det(x.entries)) <= 1e-10 * abs(np.linalg.det(x.entries)))
        self.assertEqual(det(ComplexMatrix(np.zeros((2, 2)))).log(), float('-inf'))

    def test_det_range(self):
        huge = PsdMatrix(np.eye(40) * 1e300 / 1e292)
        self.assertAlmostEqual(det(huge).log(), 40 * math.log(1e8), places=8)

    def test_misc(self):
        self.assertAlmostEqual(trace(self.a), np.trace(self.a.entries).real)
        self.assertIs(adjoint(self.a), self.a)
        self.assertEqual(list(hadamard(Spectrum([3.0, 2.0]), Spectrum([2.0, 1.0]))), [6.0, 2.0])
        self.assertRaises(DimMismatch, lambda: hadamard(Spectrum([1.0]), Spectrum([1.0, 2.0])))
        self.assertRaises(DimMismatch, lambda: matmul(self.a, identity(2)))

class TestWords(unittest.TestCase):

    def setUp(self):
        rng = np.random.default_rng(7)
        self.a = PsdMatrix(positive(3, rng))
        self.b = PsdMatrix(positive(3, rng))
        self.h = HermitianMatrix(hermitian(3, rng))
        (self.A, self.B, self.H) = (Word.atom(self.a), Word.atom(self.b), Word.atom(self.h))

    def test_merge(self):
        word = self.A ** 0.5 * self.A ** 0.5 * self.B
        self.assertEqual(len(word.factors), 2)
        self.assertEqual(word.factors[0].exponent, 1.0)
        self.assertEqual(len((self.A * self.A ** -1).factors), 0)

    def test_palindrome(self):
        self.assertTrue((self.A ** 0.5 * self.B * self.A ** 0.5).is_palindrome)
        self.assertFalse((self.A * self.B).is_palindrome)
        self.assertIsInstance((self.A * self.H * self.A).matrix(), HermitianMatrix)

    def test_real_eigenvalues(self):
        expected = np.sort(np.linalg.eigvals(self.a.entries @ self.b.entries).real)[::-1]
        self.assertTrue(np.allclose(real_eigenvalues_general(self.A * self.B).values, expected, rtol=1e-10))

    def test_cyclic(self):
        word = self.A ** 2 * self.H * self.A ** -1 * self.H
        expected = np.linalg.eigvals(word.matrix().entries)
        self.assertTrue(np.max(np.abs(expected.imag)) < 1e-8)
        self.assertTrue(np.allclose(real_eigenvalues_general(word).values,
                                    np.sort(expected.real)[::-1], rtol=1e-8,
                                    atol=1e-8 * np.max(np.abs(expected))))

    def test_unsupported(self):
        c = Word.atom(ComplexMatrix(self.a.entries @ self.b.entries))
        self.assertRaises(UnsupportedShape, lambda: real_eigenvalues_general(c * self.A))
        moduli = eigenvalue_moduli(c * self.A)
        expected = np.sort(np.abs(np.linalg.eigvals(self.a.entries @ self.b.entries @ self.a.entries)))[::-1]
        self.assertTrue(np.allclose(moduli.values, expected, rtol=1e-10))

    def test_fractional_power_of_product(self):
        word = (self.A ** 0.5 * self.B * self.A ** 0.5) ** 0.5
        m = (self.A ** 0.5 * self.B * self.A ** 0.5).matrix().entries
        root = word.matrix().entries
        self.assertTrue(close(root @ root, m, 1e-10))

    def test_sums(self):
        self.assertIsInstance((self.A + self.B).matrix(), PsdMatrix)
        self.assertIsInstance((self.A - 100 * self.B).matrix(), HermitianMatrix)
        self.assertNotIsInstance((self.A - 100 * self.B).matrix(), PsdMatrix)
        cross = self.A ** 0.5 * self.B ** 0.5 + self.B ** 0.5 * self.A ** 0.5
        self.assertIsInstance(cross.matrix(), HermitianMatrix)
        self.assertNotIsInstance((self.A * self.B).matrix(), HermitianMatrix)

    def test_scale(self):
        word = 2 * self.A / 4
        self.assertTrue(close(word.matrix(), 0.5 * self.a.entries, 1e-15))
        self.assertTrue(close((word ** 2).matrix(), 0.25 * self.a.entries @ self.a.entries, 1e-12))
        self.assertRaises(NotPositive, lambda: (-self.A) ** 0.5)
        self.assertTrue(np.array_equal((0 * self.A).matrix().entries, np.zeros((3, 3))))

    def test_identity(self):
        word = Word.identity(3)
        self.assertTrue(np.array_equal(word.matrix().entries, np.eye(3)))
        self.assertRaises(DimMismatch, lambda: word * Word.identity(2))

class TestMeans(unittest.TestCase):

    def setUp(self):
        rng = np.random.default_rng(8)
        self.a = PsdMatrix(positive(3, rng))
        self.b = PsdMatrix(positive(3, rng))

    def test_commuting(self):
        (a, b) = (PsdMatrix(np.diag([1.0, 4.0])), PsdMatrix(np.diag([9.0, 1.0])))
        self.assertTrue(close(geometric_mean_t(a, b, 0.5), np.diag([3.0, 2.0]), 1e-12))
        self.assertTrue(close(generalized_mean_rt(a, b, 2.0, 0.5), np.diag([3.0, 8.0]), 1e-12))
        self.assertTrue(close(natural_natural(a, b), np.diag([3.0, 2.0]), 1e-12))

    def test_commuting_closed_forms(self):
        root = Stream(5, 'means', 'commuting')
        for trial in range(100):
            rng = root.split(trial).generator()
            n = 2 + trial % 3
            (x, y) = np.exp(rng.uniform(-math.log(10.0), math.log(10.0), (2, n)))
            (t, r) = (rng.uniform(0.0, 1.0), rng.uniform(-2.0, 2.0))
            (a, b) = (PsdMatrix(np.diag(x)), PsdMatrix(np.diag(y)))
            self.assertTrue(close(geometric_mean_t(a, b, t), np.diag(x ** (1 - t) * y ** t), 1e-12))
            self.assertTrue(close(generalized_mean_rt(a, b, r, t), np.diag(x ** (r - t) * y ** t), 1e-12))
            self.assertTrue(close(natural_natural(a, b), np.diag(np.sqrt(x * y)), 1e-12))

    def test_trivial(self):
        self.assertTrue(close(geometric_mean_t(self.a, self.a, 0.3), self.a, 1e-12))
        self.assertTrue(close(geometric_mean_t(identity(3), self.b, 0.3), matrix_power(self.b, 0.3), 1e-12))
        self.assertTrue(close(geometric_mean_t(self.a, self.b, 0.0), self.a, 1e-12))
        self.assertTrue(close(geometric_mean_t(self.a, self.b, 1.0), self.b, 1e-10))
        self.assertTrue(close(generalized_mean_rt(self.a, self.b, 1.7, 0.0), matrix_power(self.a, 1.7), 1e-12))
        self.assertTrue(close(natural_natural(self.a, self.a), self.a, 1e-12))

    def test_symmetry(self):
        for t in (0.0, 0.25, 0.5, 0.9):
            self.assertTrue(close(geometric_mean_t(self.a, self.b, t),
                                  geometric_mean_t(self.b, self.a, 1 - t), 1e-10))

    def test_det(self):
        t = 0.3
        expected = (1 - t) * det(self.a).log() + t * det(self.b).log()
        self.assertAlmostEqual(det(geometric_mean_t(self.a, self.b, t)).log(), expected, delta=1e-9 * abs(expected) + 1e-12)

    def test_natural_oracle(self):
        m = np.array([[2.0, 1.0], [1.0, 1.0]])
        root = sqrt2(m)
        expected = root @ sqrt2(np.linalg.inv(m)) @ root
        self.assertTrue(close(natural_natural(PsdMatrix(m), identity(2)), expected, 1e-10))

    def test_singular(self):
        p = PsdMatrix(np.diag([1.0, 0.0]))
        self.assertRaises(SingularMatrix, lambda: geometric_mean_t(p, identity(2), 0.5))
        self.assertRaises(SingularMatrix, lambda: natural_natural(identity(2), p))
        self.assertRaises(ValueError, lambda: MeanParams(epsilon=-1.0))

    def test_limit(self):
        p = PsdMatrix(np.diag([1.0, 0.0]))
        mean = means.evaluate('gmean', p, p, MeanParams(t=0.5))
        self.assertTrue(close(mean, p.entries, 1e-9))
        self.assertTrue(close(means.evaluate('gmean', p, identity(2), MeanParams(t=0.0)), p.entries, 1e-9))

    def test_limit_fails(self):
        p = PsdMatrix(np.diag([1.0, 0.0]))
        self.assertRaises(NonConvergedLimit, lambda: means.evaluate('gmean', p, identity(2), MeanParams(t=0.5)))

    def test_evaluate(self):
        direct = means.evaluate('rmean', self.a, self.b, MeanParams(t=0.4, r=-0.5))
        self.assertTrue(close(direct, generalized_mean_rt(self.a, self.b, -0.5, 0.4), 0.0))
        self.assertTrue(MeanParams(t=1.5).formal)
        self.assertFalse(MeanParams(t=1.0).formal)

    def test_regularize(self):
        shifted = means.regularize(self.a, 0.5)
        self.assertTrue(close(shifted, self.a.entries + 0.5 * np.eye(3), 1e-12))

    def test_lin(self):
        values = real_eigenvalues_general(Word.atom(geometric_mean_t(self.a, self.b)))
        bound = real_eigenvalues_general(Word.atom(natural_natural(self.a, self.b)))
        self.assertTrue(np.all(np.cumsum(np.log(bound.values)) - np.cumsum(np.log(values.values)) >= -1e-9))
