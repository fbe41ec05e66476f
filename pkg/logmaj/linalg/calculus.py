## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""calculus -- spectral functions, products and determinants"""

import math
from collections import namedtuple
import numpy as np
from . import jacobi
from .errors import *
from .matrix import ComplexMatrix, HermitianMatrix, PsdMatrix, Spectrum, identity

__all__ = (
    'eig_hermitian', 'matrix_power', 'hermitian_power', 'singular_values',
    'eigenvalues_of_product', 'det', 'Determinant', 'matmul', 'adjoint',
    'hadamard', 'trace', 'as_psd', 'as_hermitian'
)


### Coercion

def as_hermitian(m):
    if isinstance(m, HermitianMatrix):
        return m
    return HermitianMatrix(m)

def as_psd(m):
    if isinstance(m, PsdMatrix):
        return m
    return PsdMatrix(m)


### Spectral Functions

def eig_hermitian(h):
    """Eigenvalues (decreasing) and eigenvectors of a Hermitian
    matrix."""

    return as_hermitian(h).decomposition

def matrix_power(a, t):
    """The principal power a^t of a positive semidefinite matrix.

    A zero power is the exact identity.  Negative powers need a
    definite matrix; positive powers of a singular one map its zero
    eigenvalues to zero."""

    a = as_psd(a)
    t = float(t)
    if t == 0.0:
        return identity(a.dim)
    elif t == 1.0:
        return a
    elif t < 0 and not a.definite:
        raise SingularMatrix('Power %g of a matrix with rank %d < %d.' % (t, a.rank, a.dim))

    (values, vectors) = a.decomposition
    return PsdMatrix._from_spectrum(values.values ** t, vectors)

def hermitian_power(h, k):
    """An integer power of a Hermitian matrix."""

    if int(k) != k:
        raise ValueError('Hermitian matrices only take integer powers, not %r.' % k)
    elif isinstance(h, PsdMatrix):
        return matrix_power(h, k)

    h = as_hermitian(h)
    k = int(k)
    if k == 0:
        return identity(h.dim)
    (values, vectors) = h.decomposition
    if k < 0 and np.any(values.values == 0.0):
        raise SingularMatrix('Negative power of a singular Hermitian matrix.')
    return HermitianMatrix._from_spectrum(values.values ** k, vectors)

def singular_values(x):
    """Singular values, decreasing."""

    return Spectrum(jacobi.svd_values(getattr(x, 'entries', x)), sort=False)

def eigenvalues_of_product(a, b):
    """The eigenvalues of AB for positive semidefinite A and B,
    computed as those of the congruent A^(1/2) B A^(1/2).  Tiny
    negative round-off is clamped to zero."""

    a = as_psd(a)
    b = as_psd(b)
    if a.dim != b.dim:
        raise DimMismatch('Dimensions %d and %d.' % (a.dim, b.dim))
    root = matrix_power(a, 0.5).entries
    values = jacobi.eigh(root @ b.entries @ root)[0]
    return Spectrum(np.maximum(values, 0.0), sort=False)


### Determinants

class Determinant(namedtuple('Determinant', 'mantissa exponent')):
    """A determinant kept as mantissa * 2^exponent so products of many
    eigenvalues neither overflow nor underflow.  The mantissa may be
    complex."""

    __slots__ = ()

    def __complex__(self):
        return complex(self.mantissa) * 2.0 ** self.exponent

    def __float__(self):
        return math.ldexp(complex(self.mantissa).real, self.exponent)

    def log(self):
        """log |det|; -inf for a singular matrix."""

        size = abs(self.mantissa)
        if size == 0:
            return float('-inf')
        return math.log(size) + self.exponent * math.log(2.0)

def det(m):
    """The determinant of a matrix.  Hermitian matrices multiply their
    eigenvalues; anything else is factored with partial pivoting."""

    if isinstance(m, HermitianMatrix):
        return product(m.decomposition.values.values)
    return product(lu_diagonal(getattr(m, 'entries', m)))

def lu_diagonal(entries):
    a = np.array(entries, dtype=complex)
    n = a.shape[0]
    sign = 1.0
    for k in range(n):
        pivot = k + int(np.argmax(np.abs(a[k:, k])))
        if a[pivot, k] == 0:
            return np.zeros(n, dtype=complex)
        if pivot != k:
            a[[k, pivot]] = a[[pivot, k]]
            sign = -sign
        a[k + 1:, k:] -= np.outer(a[k + 1:, k] / a[k, k], a[k, k:])
    diagonal = np.diag(a).copy()
    diagonal[0] *= sign
    return diagonal

def product(values):
    (mantissa, exponent, phase) = (1.0, 0, complex(1.0))
    for value in values:
        size = abs(value)
        if size == 0:
            return Determinant(0.0, 0)
        (f, e) = math.frexp(size)
        (mantissa, exponent) = (mantissa * f, exponent + e)
        (mantissa, shift) = math.frexp(mantissa)
        exponent += shift
        phase *= value / size
    if abs(phase.imag) <= 1e-15 * abs(phase):
        return Determinant(mantissa * phase.real, exponent)
    return Determinant(mantissa * phase, exponent)


### Products

def matmul(a, b):
    if a.dim != b.dim:
        raise DimMismatch('Dimensions %d and %d.' % (a.dim, b.dim))
    return ComplexMatrix(a.entries @ b.entries)

def adjoint(m):
    if isinstance(m, HermitianMatrix):
        return m
    return ComplexMatrix(m.entries.conj().T)

def hadamard(x, y):
    """Entrywise product of two spectra."""

    if len(x) != len(y):
        raise DimMismatch('Spectra of lengths %d and %d.' % (len(x), len(y)))
    return Spectrum(np.asarray(x.values) * np.asarray(y.values))

def trace(m):
    value = complex(np.trace(getattr(m, 'entries', m)))
    if value.imag == 0.0:
        return value.real
    return value
