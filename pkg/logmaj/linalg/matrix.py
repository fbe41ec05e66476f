## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""matrix -- immutable complex, Hermitian and positive semidefinite
matrices and their spectra"""

import hashlib
from collections import namedtuple
import numpy as np
from .. import avro
from . import jacobi
from .errors import *

__all__ = (
    'ComplexMatrix', 'HermitianMatrix', 'PsdMatrix', 'Spectrum',
    'EigenDecomposition', 'identity', 'load_matrix',
    'UNIT_ROUNDOFF', 'MAX_DIM', 'PSD_TOL', 'HERMITIAN_TOL'
)

avro.require('linalg.json')

UNIT_ROUNDOFF = np.finfo(float).eps / 2

MAX_DIM = 64

## An eigenvalue below -PSD_TOL * lambda_max disqualifies a matrix
## from being positive semidefinite.
PSD_TOL = 1e-10

## Relative Frobenius size of M - M^H allowed in a Hermitian matrix.
HERMITIAN_TOL = 1e-8

EigenDecomposition = namedtuple('EigenDecomposition', 'values vectors')


### Matrices

class ComplexMatrix(object):
    """An n x n complex matrix.  The entries are a read-only ndarray;
    nothing derived from a matrix ever writes to it."""

    __kind__ = 'logmaj.Matrix'
    __slots__ = ('entries', '_digest')

    def __init__(self, entries):
        self.entries = square(getattr(entries, 'entries', entries))
        self._digest = None

    @property
    def dim(self):
        return self.entries.shape[0]

    def frobenius(self):
        return float(np.linalg.norm(self.entries))

    def digest(self):
        """A SHA-1 hex digest of the entries, used to tag report
        inputs."""

        if self._digest is None:
            self._digest = hashlib.sha1(np.ascontiguousarray(self.entries).tobytes()).hexdigest()
        return self._digest

    def __repr__(self):
        return '%s(%s)' % (type(self).__name__, np.array2string(self.entries, precision=4))

    def __eq__(self, other):
        if isinstance(other, ComplexMatrix):
            return np.array_equal(self.entries, other.entries)
        return NotImplemented

    def __ne__(self, other):
        if isinstance(other, ComplexMatrix):
            return not self == other
        return NotImplemented

    __hash__ = None

    ## Serialization

    def __json__(self):
        return {
            'n': self.dim,
            'entries': [[[z.real, z.imag] for z in row.tolist()] for row in self.entries]
        }

    @classmethod
    def __restore__(cls, state):
        return load_matrix(state, cls)

ComplexMatrix.__schema__ = avro.get_schema(ComplexMatrix.__kind__)
avro.declare(ComplexMatrix)

class HermitianMatrix(ComplexMatrix):
    """A Hermitian matrix.  The entries are symmetrized on the way in;
    a matrix that is too far from Hermitian is rejected."""

    __slots__ = ('_decomposition', )

    def __init__(self, entries, check=True):
        data = square(getattr(entries, 'entries', entries))
        if check:
            skew = np.linalg.norm(data - data.conj().T)
            if skew > HERMITIAN_TOL * max(np.linalg.norm(data), np.finfo(float).tiny):
                raise NotHermitian('Skew part has relative size %g.' % (skew / np.linalg.norm(data)))
        self.entries = frozen((data + data.conj().T) / 2.0)
        self._digest = None
        self._decomposition = None
        if isinstance(entries, HermitianMatrix) and np.array_equal(entries.entries, self.entries):
            self._decomposition = entries.decomposition
        self._settle()

    @property
    def decomposition(self):
        """The cached EigenDecomposition: decreasing real eigenvalues
        and a unitary matrix of eigenvectors."""

        if self._decomposition is None:
            (values, vectors) = jacobi.eigh(self.entries)
            self._decomposition = EigenDecomposition(Spectrum(values, sort=False), frozen(vectors))
        return self._decomposition

    @property
    def eigenvalues(self):
        return self.decomposition.values

    def _settle(self):
        pass

    @classmethod
    def _from_spectrum(cls, values, vectors):
        """Build V diag(values) V^H with its decomposition already
        known.  This is only used for matrices derived from another
        decomposition (powers, shifts); inputs always go through the
        constructor."""

        values = np.asarray(values, dtype=float)
        order = np.argsort(-values, kind='stable')
        (values, vectors) = (values[order], np.asarray(vectors)[:, order])
        data = (vectors * values) @ vectors.conj().T

        obj = object.__new__(cls)
        obj.entries = frozen((data + data.conj().T) / 2.0)
        obj._digest = None
        obj._decomposition = EigenDecomposition(Spectrum(values, sort=False), frozen(vectors))
        obj._settle()
        return obj

class PsdMatrix(HermitianMatrix):
    """A positive semidefinite matrix.

    Eigenvalues below 64 n u lambda_max are treated as exact zeros in
    the cached decomposition; the entries themselves are never rebuilt,
    so a matrix reloaded from its JSON form is identical."""

    __slots__ = ('rank', 'definite')

    def _settle(self):
        (values, vectors) = self.decomposition
        data = values.values
        top = max(data[0], 0.0)
        if data[-1] < -PSD_TOL * top or (top == 0.0 and data[-1] < 0.0):
            raise NotPositive('Smallest eigenvalue %g against largest %g.' % (data[-1], data[0]))

        floor = 64 * self.dim * UNIT_ROUNDOFF * top
        clamped = np.where(data < floor, 0.0, data)
        if not np.array_equal(clamped, data):
            self._decomposition = EigenDecomposition(Spectrum(clamped, sort=False), vectors)
        self.rank = int(np.count_nonzero(clamped))
        self.definite = self.rank == self.dim

def identity(n):
    return PsdMatrix(np.eye(n))

def load_matrix(state, cls=ComplexMatrix):
    """Restore a matrix from its JSON form.  Entries may be
    [real, imaginary] pairs or bare real numbers."""

    try:
        n = int(state['n'])
        rows = state['entries']
    except (KeyError, TypeError):
        raise ValueError('Not a matrix: %r.' % (state, ))

    data = np.array([[complex(*z) if isinstance(z, (list, tuple)) else complex(z) for z in row]
                     for row in rows], dtype=complex)
    if data.shape != (n, n):
        raise DimMismatch('Matrix declares n=%d but has shape %r.' % (n, data.shape))
    return cls(data)


### Spectra

class Spectrum(object):
    """A read-only vector of real values, kept in decreasing order."""

    __slots__ = ('values', )

    def __init__(self, values, sort=True):
        data = np.array(getattr(values, 'values', values), dtype=float).reshape(-1)
        if sort:
            data = np.sort(data)[::-1].copy()
        data.flags.writeable = False
        self.values = data

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, index):
        return float(self.values[index])

    def __repr__(self):
        return 'Spectrum(%s)' % np.array2string(self.values, precision=6)

    def __eq__(self, other):
        if isinstance(other, Spectrum):
            return np.array_equal(self.values, other.values)
        return NotImplemented

    __hash__ = None

    def __json__(self):
        return self.values.tolist()

    def __abs__(self):
        return Spectrum(np.abs(self.values))

    def __mul__(self, scalar):
        return Spectrum(self.values * float(scalar))

    __rmul__ = __mul__

    def __pow__(self, p):
        """Entrywise power.  Negative values within PSD_TOL of zero are
        treated as zero; a real negative value only allows integer
        powers."""

        p = float(p)
        data = self.values
        top = np.max(np.abs(data)) if len(data) else 0.0
        data = np.where((data < 0) & (data >= -PSD_TOL * top), 0.0, data)
        if np.any(data < 0) and not p.is_integer():
            raise ValueError('Fractional power %g of a negative value.' % p)
        with np.errstate(divide='ignore'):
            return Spectrum(data ** p)


### Aux

def square(entries):
    data = np.array(entries, dtype=complex)
    if data.ndim != 2 or data.shape[0] != data.shape[1] or data.shape[0] == 0:
        raise UnsupportedShape('Expected a non-empty square matrix, not shape %r.' % (data.shape, ))
    elif data.shape[0] > MAX_DIM:
        raise UnsupportedShape('Dimension %d is above %d.' % (data.shape[0], MAX_DIM))
    elif not np.all(np.isfinite(data)):
        raise NonFinite('Matrix has non-finite entries.')
    return frozen(data)

def frozen(data):
    data.flags.writeable = False
    return data
