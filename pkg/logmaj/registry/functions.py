## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""functions -- matrix functions available in catalog expressions

Matrices travel through expressions as linalg.Word values; spectra
as linalg.Spectrum."""

import numpy as np
from ..linalg import (
    Word, Spectrum, ComplexMatrix, DimMismatch, UnsupportedShape, classify,
    singular_values, real_eigenvalues_general, eigenvalue_moduli, trace, means
)
from ..linalg import hadamard as _hadamard

__all__ = (
    'sv', 'lam', 'modlam', 'gmean', 'rmean', 'nn', 'tr', 'lmax', 'block',
    'corner', 'union', 'hadamard'
)


### Spectra

def sv(w):
    return singular_values(word(w).matrix())

def lam(w):
    return real_eigenvalues_general(word(w))

def modlam(w):
    return eigenvalue_moduli(word(w))

def union(x, y):
    """The multiset union of two spectra."""

    return Spectrum(np.concatenate((x.values, y.values)))

def hadamard(x, y):
    return _hadamard(x, y)


### Means

def gmean(a, b, t=0.5):
    return mean('gmean', a, b, t=t)

def rmean(a, b, r, t):
    return mean('rmean', a, b, r=r, t=t)

def nn(a, b):
    return mean('nn', a, b)

def mean(name, a, b, **params):
    result = means.evaluate(name, word(a).psd(), word(b).psd(), means.MeanParams(**params))
    return Word.atom(result)


### Scalars

def tr(w):
    value = trace(word(w).matrix())
    if isinstance(value, complex):
        raise UnsupportedShape('Trace %r is not real.' % value)
    return value

def lmax(x):
    """The largest entry of a spectrum, or the largest eigenvalue of a
    word with a real spectrum."""

    if isinstance(x, Spectrum):
        return x[0]
    return lam(x)[0]


### Blocks

def block(p, q, r, s):
    """[[P, Q], [R, S]] as a single word."""

    (p, q, r, s) = (word(x) for x in (p, q, r, s))
    if len(set((p.dim, q.dim, r.dim, s.dim))) != 1:
        raise DimMismatch('Blocks of different dimensions.')
    data = np.block([
        [p.matrix().entries, q.matrix().entries],
        [r.matrix().entries, s.matrix().entries]
    ])
    return Word.atom(classify(data))

def corner(m, i, j):
    """The (i, j) block of a 2n x 2n word, i and j in {0, 1}."""

    m = word(m)
    if m.dim % 2:
        raise DimMismatch('Odd dimension %d has no 2 x 2 block form.' % m.dim)
    (i, j, n) = (int(i), int(j), m.dim // 2)
    return Word.atom(classify(m.matrix().entries[i * n:(i + 1) * n, j * n:(j + 1) * n]))


### Aux

def word(value):
    if isinstance(value, Word):
        return value
    elif isinstance(value, ComplexMatrix):
        return Word.atom(value)
    raise TypeError('Expected a matrix, not %r.' % (value, ))
