## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""words -- lazy products of matrix powers

A Word is a scalar times a product of factors base^exponent.  Keeping
the factors symbolic lets the evaluator prove that a spectrum is real:
a palindrome of Hermitian factors is Hermitian, and a positive factor
can be split around the rest of a cyclic word.

    >>> (A ** 0.5) * B * (A ** 0.5)          # Hermitian, real spectrum
    >>> real_eigenvalues_general(A * B)      # via A^(1/2) B A^(1/2)
"""

import numbers
from collections import namedtuple
import numpy as np
from .errors import *
from .matrix import ComplexMatrix, HermitianMatrix, PsdMatrix, Spectrum, identity
from .calculus import matrix_power, hermitian_power

__all__ = (
    'Factor', 'Word', 'classify', 'real_eigenvalues_general',
    'eigenvalue_moduli'
)


### Factors

class Factor(namedtuple('Factor', 'base exponent')):
    __slots__ = ()

    def same_base(self, other):
        return (self.base is other.base
                or (type(self.base) is type(other.base)
                    and np.array_equal(self.base.entries, other.base.entries)))

    def matches(self, other):
        return self.same_base(other) and self.exponent == other.exponent

    @property
    def hermitian(self):
        return isinstance(self.base, HermitianMatrix)

    def power(self):
        """Materialize base^exponent as a matrix object."""

        (base, e) = self
        if isinstance(base, PsdMatrix):
            return matrix_power(base, e)
        elif isinstance(base, HermitianMatrix):
            return hermitian_power(base, e)
        elif int(e) != e:
            raise UnsupportedShape('Fractional power %g of a non-Hermitian matrix.' % e)
        elif e == 1:
            return base
        try:
            return ComplexMatrix(np.linalg.matrix_power(base.entries, int(e)))
        except np.linalg.LinAlgError:
            raise SingularMatrix('Negative power of a singular matrix.')


### Words

class Word(object):
    """scale * base_1^e_1 * ... * base_m^e_m"""

    __slots__ = ('factors', 'scale', 'dim', '_matrix', '_psd')

    def __init__(self, factors, scale=1.0, dim=None):
        merged = []
        for factor in factors:
            if factor.exponent == 0:
                continue
            elif merged and merged[-1].same_base(factor):
                exponent = merged.pop().exponent + factor.exponent
                if exponent != 0:
                    merged.append(Factor(factor.base, exponent))
            else:
                merged.append(factor)

        dims = set(f.base.dim for f in factors)
        if dim is not None:
            dims.add(dim)
        if len(dims) != 1:
            raise DimMismatch('Word mixes dimensions %r.' % sorted(dims))

        self.factors = tuple(merged)
        self.scale = float(scale)
        self.dim = dims.pop()
        self._matrix = None
        self._psd = None

    @classmethod
    def atom(cls, matrix):
        return cls([Factor(matrix, 1)], 1.0, matrix.dim)

    @classmethod
    def identity(cls, n):
        return cls([], 1.0, n)

    def __repr__(self):
        body = ' '.join('M%d^%g' % (f.base.dim, f.exponent) for f in self.factors) or 'I'
        return 'Word(%g * %s)' % (self.scale, body)

    ## Algebra

    def __mul__(self, other):
        if isinstance(other, Word):
            if other.dim != self.dim:
                raise DimMismatch('Dimensions %d and %d.' % (self.dim, other.dim))
            return Word(self.factors + other.factors, self.scale * other.scale, self.dim)
        elif isinstance(other, numbers.Real):
            return Word(self.factors, self.scale * other, self.dim)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Word(self.factors, self.scale * other, self.dim)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Word(self.factors, self.scale / other, self.dim)
        return NotImplemented

    def __neg__(self):
        return Word(self.factors, -self.scale, self.dim)

    def __pos__(self):
        return self

    def __add__(self, other):
        return Word.atom(classify(self.matrix().entries + dense(other, self.dim)))

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        return Word.atom(classify(self.matrix().entries - dense(other, self.dim)))

    def __rsub__(self, other):
        return Word.atom(classify(dense(other, self.dim) - self.matrix().entries))

    def __pow__(self, t):
        t = float(t)
        if t == 0.0:
            return Word.identity(self.dim)
        elif t == 1.0:
            return self

        integral = t.is_integer()
        if len(self.factors) == 1:
            (factor, ) = self.factors
            if isinstance(factor.base, PsdMatrix) or integral:
                return Word([Factor(factor.base, factor.exponent * t)], scalar_power(self.scale, t), self.dim)
        elif not self.factors:
            return Word([], scalar_power(self.scale, t), self.dim)
        elif integral and t > 0:
            return Word(self.factors * int(t), self.scale ** t, self.dim)

        return Word([Factor(self.psd(), t)], 1.0, self.dim)

    ## Materialization

    def matrix(self):
        """The product as a matrix object.  Palindromes come back as
        HermitianMatrix; a lone power keeps its own class."""

        if self._matrix is None:
            if len(self.factors) == 1 and self.scale == 1.0:
                self._matrix = self.factors[0].power()
            else:
                data = np.eye(self.dim, dtype=complex)
                for factor in self.factors:
                    data = data @ factor.power().entries
                data = self.scale * data
                if self.is_palindrome:
                    self._matrix = HermitianMatrix(data, check=False)
                else:
                    self._matrix = ComplexMatrix(data)
        return self._matrix

    def hermitian(self):
        m = self.matrix()
        if isinstance(m, HermitianMatrix):
            return m
        return HermitianMatrix(m)

    def psd(self):
        """The product as a PsdMatrix.  Raise NotHermitian or
        NotPositive if it isn't one."""

        if self._psd is None:
            if (len(self.factors) == 1 and isinstance(self.factors[0].base, PsdMatrix)
                    and self.scale > 0):
                (base, e) = self.factors[0]
                power = matrix_power(base, e)
                if self.scale == 1.0:
                    self._psd = power
                else:
                    (values, vectors) = power.decomposition
                    self._psd = PsdMatrix._from_spectrum(values.values * self.scale, vectors)
            else:
                self._psd = PsdMatrix(self.hermitian())
        return self._psd

    @property
    def is_palindrome(self):
        if not all(f.hermitian for f in self.factors):
            return False
        count = len(self.factors)
        return all(self.factors[i].matches(self.factors[count - 1 - i]) for i in range(count // 2))


### Classification

def classify(data):
    """Wrap a dense result in the most specific matrix class it
    satisfies."""

    try:
        h = HermitianMatrix(data)
    except NotHermitian:
        return ComplexMatrix(data)
    try:
        return PsdMatrix(h)
    except NotPositive:
        return h


### Spectra of Words

def real_eigenvalues_general(word):
    """Eigenvalues of a word that is similar to a Hermitian matrix,
    decreasing.

    A palindrome is Hermitian already.  Otherwise the word is treated
    cyclically: for a positive factor F^e with a palindromic remainder
    R, the spectrum of F^e R is that of F^(e/2) R F^(e/2).  Anything
    else raises UnsupportedShape."""

    if not isinstance(word, Word):
        word = Word.atom(word)

    if word.is_palindrome:
        return word.hermitian().eigenvalues

    factors = cyclic_merge(list(word.factors))
    for (index, factor) in enumerate(factors):
        if not isinstance(factor.base, PsdMatrix):
            continue
        rest = factors[index + 1:] + factors[:index]
        half = Factor(factor.base, factor.exponent / 2.0)
        congruent = Word([half] + rest + [half], word.scale, word.dim)
        if congruent.is_palindrome:
            return congruent.hermitian().eigenvalues

    raise UnsupportedShape('No Hermitian form found for %r.' % word)

def eigenvalue_moduli(word):
    """|lambda| of a word, decreasing.  Words without a provably real
    spectrum fall back to a general eigenvalue routine."""

    if not isinstance(word, Word):
        word = Word.atom(word)
    try:
        return abs(real_eigenvalues_general(word))
    except UnsupportedShape:
        return Spectrum(np.abs(np.linalg.eigvals(word.matrix().entries)))

def cyclic_merge(factors):
    while len(factors) > 1 and factors[0].same_base(factors[-1]):
        exponent = factors[0].exponent + factors[-1].exponent
        merged = [Factor(factors[0].base, exponent)] if exponent != 0 else []
        factors = merged + factors[1:-1]
    return factors


### Aux

def dense(other, n):
    if isinstance(other, Word):
        if other.dim != n:
            raise DimMismatch('Dimensions %d and %d.' % (n, other.dim))
        return other.matrix().entries
    elif isinstance(other, numbers.Real):
        return other * np.eye(n)
    raise TypeError('Cannot add %r to a matrix word.' % (other, ))

def scalar_power(scale, t):
    if scale < 0 and not float(t).is_integer():
        raise NotPositive('Fractional power %g of a negative scalar.' % t)
    return scale ** t
