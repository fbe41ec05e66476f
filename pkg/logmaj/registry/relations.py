## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""relations -- compare the two sides of a catalog leg

Every relation returns a Verdict whose k_margins are normalized so
that a negative entry is a violation of that size: log-ratios for
the multiplicative relations, values relative to the larger side for
the additive ones."""

import math
import numpy as np
from ..linalg import Spectrum, HermitianMatrix, DimMismatch
from ..order import (
    MajorizationVerdict as Verdict, LengthMismatch, weak_log_majorizes,
    log_majorizes, reverse_log_majorizes, schatten, ky_fan, P_SET
)
from .functions import word, sv

__all__ = ('RELATIONS', 'relation', 'compare', 'Verdict')

TINY = np.finfo(float).tiny

RELATIONS = {}

def relation(name):
    def decorator(proc):
        RELATIONS[name] = proc
        return proc
    return decorator

def compare(leg, lhs, rhs, tolerances):
    """Evaluate a leg's relation on its two evaluated sides."""

    return RELATIONS[leg.relation](lhs, rhs, leg, tolerances)


### Majorization

@relation('weak_log')
def weak_log(lhs, rhs, leg, tol):
    return weak_log_majorizes(spectrum(lhs), spectrum(rhs), tol.tol)

@relation('log')
def strict_log(lhs, rhs, leg, tol):
    return log_majorizes(spectrum(lhs), spectrum(rhs), tol.tol, tol.tol_det)

@relation('reverse_log')
def reverse_log(lhs, rhs, leg, tol):
    return reverse_log_majorizes(spectrum(lhs), spectrum(rhs), tol.tol, tol.tol_det)


### Entrywise

@relation('eigenvalue_wise_leq')
def eigenvalue_wise(lhs, rhs, leg, tol):
    return entrywise('eigenvalue_wise_leq', spectrum(lhs), spectrum(rhs), tol)

@relation('singular_value_wise_leq')
def singular_value_wise(lhs, rhs, leg, tol):
    return entrywise('singular_value_wise_leq', sv(lhs), sv(rhs), tol)

def entrywise(kind, x, y, tol):
    if len(x) != len(y):
        raise LengthMismatch('Spectra of lengths %d and %d.' % (len(x), len(y)))
    scale = max(np.max(np.abs(x.values)), np.max(np.abs(y.values)), TINY)
    return verdict(kind, (y.values - x.values) / scale, tol)

@relation('spectrum_union_equality')
def union_equality(lhs, rhs, leg, tol):
    (x, y) = (spectrum(lhs), spectrum(rhs))
    if len(x) != len(y):
        raise LengthMismatch('Spectra of lengths %d and %d.' % (len(x), len(y)))
    scale = max(np.max(np.abs(x.values)), np.max(np.abs(y.values)), TINY)
    return verdict('spectrum_union_equality', -np.abs(y.values - x.values) / scale, tol)


### Loewner Order

@relation('loewner_leq')
def loewner(lhs, rhs, leg, tol):
    """lambda_min(RHS - LHS) relative to the spectral radius of the
    larger side."""

    (left, right) = (word(lhs).hermitian(), word(rhs).hermitian())
    if left.dim != right.dim:
        raise DimMismatch('Dimensions %d and %d.' % (left.dim, right.dim))
    gap = HermitianMatrix(right.entries - left.entries).eigenvalues[-1]
    scale = max(radius(left), radius(right), TINY)
    return verdict('loewner_leq', [gap / scale], tol)

def radius(h):
    values = h.eigenvalues
    return max(abs(values[0]), abs(values[-1]))


### Norms

@relation('norm_leq')
def norm(lhs, rhs, leg, tol):
    """log(||RHS||_p / ||LHS||_p) for each p in the leg's p-set."""

    (left, right) = (word(lhs).matrix(), word(rhs).matrix())
    margins = [log_ratio(schatten(right, p), schatten(left, p)) for p in (leg.p_set or P_SET)]
    return verdict('norm_leq', margins, tol)

@relation('fan_dominance')
def fan(lhs, rhs, leg, tol):
    """Ky Fan gaps for k = 1..n relative to the larger trace norm."""

    (x, y) = (sv(lhs), sv(rhs))
    if len(x) != len(y):
        raise DimMismatch('Dimensions %d and %d.' % (len(x), len(y)))
    gaps = np.cumsum(y.values) - np.cumsum(x.values)
    scale = max(ky_fan(x, len(x)), ky_fan(y, len(y)), TINY)
    return verdict('fan_dominance', gaps / scale, tol)


### Scalars

@relation('scalar_leq')
def scalar(lhs, rhs, leg, tol):
    (left, right) = (float(lhs), float(rhs))
    scale = max(abs(left), abs(right), TINY)
    return verdict('scalar_leq', [(right - left) / scale], tol)


### Aux

def spectrum(value):
    if not isinstance(value, Spectrum):
        raise TypeError('Expected a spectrum, not %r; use sv(), lam() or modlam().' % (value, ))
    return value

def verdict(kind, margins, tol):
    margins = [float(m) for m in margins]
    low = min(margins) if margins else 0.0
    return Verdict(kind, margins, None, low >= -tol.tol, low)

def log_ratio(top, bottom):
    if top == 0.0 and bottom == 0.0:
        return 0.0
    elif bottom == 0.0:
        return math.inf
    elif top == 0.0:
        return -math.inf
    return math.log(top / bottom)
