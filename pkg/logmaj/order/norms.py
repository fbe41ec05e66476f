## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""norms -- Schatten p-norms, Ky Fan k-norms and Fan dominance"""

import math
import numpy as np
from .. import avro
from ..linalg import Spectrum, DimMismatch, singular_values

__all__ = (
    'schatten', 'ky_fan', 'fan_dominates', 'FanVerdict', 'parse_p',
    'InvalidP', 'BadK', 'P_SET'
)

avro.require('order.json')

## The Schatten orders spot-checked for "every unitarily invariant
## norm" claims.
P_SET = (1.0, 1.5, 2.0, 3.0, math.inf)

class InvalidP(ValueError):
    """A Schatten order below 1."""

class BadK(ValueError):
    """A Ky Fan index outside 1..n."""

class FanVerdict(avro.structure('logmaj.FanVerdict')):
    pass

def parse_p(value):
    """Read a Schatten order; the string "inf" stands for the operator
    norm."""

    try:
        p = float(value)
    except (TypeError, ValueError):
        raise InvalidP('Not a Schatten order: %r.' % (value, ))
    if not p >= 1.0:
        raise InvalidP('Schatten order must be at least 1, not %r.' % (value, ))
    return p

def spectrum(x):
    if isinstance(x, Spectrum):
        return x
    return singular_values(getattr(x, 'matrix', lambda: x)())

def schatten(x, p):
    """||X||_p = (sum s_i^p)^(1/p); p = inf gives s_1.  The sum is
    taken over s / s_1 so large p can't overflow."""

    p = parse_p(p)
    s = spectrum(x).values
    top = s[0]
    if top == 0.0:
        return 0.0
    elif math.isinf(p):
        return float(top)
    return float(top * np.sum((s / top) ** p) ** (1.0 / p))

def ky_fan(x, k):
    s = spectrum(x).values
    if int(k) != k or not 1 <= k <= len(s):
        raise BadK('Ky Fan index %r outside 1..%d.' % (k, len(s)))
    return float(np.sum(s[:int(k)]))

def fan_dominates(x, y, tol=1e-9):
    """Is ky_fan(X, k) <= ky_fan(Y, k) + tol for every k?  By the Fan
    dominance principle this is |||X||| <= |||Y||| for every unitarily
    invariant norm."""

    (sx, sy) = (spectrum(x).values, spectrum(y).values)
    if len(sx) != len(sy):
        raise DimMismatch('Dimensions %d and %d.' % (len(sx), len(sy)))
    gaps = np.cumsum(sy) - np.cumsum(sx)
    return FanVerdict(bool(np.all(gaps >= -tol)), gaps.tolist())
