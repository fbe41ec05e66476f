## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""majorization -- weak and strict log-majorization with margins

x is weakly log-majorized by y when, for every k,

    x_1 x_2 ... x_k <= y_1 y_2 ... y_k

(both decreasing), and log-majorized when equality also holds at
k = n.  Margins are differences of log prefix sums, so a negative
margin measures the violation on a log scale."""

import numpy as np
from .. import avro
from ..linalg import Spectrum, NotPositive, UNIT_ROUNDOFF, PSD_TOL

__all__ = (
    'MajorizationVerdict', 'LengthMismatch', 'log_prefix', 'log_margins',
    'weak_log_majorizes', 'log_majorizes', 'reverse_log_majorizes',
    'TOL', 'TOL_DET'
)

avro.require('order.json')

TOL = 1e-9

TOL_DET = 1e-8

class LengthMismatch(ValueError):
    """Spectra of different lengths were compared."""

class MajorizationVerdict(avro.structure('logmaj.Verdict')):
    pass


### Log Prefixes

def log_prefix(x):
    """Cumulative sums of log x_i for a nonnegative spectrum.  Values
    below 64 n u max(x) are exact zeros; from the first zero on, the
    prefix is -inf."""

    data = Spectrum(x).values
    n = len(data)
    top = max(data[0], 0.0) if n else 0.0
    if n and (data[-1] < -PSD_TOL * top or (top == 0.0 and data[-1] < 0.0)):
        raise NotPositive('Log-majorization needs nonnegative values, not %g.' % data[-1])

    clamped = np.where(data <= 64 * n * UNIT_ROUNDOFF * top, 0.0, data)
    with np.errstate(divide='ignore'):
        return np.cumsum(np.log(clamped))

def log_margins(x, y):
    """margin[k] = sum_{i<=k} log y_i - sum_{i<=k} log x_i.

    Where both prefixes are -inf the position is satisfied (0); a
    -inf on the right alone fails (-inf); a -inf on the left alone
    is satisfied (+inf)."""

    if len(x) != len(y):
        raise LengthMismatch('Spectra of lengths %d and %d.' % (len(x), len(y)))

    (px, py) = (log_prefix(x), log_prefix(y))
    (zx, zy) = (np.isneginf(px), np.isneginf(py))
    with np.errstate(invalid='ignore'):
        margins = py - px
    margins[zx & zy] = 0.0
    margins[zy & ~zx] = -np.inf
    margins[zx & ~zy] = np.inf
    return margins


### Verdicts

def weak_log_majorizes(x, y, tol=TOL):
    """Is x weakly log-majorized by y?  Every k = 1..n counts."""

    margins = log_margins(x, y)
    low = float(np.min(margins)) if len(margins) else 0.0
    return MajorizationVerdict('weak_log', margins.tolist(), None, low >= -tol, low)

def log_majorizes(x, y, tol=TOL, tol_det=TOL_DET, kind='log'):
    """Is x log-majorized by y?  k = 1..n-1 are inequalities and k = n
    is the determinant equality, reported as det_gap."""

    margins = log_margins(x, y)
    if not len(margins):
        return MajorizationVerdict(kind, [], 0.0, True, 0.0)

    low = float(np.min(margins[:-1])) if len(margins) > 1 else 0.0
    gap = abs(float(margins[-1]))
    return MajorizationVerdict(kind, margins.tolist(), gap, low >= -tol and gap <= tol_det, low)

def reverse_log_majorizes(x, y, tol=TOL, tol_det=TOL_DET):
    """Does x log-majorize y?"""

    return log_majorizes(y, x, tol, tol_det, kind='reverse_log')
