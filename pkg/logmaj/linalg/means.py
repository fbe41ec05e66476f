## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""means -- weighted geometric means, the two-exponent mean and the
natural-natural mean, with an epsilon ladder for singular inputs"""

import logging
import numpy as np
from .. import avro
from . import jacobi
from .errors import *
from .matrix import PsdMatrix
from .calculus import as_psd, matrix_power

__all__ = (
    'MeanParams', 'geometric_mean_t', 'generalized_mean_rt', 'natural_natural',
    'regularize', 'limit', 'evaluate', 'MEANS', 'LADDER', 'LADDER_AGREEMENT'
)

log = logging.getLogger(__name__)

## Relative shifts tried, in order, when a mean is only defined as a
## limit; consecutive rungs must agree to LADDER_AGREEMENT.
LADDER = (1e-6, 1e-8, 1e-10)

LADDER_AGREEMENT = 1e-7

class MeanParams(avro.structure('logmaj.MeanParams')):

    def __init__(self, *args, **kw):
        super(MeanParams, self).__init__(*args, **kw)
        if not self.epsilon >= 0:
            raise ValueError('epsilon must be nonnegative, not %r.' % self.epsilon)

    @property
    def formal(self):
        """True when t is outside [0, 1], where the mean is only a
        formal expression."""

        return not 0.0 <= self.t <= 1.0


### Means

def generalized_mean_rt(a, b, r, t, epsilon=0.0):
    """A #_{r,t} B = A^(r/2) (A^(-1/2) B A^(-1/2))^t A^(r/2)

    With epsilon > 0 both A and B are shifted by epsilon * I first."""

    (a, b) = pair(a, b, epsilon)
    if not a.definite:
        raise SingularMatrix('The mean needs a definite first argument (rank %d < %d).' % (a.rank, a.dim))

    inv_root = matrix_power(a, -0.5).entries
    middle = matrix_power(PsdMatrix(inv_root @ b.entries @ inv_root), t).entries
    outer = matrix_power(a, r / 2.0).entries
    return PsdMatrix(outer @ middle @ outer)

def geometric_mean_t(a, b, t=0.5, epsilon=0.0):
    """A #_t B; the r = 1 case of generalized_mean_rt()."""

    return generalized_mean_rt(a, b, 1.0, t, epsilon)

def natural_natural(a, b, epsilon=0.0):
    """A^(1/2) (B^(1/2) A^(-1) B^(1/2))^(1/2) A^(1/2)"""

    (a, b) = pair(a, b, epsilon)
    if not (a.definite and b.definite):
        raise SingularMatrix('The natural-natural mean needs definite arguments.')

    root_b = matrix_power(b, 0.5).entries
    middle = PsdMatrix(root_b @ matrix_power(a, -1.0).entries @ root_b)
    root_a = matrix_power(a, 0.5).entries
    return PsdMatrix(root_a @ matrix_power(middle, 0.5).entries @ root_a)

def regularize(a, epsilon):
    """A + epsilon * I, sharing A's eigenvectors."""

    (values, vectors) = as_psd(a).decomposition
    return PsdMatrix._from_spectrum(values.values + epsilon, vectors)


### Limits

def limit(mean, a, b, *args):
    """Evaluate a mean of singular inputs as the limit of shifted
    means.  The shift runs down LADDER scaled by lambda_max(A + B);
    the first rung that agrees with its predecessor is returned."""

    (a, b) = (as_psd(a), as_psd(b))
    top = jacobi.eigh(a.entries + b.entries)[0][0]
    if top <= 0.0:
        top = 1.0

    previous = None
    for rung in LADDER:
        current = mean(a, b, *args, epsilon=rung * top)
        if previous is not None:
            gap = np.linalg.norm(current.entries - previous.entries)
            size = max(np.linalg.norm(current.entries), np.finfo(float).tiny)
            if gap <= LADDER_AGREEMENT * size:
                return current
            log.debug('limit: rung %g differs by %g relative', rung, gap / size)
        previous = current

    raise NonConvergedLimit('Mean did not settle on the epsilon ladder %r.' % (LADDER, ))

MEANS = {
    'gmean': (geometric_mean_t, lambda p: (p.t, )),
    'rmean': (generalized_mean_rt, lambda p: (p.r, p.t)),
    'nn': (natural_natural, lambda p: ()),
}

def evaluate(name, a, b, params=None):
    """Evaluate a named mean.  Definite inputs (or an explicit epsilon)
    take the direct path; singular ones go through limit()."""

    params = params or MeanParams()
    (mean, arguments) = MEANS[name]
    (a, b) = (as_psd(a), as_psd(b))
    args = arguments(params)

    if params.epsilon > 0 or direct(name, a, b, params):
        return mean(a, b, *args, epsilon=params.epsilon)
    return limit(mean, a, b, *args)

def direct(name, a, b, params):
    if name == 'nn':
        return a.definite and b.definite
    return a.definite and (params.t >= 0 or b.definite)


### Aux

def pair(a, b, epsilon):
    (a, b) = (as_psd(a), as_psd(b))
    if a.dim != b.dim:
        raise DimMismatch('Dimensions %d and %d.' % (a.dim, b.dim))
    elif epsilon < 0:
        raise ValueError('epsilon must be nonnegative, not %r.' % epsilon)
    elif epsilon > 0:
        return (regularize(a, epsilon), regularize(b, epsilon))
    return (a, b)
