## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""jacobi -- cyclic Jacobi eigensolver and one-sided Jacobi singular
values for small complex matrices"""

import logging
import numpy as np
from .errors import NonConvergence

__all__ = ('eigh', 'svd_values', 'TOLERANCE', 'MAX_SWEEPS')

log = logging.getLogger(__name__)

EPS = np.finfo(float).eps

TOLERANCE = 1e-14

MAX_SWEEPS = 100


### Rotations

## Every rotation is built from a Hermitian 2 x 2 block
##
##     [ a    b ]
##     [ b*   d ]
##
## First a phase takes b to |b|, then a real rotation annihilates the
## off-diagonal.  The combined unitary is
##
##     [ c            s          ]
##     [ -s conj(ph)  c conj(ph) ]

def rotation(a, b, d):
    """Return (c, s, ph) for the 2 x 2 Hermitian block [a b; b* d]."""

    g = abs(b)
    ph = b / g
    theta = (d - a) / (2.0 * g)
    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    return (c, t * c, ph)

def rotate_columns(x, p, q, c, s, ph):
    col_p = x[:, p].copy()
    col_q = x[:, q]
    x[:, p] = c * col_p - s * np.conj(ph) * col_q
    x[:, q] = s * col_p + c * np.conj(ph) * col_q

def rotate_rows(x, p, q, c, s, ph):
    row_p = x[p, :].copy()
    row_q = x[q, :]
    x[p, :] = c * row_p - s * ph * row_q
    x[q, :] = s * row_p + c * ph * row_q


### Eigenvalues

def eigh(a, tol=TOLERANCE, max_sweeps=MAX_SWEEPS):
    """Diagonalize a Hermitian matrix.  Return (values, vectors) with
    values real and decreasing and vectors unitary, columns matching
    values.

    Only the Hermitian part of a is used.  Raise NonConvergence if the
    off-diagonal mass isn't below tol * ||a||_F after max_sweeps."""

    a = np.array(a, dtype=complex)
    a = (a + a.conj().T) / 2.0
    n = a.shape[0]
    v = np.eye(n, dtype=complex)

    ## Work on a / peak so squared entries stay finite.
    peak = largest(a)
    if peak == 0.0:
        return (np.zeros(n), v)
    a /= peak
    scale = np.linalg.norm(a)

    threshold = tol * scale
    tiny = EPS * EPS * scale
    for sweep in range(max_sweeps):
        if off_norm(a) <= threshold:
            return ordered(np.real(np.diag(a)) * peak, v)

        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) <= tiny:
                    continue
                (c, s, ph) = rotation(a[p, p].real, a[p, q], a[q, q].real)
                rotate_columns(a, p, q, c, s, ph)
                rotate_rows(a, p, q, c, s, ph)
                rotate_columns(v, p, q, c, s, ph)
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

    if off_norm(a) <= threshold:
        return ordered(np.real(np.diag(a)) * peak, v)

    log.debug('eigh: off-diagonal %g after %d sweeps (n=%d)', off_norm(a), max_sweeps, n)
    raise NonConvergence('Jacobi did not converge in %d sweeps (n=%d).' % (max_sweeps, n))

def largest(x):
    """The power of two at or below max |x_ij|, or 0.  Dividing by it
    is exact."""

    peak = float(np.max(np.abs(x))) if x.size else 0.0
    return float(np.exp2(np.floor(np.log2(peak)))) if peak > 0.0 and np.isfinite(peak) else peak

def off_norm(a):
    return np.linalg.norm(a - np.diag(np.diag(a)))

def ordered(values, vectors):
    order = np.argsort(-values, kind='stable')
    return (values[order], vectors[:, order])


### Singular Values

def svd_values(x, tol=TOLERANCE, max_sweeps=MAX_SWEEPS):
    """Singular values of a square complex matrix, decreasing.

    One-sided (Hestenes) Jacobi orthogonalizes the columns of x; the
    singular values are the final column norms.  No Gram matrix is
    formed, so small singular values keep their relative accuracy."""

    u = np.array(x, dtype=complex)
    n = u.shape[1]
    peak = largest(u)
    if peak == 0.0:
        return np.zeros(n)
    u /= peak
    threshold = max(tol, 4 * n * EPS)

    for sweep in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = np.vdot(u[:, p], u[:, p]).real
                beta = np.vdot(u[:, q], u[:, q]).real
                gamma = np.vdot(u[:, p], u[:, q])
                if abs(gamma) <= threshold * np.sqrt(alpha * beta):
                    continue
                rotate_columns(u, p, q, *rotation(alpha, gamma, beta))
                rotated = True
        if not rotated:
            return np.sort(np.linalg.norm(u, axis=0))[::-1] * peak

    log.debug('svd_values: still rotating after %d sweeps (n=%d)', max_sweeps, n)
    raise NonConvergence('One-sided Jacobi did not converge in %d sweeps (n=%d).' % (max_sweeps, n))
