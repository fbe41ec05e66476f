## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""generate -- random PD, PSD and Hermitian matrices with a chosen
spectrum"""

import math
import numpy as np
from .. import avro
from ..linalg import HermitianMatrix, PsdMatrix, ComplexMatrix, MAX_DIM

__all__ = ('GenSpec', 'BadSpec', 'KINDS', 'random_matrix', 'perturb', 'ginibre', 'unitary')

avro.require('randgen.json')

KINDS = ('pd', 'psd', 'hermitian')

## Perturbed PSD inputs keep lambda_min >= lambda_max / COND_CAP.
COND_CAP = 1e4

class BadSpec(ValueError):
    """A GenSpec that can't be sampled."""

class GenSpec(avro.structure('logmaj.GenSpec')):

    @property
    def effective_rank(self):
        if self.kind == 'psd' and self.rank is not None:
            return self.rank
        return self.dim

    def validate(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise BadSpec('Dimension %r outside 1..%d.' % (self.dim, MAX_DIM))
        elif self.kind not in KINDS:
            raise BadSpec('Unknown kind %r; expected one of %s.' % (self.kind, ', '.join(KINDS)))
        elif self.rank is not None and not (self.kind == 'psd' and 1 <= self.rank <= self.dim):
            raise BadSpec('Rank %r needs kind psd and 1 <= rank <= %d.' % (self.rank, self.dim))
        elif not self.cond_target >= 1.0 or math.isinf(self.cond_target):
            raise BadSpec('cond_target must be a finite number >= 1, not %r.' % self.cond_target)
        elif not 0.0 < self.scale < math.inf:
            raise BadSpec('scale must be positive, not %r.' % self.scale)
        return self


### Sampling

def ginibre(n, rng):
    """An n x n matrix of independent standard complex normals."""

    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)

def unitary(n, rng):
    """The unitary factor of a Ginibre sample by modified Gram-Schmidt."""

    q = ginibre(n, rng)
    for j in range(n):
        for i in range(j):
            q[:, j] -= np.vdot(q[:, i], q[:, j]) * q[:, i]
        q[:, j] /= np.linalg.norm(q[:, j])
    return q

def magnitudes(count, rng, cond, scale):
    """Log-uniform values in [scale / cond, scale], decreasing, with both
    ends attained."""

    if count == 1:
        return np.array([scale])
    inner = rng.uniform(-math.log(cond), 0.0, count - 2)
    logs = np.concatenate(([0.0], np.sort(inner)[::-1], [-math.log(cond)]))
    return scale * np.exp(logs)

def random_matrix(spec, stream):
    """Q diag(d) Q^H for a random unitary Q.

    pd: d log-uniform in [scale / cond_target, scale].
    psd: the same law on the leading `rank` entries, zeros after.
    hermitian: log-uniform magnitudes with random signs, at least one
    of each sign when dim > 1."""

    spec.validate()
    rng = stream.generator()
    n = spec.dim
    q = unitary(n, rng)

    if spec.kind == 'hermitian':
        d = magnitudes(n, rng, spec.cond_target, spec.scale)
        signs = rng.choice((-1.0, 1.0), n)
        signs[0] = 1.0
        if n > 1:
            signs[1] = -1.0
        d = d * signs
        return HermitianMatrix((q * d) @ q.conj().T)

    rank = spec.effective_rank
    d = np.zeros(n)
    d[:rank] = magnitudes(rank, rng, spec.cond_target, spec.scale)
    return PsdMatrix((q * d) @ q.conj().T)

def perturb(m, magnitude, stream, cond_cap=COND_CAP):
    """M + magnitude * H for a random Hermitian H with ||H||_F = 1,
    projected back onto M's class.  PSD matrices keep their rank and
    keep lambda_min >= lambda_max / cond_cap on it."""

    if not magnitude >= 0:
        raise ValueError('Perturbation magnitude must be nonnegative, not %r.' % magnitude)

    z = ginibre(m.dim, stream.generator())
    h = (z + z.conj().T) / 2.0
    data = m.entries + magnitude * (h / np.linalg.norm(h))

    if isinstance(m, PsdMatrix):
        (values, vectors) = HermitianMatrix(data).decomposition
        d = np.array(values.values)
        d[m.rank:] = 0.0
        d[:m.rank] = np.maximum(d[:m.rank], max(d[0], 0.0) / cond_cap)
        if d[0] <= 0.0:
            return m
        return PsdMatrix((vectors * d) @ vectors.conj().T)
    elif isinstance(m, HermitianMatrix):
        return HermitianMatrix(data)
    return ComplexMatrix(data)
