## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""errors -- numerical failure conditions"""

__all__ = (
    'LinalgError', 'NonConvergence', 'SingularMatrix', 'NotHermitian',
    'NotPositive', 'DimMismatch', 'UnsupportedShape', 'NonFinite',
    'NonConvergedLimit'
)

class LinalgError(Exception):
    """Base class for numerical failures."""

class NonConvergence(LinalgError):
    """A Jacobi iteration ran out of sweeps."""

class SingularMatrix(LinalgError):
    """An operation needs an invertible (positive definite) matrix."""

class NotHermitian(LinalgError, ValueError):
    """A matrix declared Hermitian is not, within tolerance."""

class NotPositive(LinalgError, ValueError):
    """A matrix declared positive semidefinite has a negative
    eigenvalue beyond tolerance."""

class DimMismatch(LinalgError, ValueError):
    """Operands have different dimensions."""

class UnsupportedShape(LinalgError, ValueError):
    """The operand is not square, is empty, is too large, or is a
    product whose spectrum can't be proven real."""

class NonFinite(LinalgError, ValueError):
    """A matrix has a NaN or infinite entry."""

class NonConvergedLimit(LinalgError):
    """A regularized mean did not settle as epsilon went to zero."""
