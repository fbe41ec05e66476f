## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""domain -- sample, validate and perturb catalog parameters

Parameters are drawn in declaration order.  A bound may refer to
parameters declared before it, so coupled domains like

    t in [(r p - r) / ((r + s) p), (r p + s) / ((r + s) p)]

are sampled directly; constraints that can't be written as bounds
are enforced by rejection."""

import math, logging
from .. import expr

__all__ = (
    'DomainViolation', 'EmptyDomain', 'sample_params', 'validate_params',
    'perturb_params', 'bounds', 'satisfies', 'MAX_TRIES'
)

log = logging.getLogger(__name__)

MAX_TRIES = 1000

## Bounds are compared with this much relative slack so values that
## went through JSON still validate.
SLACK = 1e-12

class DomainViolation(ValueError):
    """Parameters outside an entry's declared domain."""

class EmptyDomain(ValueError):
    """No parameters satisfying the domain could be drawn."""


### Sampling

def sample_params(defn, stream, pinned=None):
    """Draw parameters uniformly inside their bounds, rejecting draws
    that break a constraint.  Pinned parameters keep their given
    value."""

    rng = stream.generator()
    pinned = dict(pinned or ())
    for attempt in range(MAX_TRIES):
        params = draw(defn, rng, pinned)
        if params is not None and satisfies(defn, params):
            return params
    raise EmptyDomain('No parameters for %s in %d draws (pinned %r).' % (defn.id, MAX_TRIES, pinned))

def draw(defn, rng, pinned):
    params = {}
    for param in defn.params:
        (low, high) = bounds(param, params)
        if low > high:
            return None
        elif param.name in pinned:
            value = pinned[param.name]
            if not within(value, low, high):
                return None
        else:
            value = rng.uniform(low, high) if high > low else low
        params[param.name] = float(value)
    return params


### Validation

def validate_params(defn, params):
    """Check a complete parameter assignment against the domain; return
    the parameters in declaration order."""

    names = [p.name for p in defn.params]
    missing = [n for n in names if n not in params]
    unknown = [n for n in params if n not in names]
    if missing or unknown:
        raise DomainViolation('%s: missing %r, unknown %r.' % (defn.id, missing, unknown))

    result = {}
    for param in defn.params:
        value = float(params[param.name])
        (low, high) = bounds(param, result)
        if not within(value, low, high):
            raise DomainViolation('%s: %s = %r is outside [%r, %r].' % (defn.id, param.name, value, low, high))
        result[param.name] = value

    for constraint in defn.constraints:
        if not expr.evaluate(constraint, result):
            raise DomainViolation('%s: %r fails for %r.' % (defn.id, constraint, result))
    return result

def satisfies(defn, params):
    return all(expr.evaluate(c, params) for c in defn.constraints)

def bounds(param, env):
    """The interval of a parameter given the ones before it.  A bound
    that divides by zero gives an empty interval."""

    try:
        return (float(expr.evaluate(param.low, env)), float(expr.evaluate(param.high, env)))
    except ZeroDivisionError:
        return (math.inf, -math.inf)

def within(value, low, high):
    slack = SLACK * max(1.0, abs(low), abs(high))
    return low - slack <= value <= high + slack


### Perturbation

def perturb_params(defn, params, magnitude, rng, pinned=()):
    """Move every free parameter by a normal step of magnitude times
    the width of its interval, clipped to the interval.  Return None
    when the step leaves the domain."""

    result = {}
    for param in defn.params:
        (low, high) = bounds(param, result)
        value = params[param.name]
        if low > high:
            return None
        elif param.name in pinned:
            if not within(value, low, high):
                return None
        elif high > low:
            value = min(max(value + rng.normal() * magnitude * (high - low), low), high)
        else:
            value = low
        result[param.name] = float(value)

    if not satisfies(defn, result):
        log.debug('%s: perturbed parameters break a constraint', defn.id)
        return None
    return result
