## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""evaluate -- check one catalog entry on one set of inputs"""

import time, logging
from .. import avro, expr
from ..linalg import (
    Word, ComplexMatrix, HermitianMatrix, PsdMatrix, NotHermitian,
    NotPositive, SingularMatrix, NonConvergedLimit, load_matrix
)
from ..order import TOL, TOL_DET
from . import functions
from .catalog import lookup
from .domain import DomainViolation, validate_params
from .relations import compare

__all__ = (
    'Tolerances', 'LegOutcome', 'Outcome', 'evaluate', 'evaluate_expr',
    'bind_inputs', 'STRICTNESS', 'CLASSES', 'DEFAULT_TOLERANCES'
)

log = logging.getLogger(__name__)

## A refutation needs a margin below -STRICTNESS, well above the
## tolerances, to count.
STRICTNESS = 1e-6

CLASSES = {
    'pd': PsdMatrix,
    'psd': PsdMatrix,
    'hermitian': HermitianMatrix,
}

class Tolerances(avro.structure('logmaj.Tolerances')):

    def validate(self):
        for name in self.__all__:
            value = getattr(self, name)
            if not value > 0:
                raise ValueError('Tolerance %s must be positive, not %r.' % (name, value))
        return self

DEFAULT_TOLERANCES = Tolerances(TOL, TOL_DET, STRICTNESS)

class LegOutcome(avro.structure('logmaj.LegOutcome')):
    pass

class Outcome(avro.structure('logmaj.Outcome')):

    @property
    def is_skipped(self):
        return self.skipped is not None

    def matrices(self, defn):
        """The inputs in declaration order, restored to their classes."""

        return [self.inputs[i.name] for i in defn.inputs]

    @classmethod
    def __restore__(cls, state):
        obj = super(Outcome, cls).__restore__(state)
        defn = lookup(obj.id)
        obj.inputs = bind_inputs(defn, obj.inputs)
        return obj


### Evaluation

## Catalog expressions see the matrix functions on top of the default
## builtins.
evaluate_expr = expr.Evaluator(expr.compile_expr, expr.builtin(expr.use(functions)))

def evaluate(defn, inputs, params, tolerances=None, trial=0, timings=False):
    """Check every leg of defn on the given inputs (a sequence in
    declaration order or a mapping by name) and parameters.

    A mean that doesn't settle on the epsilon ladder, or a negative
    power of a rank-deficient input, makes a skipped Outcome: holds and
    min_margin are None and the reason is recorded."""

    tolerances = tolerances or DEFAULT_TOLERANCES
    start = time.perf_counter()

    bound = bind_inputs(defn, inputs)
    params = validate_params(defn, params)
    dim = bound[defn.inputs[0].name].dim // defn.inputs[0].factor

    outcome = Outcome(
        id=defn.id,
        dim=dim,
        trial=trial,
        digests=dict((k, m.digest()) for (k, m) in bound.items()),
        inputs=bound,
        params=params
    )

    try:
        outcome.legs = legs(defn, environment(defn, bound, params, dim), tolerances)
    except NonConvergedLimit as exc:
        outcome.skipped = 'NonConvergedLimit: %s' % exc
    except SingularMatrix as exc:
        if not any(isinstance(m, PsdMatrix) and not m.definite for m in bound.values()):
            raise
        outcome.skipped = 'SingularMatrix: %s' % exc

    if outcome.skipped:
        log.debug('%s trial %d skipped: %s', defn.id, trial, outcome.skipped)
    else:
        counted = [l.verdict for l in outcome.legs if not l.conjectural] or [l.verdict for l in outcome.legs]
        outcome.holds = all(v.holds for v in counted)
        outcome.min_margin = min(v.min_margin for v in counted)

    if timings:
        outcome.wall_time = time.perf_counter() - start
    return outcome

def environment(defn, inputs, params, dim):
    env = dict(params)
    env.update((k, Word.atom(m)) for (k, m) in inputs.items())
    env['I'] = Word.identity(dim)
    for binding in defn.setup:
        env[binding.name] = evaluate_expr(binding.expr, env)
    return env

def legs(defn, env, tolerances):
    result = []
    for leg in defn.legs:
        lhs = evaluate_expr(leg.lhs, env)
        rhs = evaluate_expr(leg.rhs, env)
        result.append(LegOutcome(leg.name, leg.conjectural, compare(leg, lhs, rhs, tolerances)))
    return result


### Inputs

def bind_inputs(defn, inputs):
    """Coerce inputs to the classes the entry declares; return a
    mapping from input name to matrix.  Raise DomainViolation if an
    input isn't of its class, a pd input is singular or the
    dimensions disagree."""

    if isinstance(inputs, dict):
        unknown = set(inputs) - set(i.name for i in defn.inputs)
        if unknown:
            raise DomainViolation('%s: unknown inputs %s.' % (defn.id, ', '.join(sorted(unknown))))
        values = [inputs.get(i.name) for i in defn.inputs]
    else:
        values = list(inputs)
    if len(values) != len(defn.inputs) or any(v is None for v in values):
        raise DomainViolation('%s takes inputs %s.' % (defn.id, ', '.join(i.name for i in defn.inputs)))

    bound = {}
    dims = set()
    for (item, value) in zip(defn.inputs, values):
        matrix = coerce(defn, item, value)
        if matrix.dim % item.factor:
            raise DomainViolation('%s: %s has dimension %d, not a multiple of %d.' % (
                defn.id, item.name, matrix.dim, item.factor))
        dims.add(matrix.dim // item.factor)
        bound[item.name] = matrix

    if len(dims) != 1:
        raise DomainViolation('%s: inputs of mismatched dimensions.' % defn.id)
    return bound

def coerce(defn, item, value):
    cls = CLASSES[item.kind]
    if isinstance(value, dict):
        value = load_matrix(value)
    elif not isinstance(value, ComplexMatrix):
        value = ComplexMatrix(value)

    try:
        matrix = value if type(value) is cls else cls(value)
    except (NotHermitian, NotPositive) as exc:
        raise DomainViolation('%s: %s is not %s (%s).' % (defn.id, item.name, item.kind, exc))

    if item.kind == 'pd' and not matrix.definite:
        raise DomainViolation('%s: %s is singular (rank %d).' % (defn.id, item.name, matrix.rank))
    return matrix
