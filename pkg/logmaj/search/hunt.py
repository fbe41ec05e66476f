## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""hunt -- random restarts and hill climbing against a conjecture

Each restart draws inputs and parameters from its own stream, then
perturbs them, keeping a step only if it strictly lowers the entry's
min_margin.  The step size shrinks by ANNEAL after every rejected step
and resets after an accepted one.  The objective is the outcome's
min_margin, so a negative best is a violation of that size."""

import os, logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from .. import avro
from ..data import os as files
from ..randgen import Stream, perturb
from ..registry import (
    lookup, evaluate, sample_params, perturb_params, draw_inputs,
    conditioning, workers, EmptyDomain, DomainViolation, DEFAULT_TOLERANCES
)

__all__ = (
    'Instance', 'TracePoint', 'SearchReport', 'Fixture', 'WrongStatus',
    'ReproductionMismatch', 'search', 'verify_instance', 'load_fixture',
    'freeze', 'fixtures', 'SEARCHABLE', 'ANNEAL', 'INITIAL', 'HILL_STEPS',
    'REPRODUCTION_TOL'
)

log = logging.getLogger(__name__)

avro.require('search.json')

SEARCHABLE = ('conjecture', 'example_refutation')

## The step factor is multiplied by ANNEAL after a rejected step.
ANNEAL = 0.7

## Matrices move by INITIAL * factor * ||M||_F, parameters by
## INITIAL * factor * (high - low).
INITIAL = 0.3

HILL_STEPS = 20

## A frozen instance must re-evaluate to its margin within this.
REPRODUCTION_TOL = 1e-9

FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')

class WrongStatus(ValueError):
    """Only conjectures and refutations are searched."""

class ReproductionMismatch(Exception):
    """An instance does not re-evaluate to its recorded margin."""

class Instance(avro.structure('logmaj.Instance')):
    pass

class TracePoint(avro.structure('logmaj.TracePoint')):
    pass

class SearchReport(avro.structure('logmaj.SearchReport')):
    pass

class Fixture(avro.structure('logmaj.Fixture')):
    pass

Best = namedtuple('Best', 'margin instance')


### Search

def search(target_id, budget, dims, seed, hill_steps=HILL_STEPS, tolerances=None,
           cond=None, anneal=ANNEAL, initial=INITIAL, threads=None):
    """Run budget restarts of a hill climb against target_id and
    report the lowest margin found.

    Restart i works at dims[i % len(dims)].  When the entry has a
    sweep table, odd restarts pin one parameter to a boundary value,
    cycling through the table."""

    defn = lookup(target_id)
    if defn.status not in SEARCHABLE:
        raise WrongStatus('%s is a %s; only %s entries are searched.' % (
            defn.id, defn.status, ' and '.join(SEARCHABLE)))
    elif budget < 1 or not dims:
        raise ValueError('A search needs a positive budget and at least one dimension.')

    tolerances = tolerances or DEFAULT_TOLERANCES
    pairs = [(s.param, v) for s in defn.sweep for v in s.values]

    def run(index):
        return restart(defn, index, dims, seed, hill_steps, tolerances, cond, anneal, initial, pairs)

    report = SearchReport(
        target_id=defn.id,
        status=defn.status,
        budget=budget,
        dims=list(dims),
        seed=seed,
        hill_steps=hill_steps,
        strictness=tolerances.strictness,
        trials_used=budget
    )

    ## pool.map() yields in restart order, so ties go to the smaller
    ## index whatever the scheduling.
    with ThreadPoolExecutor(max_workers=workers(threads)) as pool:
        for (index, best) in enumerate(pool.map(run, range(budget))):
            if best is None:
                continue
            elif report.best_margin is None or best.margin < report.best_margin:
                log.debug('%s restart %d: margin %r', defn.id, index, best.margin)
                report.update(best_margin=best.margin, best_restart=index, best_instance=best.instance)
            report.margin_trace.append(TracePoint(index, report.best_margin))

    report.violation_found = (report.best_margin is not None
                              and report.best_margin < -tolerances.strictness)
    log.info('%s: best margin %r after %d restarts', defn.id, report.best_margin, budget)
    return report

def restart(defn, index, dims, seed, hill_steps, tolerances, cond, anneal, initial, pairs):
    stream = Stream(seed, defn.id, 'restart', index)
    dim = dims[index % len(dims)]
    cond = conditioning(defn, cond)

    pinned = {}
    if pairs and index % 2:
        (name, value) = pairs[(index // 2) % len(pairs)]
        pinned = { name: value }
    try:
        params = sample_params(defn, stream.split('params'), pinned)
    except EmptyDomain:
        pinned = {}
        params = sample_params(defn, stream.split('params'))

    inputs = draw_inputs(defn, dim, stream.split('inputs'), cond)
    margin = objective(defn, inputs, params, tolerances)
    if margin is None:
        return None

    rng = stream.split('walk').generator()
    factor = 1.0
    for step in range(hill_steps):
        moves = stream.split('step', step)
        trial_inputs = [
            perturb(m, initial * factor * m.frobenius(), moves.split(item.name), cond)
            for (item, m) in zip(defn.inputs, inputs)
        ]
        trial_params = perturb_params(defn, params, initial * factor, rng, pinned)
        candidate = None
        if trial_params is not None:
            candidate = objective(defn, trial_inputs, trial_params, tolerances)

        if candidate is not None and candidate < margin:
            (inputs, params, margin, factor) = (trial_inputs, trial_params, candidate, 1.0)
        else:
            factor *= anneal

    names = [i.name for i in defn.inputs]
    return Best(margin, Instance(dim, params, dict(zip(names, inputs))))

def objective(defn, inputs, params, tolerances):
    try:
        outcome = evaluate(defn, inputs, params, tolerances)
    except DomainViolation as exc:
        log.debug('%s: step left the domain: %s', defn.id, exc)
        return None
    return outcome.min_margin


### Verification

def verify_instance(report, tolerances=None):
    """Re-evaluate the best instance of a SearchReport or Fixture
    through the registry; return the Outcome.  Raise
    ReproductionMismatch unless it reproduces the recorded margin to
    REPRODUCTION_TOL."""

    instance = report.best_instance
    if instance is None:
        raise ReproductionMismatch('%s: nothing to reproduce.' % report.target_id)

    defn = lookup(report.target_id)
    try:
        outcome = evaluate(defn, instance.inputs, instance.params, tolerances)
    except DomainViolation as exc:
        raise ReproductionMismatch('%s: instance is outside the domain: %s' % (defn.id, exc))

    if outcome.dim != instance.dim:
        raise ReproductionMismatch('%s: instance is %d-dimensional, not %d.' % (defn.id, outcome.dim, instance.dim))
    elif outcome.is_skipped:
        raise ReproductionMismatch('%s: instance was skipped: %s' % (defn.id, outcome.skipped))
    elif report.best_margin is not None and not abs(outcome.min_margin - report.best_margin) <= REPRODUCTION_TOL:
        raise ReproductionMismatch('%s: margin %r, recorded %r.' % (defn.id, outcome.min_margin, report.best_margin))
    return outcome


### Fixtures

def fixtures():
    """Ids with a frozen fixture."""

    return files.listing(FIXTURES, '.json')

def load_fixture(id, path=None):
    """Load the frozen instance for id, or the fixture file at path."""

    path = path or os.path.join(FIXTURES, '%s.json' % id)
    try:
        return avro.loads(files.contents(path), Fixture)
    except IOError as exc:
        raise LookupError('No fixture for %r: %s' % (id, exc))

def freeze(report, path):
    """Write the best instance of a report as a fixture; return it."""

    if report.best_instance is None:
        raise ValueError('%s: no instance to freeze.' % report.target_id)
    fixture = Fixture(report.target_id, report.best_margin, report.best_instance)
    files.put(path, avro.dumps(avro.validate(fixture), indent=2) + '\n')
    return fixture
