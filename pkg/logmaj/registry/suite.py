## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""suite -- run catalog entries over random trials

Trial (id, dim, index) draws everything from the stream (seed, id,
dim, index), so a suite is the same whatever the number of worker
threads or the order they finish in."""

import os, logging
from concurrent.futures import ThreadPoolExecutor
from .. import avro
from ..randgen import Stream, GenSpec, random_matrix
from .catalog import lookup, expand, THEOREM_GRADE
from .domain import sample_params
from .evaluate import evaluate, DEFAULT_TOLERANCES

__all__ = (
    'Summary', 'run_suite', 'run_trial', 'draw_inputs', 'summarize',
    'workers', 'conditioning', 'SUITE_COND', 'DEFICIENT_EVERY'
)

log = logging.getLogger(__name__)

## Suites draw better conditioned inputs than GenSpec's default so
## that eigenvalue ratios stay resolvable at desk tolerances.
SUITE_COND = 10.0

## Every DEFICIENT_EVERY-th trial draws the first psd input one rank
## short.
DEFICIENT_EVERY = 100

class Summary(avro.structure('logmaj.Summary')):

    @property
    def expected(self):
        return self.verdict == 'expected'


### Suites

def run_suite(ids, trials, dims, seed, tolerances=None, cond=None, timings=False, threads=None):
    """Run every id (groups like all-theorems are expanded) for each
    dimension in dims and trials trials.  Return (outcomes, summaries);
    outcomes are ordered by (id, dim, trial)."""

    if trials < 1:
        raise ValueError('A suite needs at least one trial, not %r.' % trials)

    tolerances = tolerances or DEFAULT_TOLERANCES
    defns = [lookup(i) for i in expand(ids)]
    tasks = [(d, n, k) for d in defns for n in dims for k in range(trials)]

    def run(task):
        (defn, dim, index) = task
        return run_trial(defn, dim, index, seed, tolerances, cond, timings)

    with ThreadPoolExecutor(max_workers=workers(threads)) as pool:
        outcomes = list(pool.map(run, tasks))

    summaries = []
    for defn in defns:
        mine = [o for o in outcomes if o.id == defn.id]
        summary = summarize(defn, mine, tolerances.strictness)
        log.info('%s: %d trials, %d failures, %d skipped, %d violations, worst %r: %s',
                 summary.id, summary.trials, summary.failures, summary.skipped,
                 summary.violations, summary.worst_margin, summary.verdict)
        summaries.append(summary)
    return (outcomes, summaries)

def run_trial(defn, dim, index, seed, tolerances=None, cond=None, timings=False):
    stream = Stream(seed, defn.id, dim, index)
    deficient = (index % DEFICIENT_EVERY) == DEFICIENT_EVERY - 1
    inputs = draw_inputs(defn, dim, stream.split('inputs'), cond, deficient)
    params = sample_params(defn, stream.split('params'))
    return evaluate(defn, inputs, params, tolerances, index, timings)

def draw_inputs(defn, dim, stream, cond=None, deficient=False):
    """Random inputs in declaration order.  cond overrides the entry's
    own conditioning, which overrides SUITE_COND.  When deficient, the
    first psd input is drawn one rank short."""

    cond = conditioning(defn, cond)
    inputs = []
    for item in defn.inputs:
        n = dim * item.factor
        spec = GenSpec(dim=n, kind=item.kind, cond_target=cond, scale=1.0)
        if deficient and item.kind == 'psd' and n > 1:
            spec.rank = n - 1
            deficient = False
        inputs.append(random_matrix(spec, stream.split(item.name)))
    return inputs

def conditioning(defn, cond=None):
    return cond or defn.cond or SUITE_COND

def workers(threads=None):
    """The worker thread count: threads, else LOGMAJ_THREADS, else the
    CPU count."""

    if threads is None:
        threads = os.environ.get('LOGMAJ_THREADS') or os.cpu_count() or 1
    try:
        threads = int(threads)
    except ValueError:
        raise ValueError('LOGMAJ_THREADS must be an integer, not %r.' % threads)
    return max(1, threads)


### Summaries

def summarize(defn, outcomes, strictness=DEFAULT_TOLERANCES.strictness):
    """Count failures and violations over one entry's outcomes.

    Theorem-grade entries fail when a non-conjectural leg fails; their
    conjectural legs, and conjecture entries, are violated below
    -strictness.  An example_refutation is expected to be violated at
    least once.  Skipped outcomes count toward neither."""

    checked = [o for o in outcomes if not o.is_skipped]
    failures = 0
    violations = 0
    for outcome in checked:
        if defn.status in THEOREM_GRADE:
            failures += not outcome.holds
            violations += any(l.conjectural and l.verdict.min_margin < -strictness for l in outcome.legs)
        else:
            violations += outcome.min_margin < -strictness

    margins = [o.min_margin for o in checked]
    return Summary(
        id=defn.id,
        status=defn.status,
        trials=len(outcomes),
        failures=failures,
        skipped=len(outcomes) - len(checked),
        violations=violations,
        worst_margin=min(margins) if margins else None,
        verdict=verdict(defn, failures, violations)
    )

def verdict(defn, failures, violations):
    if defn.status == 'example_refutation':
        return 'expected' if violations else 'unexpected'
    elif failures:
        return 'unexpected'
    elif violations:
        return 'conjecture_violation'
    return 'expected'
