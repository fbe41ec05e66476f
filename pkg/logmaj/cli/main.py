## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""main -- the logmaj command line

    logmaj verify --ids all-theorems --dims 2,3,4 --trials 200 --seed 7 --out r.json
    logmaj verify --replay r.json
    logmaj search --ids all-conjectures --budget 10000 --dims 2,3
    logmaj reproduce EX-2.1 --seed 7
    logmaj reproduce RMK-3.1 --fixture
    logmaj registry-dump

Exit status is 0 when every outcome is as expected, 1 for a failed
theorem, a refutation that wasn't found or a violated conjecture
(the report tells them apart), and 2 for usage and numerical errors."""

import sys, argparse, logging
from .. import avro
from ..data import os as files
from ..linalg import LinalgError
from ..randgen import BadSpec
from ..registry import (
    lookup, expand, dump, run_suite, summarize, UnknownId, DomainViolation,
    EmptyDomain, BadDefinition
)
from ..search import search, verify_instance, load_fixture, freeze, WrongStatus, ReproductionMismatch
from .config import resolve, tolerances, UsageError, FORMATS
from .report import make_report, make_search_run, write, load_report, replay, exit_code

__all__ = ('main', 'arguments')

log = logging.getLogger(__name__)

## Failures that end a run with status 2.
ERRORS = (
    UsageError, LinalgError, BadSpec, UnknownId, DomainViolation, EmptyDomain,
    BadDefinition, WrongStatus, ReproductionMismatch
)

LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

def main(argv=None):
    parser = arguments()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code

    logging.basicConfig(
        level=LEVELS[min(args.verbose, len(LEVELS) - 1)],
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr
    )

    try:
        config = resolve(args.command, flags(args), args.config)
        return COMMAND[config.command](config, args)
    except ERRORS as exc:
        log.debug('%s failed', args.command, exc_info=True)
        sys.stderr.write('logmaj: error: %s\n' % exc)
        return 2


### Commands

def verify(config, args):
    if config.replay:
        return replay_report(config.replay)
    elif not config.ids:
        raise UsageError('verify needs --ids or --replay.')

    (outcomes, summaries) = run_suite(
        config.ids, config.trials, config.dims, config.seed,
        tolerances(config), config.cond, config.timings
    )
    report = make_report(config, outcomes, summaries)
    for s in summaries:
        print('%-16s %-18s %5d trials %4d failures %4d skipped  worst %s  %s' % (
            s.id, s.status, s.trials, s.failures, s.skipped, margin(s.worst_margin), s.verdict))
    return finish(config, report)

def replay_report(path):
    try:
        report = load_report(path)
    except (IOError, ValueError, TypeError) as exc:
        raise UsageError('Cannot replay %r: %s' % (path, exc))

    mismatches = replay(report)
    for (outcome, again) in mismatches:
        print('%s trial %d (dim %d): min_margin %s, replayed %s' % (
            outcome.id, outcome.trial, outcome.dim, margin(outcome.min_margin), margin(again.min_margin)))
    print('%d of %d outcomes reproduced' % (len(report.outcomes) - len(mismatches), len(report.outcomes)))
    return 1 if mismatches else 0

def search_ids(config, args):
    if not config.ids:
        raise UsageError('search needs --ids.')
    return finish(config, make_search_run(config, hunt(config, expand(config.ids))))

def reproduce(config, args):
    ids = expand(config.ids)
    if not ids:
        raise UsageError('reproduce needs an id.')
    elif config.freeze and len(ids) != 1:
        raise UsageError('--freeze takes one id.')

    tol = tolerances(config)
    outcomes = []
    for id in ids:
        if config.fixture:
            try:
                found = load_fixture(id)
            except LookupError as exc:
                raise UsageError(str(exc))
        else:
            found = hunt(config, [id])[0]
        outcome = verify_instance(found, tol)
        show(found, outcome)
        if config.freeze:
            freeze(found, config.freeze)
            print('froze %s to %s' % (id, config.freeze))
        outcomes.append(outcome)

    summaries = [summarize(lookup(i), [o for o in outcomes if o.id == i], tol.strictness) for i in ids]
    return finish(config, make_report(config, outcomes, summaries))

def registry_dump(config, args):
    data = dump() + '\n'
    if config.out_path:
        files.put(config.out_path, data)
    else:
        sys.stdout.write(data)
    return 0

COMMAND = {
    'verify': verify,
    'search': search_ids,
    'reproduce': reproduce,
    'registry-dump': registry_dump,
}

def hunt(config, ids):
    reports = []
    for id in ids:
        report = search(
            id, config.budget, config.dims, config.seed, config.hill_steps,
            tolerances(config), config.cond, config.anneal, config.initial
        )
        print('%-16s %-18s %5d restarts  best %s%s' % (
            report.target_id, report.status, report.trials_used, margin(report.best_margin),
            '  violation' if report.violation_found else ''))
        reports.append(report)
    return reports

def finish(config, report):
    if config.out_path:
        write(report, config.out_path, config.format)
    code = exit_code(report.result)
    log.info('%s: %s, exit %d', config.command, report.result, code)
    return code

def show(found, outcome):
    instance = found.best_instance
    print('%s: dim %d, params %s' % (outcome.id, instance.dim, avro.dumps(instance.params)))
    for name in sorted(instance.inputs):
        print('  %s = %s' % (name, avro.dumps(instance.inputs[name])))
    for leg in outcome.legs:
        verdict = leg.verdict
        print('  leg %s (%s%s): min_margin %s' % (
            leg.name, verdict.kind, ', conjectural' if leg.conjectural else '', margin(verdict.min_margin)))
        for (k, value) in enumerate(verdict.k_margins, 1):
            print('    k=%d %s' % (k, margin(value)))
        if verdict.det_gap is not None:
            print('    det %s' % margin(verdict.det_gap))

def margin(value):
    return '-' if value is None else '%+.6e' % value


### Arguments

def arguments():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', metavar='FILE', help='YAML or JSON settings, overridden by flags.')
    common.add_argument('--dims', type=integers, help='Comma-separated dimensions (default: 2,3,4).')
    common.add_argument('--seed', type=int, help='Root random seed (default: 7).')
    common.add_argument('--tol', type=float, help='Prefix tolerance (default: 1e-9).')
    common.add_argument('--tol-det', type=float, dest='tol_det', help='Determinant tolerance (default: 1e-8).')
    common.add_argument('--strictness', type=float, help='Violation threshold (default: 1e-6).')
    common.add_argument('--cond', type=float, help='Condition number of random inputs.')
    common.add_argument('--max-dim', type=int, dest='max_dim', help='Largest allowed dimension (default: 8, at most 64).')
    common.add_argument('--out', dest='out_path', metavar='FILE', help='Write the report here.')
    common.add_argument('--format', choices=FORMATS, help='Report format (default: json).')
    common.add_argument('--budget', type=int, help='Search restarts (default: 1000).')
    common.add_argument('--hill-steps', type=int, dest='hill_steps', help='Steps per restart (default: 20).')
    common.add_argument('--anneal', type=float, help='Step factor after a rejected step (default: 0.7).')
    common.add_argument('--initial', type=float, help='Initial relative step size (default: 0.3).')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG.')

    parser = argparse.ArgumentParser(prog='logmaj', description='Check log-majorization inequalities numerically.')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    cmd = commands.add_parser('verify', parents=[common], help='Run catalog entries over random trials.')
    cmd.add_argument('--ids', type=names, help='Comma-separated ids or groups (all-theorems, ...).')
    cmd.add_argument('--trials', type=int, help='Trials per id and dimension (default: 200).')
    cmd.add_argument('--replay', metavar='FILE', help='Re-evaluate the outcomes of a report.')
    cmd.add_argument('--timings', action='store_true', default=None, help='Record wall time per outcome.')

    cmd = commands.add_parser('search', parents=[common], help='Hunt for counterexamples.')
    cmd.add_argument('--ids', type=names, help='Comma-separated ids or groups (all-conjectures, ...).')

    cmd = commands.add_parser('reproduce', parents=[common], help='Reproduce a refutation.')
    cmd.add_argument('ids', nargs='+', metavar='ID')
    cmd.add_argument('--fixture', action='store_true', default=None, help='Use the frozen instance.')
    cmd.add_argument('--freeze', metavar='FILE', help='Write the found instance as a fixture.')

    commands.add_parser('registry-dump', parents=[common], help='Print the catalog as JSON.')

    return parser

def flags(args):
    skip = ('command', 'config', 'verbose')
    return dict((k, v) for (k, v) in vars(args).items() if k not in skip)

def integers(text):
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma-separated integers, not %r' % text)

def names(text):
    return [x.strip() for x in text.split(',') if x.strip()]
