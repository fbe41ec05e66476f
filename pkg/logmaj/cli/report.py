## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""report -- assemble, write and replay run reports"""

import csv, logging
from .. import avro
from ..data import os as files
from ..registry import lookup, evaluate, VERSION
from .config import tolerances

__all__ = (
    'Report', 'SearchRun', 'make_report', 'make_search_run', 'result',
    'search_result', 'exit_code', 'write', 'load_report', 'replay',
    'RESULTS', 'SUMMARY_COLUMNS', 'SEARCH_COLUMNS'
)

log = logging.getLogger(__name__)

RESULTS = ('expected', 'unexpected', 'conjecture_violation')

SUMMARY_COLUMNS = ('id', 'trials', 'failures', 'worst_margin', 'status')

SEARCH_COLUMNS = ('id', 'trials_used', 'best_margin', 'violation_found', 'status')

class Report(avro.structure('logmaj.Report')):

    def rows(self):
        for s in self.summary:
            yield (s.id, s.trials, s.failures, number(s.worst_margin), s.status)

class SearchRun(avro.structure('logmaj.SearchRun')):

    def rows(self):
        for s in self.searches:
            yield (s.target_id, s.trials_used, number(s.best_margin), int(s.violation_found), s.status)


### Assembly

def make_report(config, outcomes, summaries):
    return Report(config, VERSION, outcomes, summaries, result(summaries))

def make_search_run(config, reports):
    return SearchRun(config, VERSION, reports, search_result(reports))

def result(summaries):
    return outranking(s.verdict for s in summaries)

def search_result(reports):
    verdicts = []
    for report in reports:
        if report.status == 'example_refutation':
            verdicts.append('expected' if report.violation_found else 'unexpected')
        elif report.violation_found:
            verdicts.append('conjecture_violation')
    return outranking(verdicts)

def outranking(verdicts):
    """An unexpected verdict anywhere outranks a conjecture
    violation."""

    verdicts = set(verdicts)
    if 'unexpected' in verdicts:
        return 'unexpected'
    elif 'conjecture_violation' in verdicts:
        return 'conjecture_violation'
    return 'expected'

def exit_code(outcome):
    """0 when everything went as expected; 1 for a failed theorem, a
    missing refutation or a violated conjecture."""

    return 0 if outcome == 'expected' else 1


### Files

def write(report, path, format='json'):
    """Validate report and write it atomically to path, as JSON or as
    a CSV summary."""

    avro.validate(report)
    if format == 'json':
        files.put(path, avro.dumps(report, indent=2) + '\n')
    elif format == 'csv-summary':
        columns = SEARCH_COLUMNS if isinstance(report, SearchRun) else SUMMARY_COLUMNS
        files.dump(path, write_csv, [columns] + list(report.rows()))
    else:
        raise ValueError('Unknown report format %r.' % format)
    log.info('wrote %s report to %s', format, path)
    return report

def write_csv(rows, port):
    writer = csv.writer(port, lineterminator='\n')
    writer.writerows(rows)

def load_report(path):
    return avro.loads(files.contents(path), Report)

def number(value):
    return '' if value is None else repr(value)


### Replay

def replay(report):
    """Re-evaluate every outcome of a report under the report's own
    tolerances.  Return the outcomes that don't reproduce holds,
    min_margin and skipped exactly, paired with their re-evaluation."""

    tol = tolerances(report.config)
    mismatches = []
    for outcome in report.outcomes:
        defn = lookup(outcome.id)
        again = evaluate(defn, outcome.matrices(defn), outcome.params, tol, outcome.trial)
        if (again.holds, again.min_margin, again.skipped) != (outcome.holds, outcome.min_margin, outcome.skipped):
            log.debug('%s trial %d: %r against %r', outcome.id, outcome.trial, again.min_margin, outcome.min_margin)
            mismatches.append((outcome, again))
    return mismatches
