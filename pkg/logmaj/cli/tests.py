## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""tests -- unit tests"""

import io, os, json, shutil, tempfile, unittest
import contextlib as ctx
from unittest import mock
from .. import avro
from ..data import os as files
from ..registry import Summary, VERSION
from ..search import SearchReport, load_fixture
from . import *

def run(*argv):
    """Run the command line; return (status, stdout, stderr)."""

    (out, err) = (io.StringIO(), io.StringIO())
    with ctx.redirect_stdout(out), ctx.redirect_stderr(err):
        status = main(list(argv))
    return (status, out.getvalue(), err.getvalue())

class Folder(unittest.TestCase):

    def setUp(self):
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)

    def path(self, name):
        return os.path.join(self.folder, name)

class TestConfig(Folder):

    def test_defaults(self):
        config = resolve('verify')
        self.assertEqual(config.dims, [2, 3, 4])
        self.assertEqual((config.tol, config.tol_det, config.strictness), (1e-9, 1e-8, 1e-6))
        self.assertEqual(config.format, 'json')
        self.assertEqual(tolerances(config).tol, 1e-9)

    def test_file(self):
        path = self.path('run.yaml')
        files.put(path, 'dims: [2]\ntrials: 3\ntol: 1.0e-10\n')
        config = resolve('verify', { 'trials': 5, 'seed': None }, path)
        self.assertEqual(config.dims, [2])
        self.assertEqual(config.trials, 5)
        self.assertEqual(config.tol, 1e-10)
        self.assertEqual(config.seed, 7)

    def test_json_file(self):
        path = self.path('run.json')
        files.put(path, json.dumps({ 'ids': ['ZOU-1'], 'budget': 12 }))
        config = resolve('search', {}, path)
        self.assertEqual((config.ids, config.budget), (['ZOU-1'], 12))

    def test_bad_file(self):
        path = self.path('run.yaml')
        files.put(path, 'trails: 3\n')
        self.assertRaises(UsageError, lambda: resolve('verify', {}, path))
        files.put(path, '- 1\n- 2\n')
        self.assertRaises(UsageError, lambda: resolve('verify', {}, path))
        self.assertRaises(UsageError, lambda: resolve('verify', {}, self.path('missing.yaml')))

    def test_check(self):
        self.assertRaises(UsageError, lambda: resolve('verify', { 'tol': -1.0 }))
        self.assertRaises(UsageError, lambda: resolve('verify', { 'strictness': 0.0 }))
        self.assertRaises(UsageError, lambda: resolve('verify', { 'dims': [1] }))
        self.assertRaises(UsageError, lambda: resolve('verify', { 'dims': [9] }))
        self.assertEqual(resolve('verify', { 'dims': [9], 'max_dim': 16 }).dims, [9])
        self.assertRaises(UsageError, lambda: resolve('verify', { 'max_dim': 65 }))
        self.assertRaises(UsageError, lambda: resolve('verify', { 'trials': 0 }))
        self.assertRaises(UsageError, lambda: resolve('verify', { 'format': 'xml' }))
        self.assertRaises(UsageError, lambda: resolve('verify', { 'anneal': 1.5 }))
        self.assertRaises(UsageError, lambda: resolve('verify', { 'cond': 0.5 }))
        self.assertRaises(UsageError, lambda: resolve('launch'))

class TestResult(unittest.TestCase):

    def summary(self, verdict):
        return Summary('X', 'theorem', 1, 0, 0, 0, None, verdict)

    def test_result(self):
        self.assertEqual(result([]), 'expected')
        self.assertEqual(result([self.summary('expected')]), 'expected')
        self.assertEqual(result([self.summary('conjecture_violation'), self.summary('expected')]),
                         'conjecture_violation')
        self.assertEqual(result([self.summary('conjecture_violation'), self.summary('unexpected')]),
                         'unexpected')
        self.assertEqual(exit_code('expected'), 0)
        self.assertEqual(exit_code('conjecture_violation'), 1)
        self.assertEqual(exit_code('unexpected'), 1)

    def test_search_result(self):
        def report(status, found):
            return SearchReport('X', status, 1, [2], 0, 0, 1e-6, 1, violation_found=found)

        self.assertEqual(search_result([report('example_refutation', True)]), 'expected')
        self.assertEqual(search_result([report('example_refutation', False)]), 'unexpected')
        self.assertEqual(search_result([report('conjecture', False)]), 'expected')
        self.assertEqual(search_result([report('conjecture', True)]), 'conjecture_violation')

class TestVerify(Folder):

    ARGS = ('verify', '--ids', 'ZOU-1,THM-3.1', '--dims', '2,3', '--trials', '3', '--seed', '7')

    def test_usage(self):
        self.assertEqual(run('verify', '--ids', 'ZOU-1', '--tol', '-1')[0], 2)
        self.assertEqual(run('verify')[0], 2)
        self.assertEqual(run('verify', '--ids', 'NOPE', '--trials', '1')[0], 2)
        self.assertEqual(run('verify', '--dims', 'two')[0], 2)
        self.assertEqual(run('launch')[0], 2)

        (status, out, err) = run('verify', '--ids', 'ZOU-1', '--trials', '0')
        self.assertEqual(status, 2)
        self.assertIn('--trials', err)

    def test_report(self):
        path = self.path('r.json')
        (status, out, err) = run(*self.ARGS + ('--out', path))
        self.assertEqual(status, 0)
        self.assertIn('ZOU-1', out)

        report = load_report(path)
        self.assertEqual(report.catalog_version, VERSION)
        self.assertEqual(report.result, 'expected')
        self.assertEqual(report.config.trials, 3)
        self.assertEqual([s.id for s in report.summary], ['ZOU-1', 'THM-3.1'])
        self.assertEqual(
            [(o.id, o.dim, o.trial) for o in report.outcomes],
            [(i, n, k) for i in ('ZOU-1', 'THM-3.1') for n in (2, 3) for k in range(3)]
        )
        self.assertTrue(all(o.wall_time is None for o in report.outcomes))

    def test_byte_stable(self):
        ## The report echoes --out, so every run writes to the same path.
        path = self.path('r.json')
        reports = []
        for threads in ('1', '4'):
            with mock.patch.dict(os.environ, { 'LOGMAJ_THREADS': threads }):
                self.assertEqual(run(*self.ARGS + ('--out', path))[0], 0)
            reports.append(files.contents(path))
        self.assertEqual(reports[0], reports[1])

    def test_replay(self):
        path = self.path('r.json')
        run(*self.ARGS + ('--out', path))
        (status, out, err) = run('verify', '--replay', path)
        self.assertEqual(status, 0)
        self.assertIn('12 of 12 outcomes reproduced', out)

        data = json.loads(files.contents(path))
        data['outcomes'][0]['min_margin'] += 0.5
        files.put(path, json.dumps(data))
        (status, out, err) = run('verify', '--replay', path)
        self.assertEqual(status, 1)
        self.assertIn('11 of 12', out)

        self.assertEqual(run('verify', '--replay', self.path('missing.json'))[0], 2)

    def test_csv(self):
        path = self.path('r.csv')
        self.assertEqual(run(*self.ARGS + ('--out', path, '--format', 'csv-summary'))[0], 0)
        lines = files.contents(path).splitlines()
        self.assertEqual(lines[0], 'id,trials,failures,worst_margin,status')
        self.assertEqual([l.split(',')[:3] for l in lines[1:]], [['ZOU-1', '6', '0'], ['THM-3.1', '6', '0']])

    def test_refutation(self):
        (status, out, err) = run('verify', '--ids', 'RMK-3.1', '--dims', '2', '--trials', '5')
        self.assertEqual(status, 0)
        self.assertIn('RMK-3.1', out)

    def test_timings(self):
        path = self.path('r.json')
        run('verify', '--ids', 'ZOU-1', '--dims', '2', '--trials', '2', '--timings', '--out', path)
        self.assertTrue(all(o.wall_time >= 0 for o in load_report(path).outcomes))

class TestSearch(Folder):

    def test_search(self):
        path = self.path('s.json')
        (status, out, err) = run('search', '--ids', 'RMK-3.1', '--budget', '3', '--dims', '2',
                                 '--hill-steps', '2', '--out', path)
        self.assertEqual(status, 0)
        self.assertIn('violation', out)

        found = avro.loads(files.contents(path), SearchRun)
        self.assertEqual(found.result, 'expected')
        self.assertEqual([s.target_id for s in found.searches], ['RMK-3.1'])
        self.assertTrue(found.searches[0].violation_found)

    def test_wrong_status(self):
        (status, out, err) = run('search', '--ids', 'ZOU-1', '--budget', '2')
        self.assertEqual(status, 2)
        self.assertIn('ZOU-1', err)

    def test_reproduce_fixture(self):
        (status, out, err) = run('reproduce', 'EX-2.1', '--fixture')
        self.assertEqual(status, 0)
        self.assertIn('k=1 -', out)
        self.assertIn('"r": 1.0', out)

    def test_reproduce_search(self):
        (path, frozen) = (self.path('r.json'), self.path('RMK-3.1.json'))
        (status, out, err) = run('reproduce', 'RMK-3.1', '--budget', '3', '--dims', '2',
                                 '--hill-steps', '2', '--freeze', frozen, '--out', path)
        self.assertEqual(status, 0)
        self.assertIn('froze RMK-3.1', out)
        outcome = load_report(path).outcomes[0]
        self.assertEqual(outcome.holds, False)
        self.assertEqual(load_fixture('RMK-3.1', frozen).best_margin, outcome.min_margin)

    def test_reproduce_usage(self):
        self.assertEqual(run('reproduce', 'ZOU-1', '--fixture')[0], 2)
        self.assertEqual(run('reproduce', 'EX-2.1', 'RMK-3.1', '--fixture', '--freeze', self.path('x.json'))[0], 2)

    def test_registry_dump(self):
        (status, out, err) = run('registry-dump')
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)['version'], VERSION)
