## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""tests -- unit tests"""

import os, math, shutil, tempfile, unittest
import numpy as np
from .. import avro
from ..linalg import ComplexMatrix
from ..registry import UnknownId, DEFAULT_TOLERANCES, lookup
from . import *
from . import hunt

## s_1(A^1/2 B A^-1/2) for A = diag(4, 1), B = [[2, 1], [1, 2]].
S1 = math.sqrt((12.25 + math.sqrt(12.25 ** 2 - 36.0)) / 2.0)

class TestSearch(unittest.TestCase):

    def search(self, id='RMK-3.1', **kw):
        options = dict(budget=6, dims=[2, 3], seed=11, hill_steps=4, threads=2)
        options.update(kw)
        return search(id, **options)

    def test_status(self):
        self.assertRaises(WrongStatus, lambda: self.search('ZOU-1'))
        self.assertRaises(UnknownId, lambda: self.search('NOPE'))
        self.assertRaises(ValueError, lambda: self.search(budget=0))
        self.assertRaises(ValueError, lambda: self.search(dims=[]))

    def test_refutation(self):
        report = self.search()
        self.assertEqual(report.status, 'example_refutation')
        self.assertEqual(report.trials_used, 6)
        self.assertTrue(report.violation_found)
        self.assertLess(report.best_margin, -report.strictness)
        self.assertIn(report.best_instance.dim, (2, 3))
        self.assertEqual(report.best_instance.dim, [2, 3][report.best_restart % 2])
        self.assertEqual(sorted(report.best_instance.inputs), ['A', 'B'])
        self.assertEqual(report.best_instance.params, { 't': 0.0 })

    def test_threads(self):
        self.assertEqual(self.search(threads=1), self.search(threads=4))
        self.assertNotEqual(self.search(seed=1).best_margin, self.search(seed=2).best_margin)

    def test_trace(self):
        report = self.search('EX-2.1', budget=8, dims=[2])
        margins = [p.best_margin for p in report.margin_trace]
        self.assertEqual(margins, sorted(margins, reverse=True))
        self.assertEqual(margins[-1], report.best_margin)
        self.assertEqual(report.violation_found, report.best_margin < -report.strictness)

    def test_pinned_sweep(self):
        ## Odd restarts pin s to its sweep value.
        defn = lookup('EX-2.1')
        pairs = [('s', 0.0)]
        for index in (1, 3):
            best = hunt.restart(defn, index, [2], 11, 0, DEFAULT_TOLERANCES, None, ANNEAL, INITIAL, pairs)
            self.assertEqual(best.instance.params['s'], 0.0)
        best = hunt.restart(defn, 2, [2], 11, 0, DEFAULT_TOLERANCES, None, ANNEAL, INITIAL, pairs)
        self.assertNotEqual(best.instance.params['s'], 0.0)

    def test_hill_climb(self):
        flat = self.search('EX-2.1', budget=4, dims=[2], hill_steps=0)
        climbed = self.search('EX-2.1', budget=4, dims=[2], hill_steps=10)
        self.assertLessEqual(climbed.best_margin, flat.best_margin)

    def test_json(self):
        report = self.search()
        data = avro.dumps(avro.validate(report))
        self.assertEqual(avro.loads(data, SearchReport).best_margin, report.best_margin)


class TestVerify(unittest.TestCase):

    def setUp(self):
        self.report = search('RMK-3.1', 3, [2], 5, hill_steps=3, threads=1)
        self.here = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.here)

    def test_reproduce(self):
        outcome = verify_instance(self.report)
        self.assertEqual(outcome.min_margin, self.report.best_margin)

    def test_reproduce_json(self):
        data = avro.dumps(avro.validate(self.report))
        outcome = verify_instance(avro.loads(data, SearchReport))
        self.assertAlmostEqual(outcome.min_margin, self.report.best_margin, delta=REPRODUCTION_TOL)

    def test_mismatch(self):
        instance = self.report.best_instance
        a = instance.inputs['A']
        instance.inputs['A'] = ComplexMatrix(a.entries + 0.1 * np.eye(2))
        self.assertRaises(ReproductionMismatch, lambda: verify_instance(self.report))

        self.report.best_instance = None
        self.assertRaises(ReproductionMismatch, lambda: verify_instance(self.report))

    def test_outside_domain(self):
        self.report.best_instance.params['t'] = 0.5
        self.assertRaises(ReproductionMismatch, lambda: verify_instance(self.report))

    def test_freeze(self):
        path = os.path.join(self.here, 'RMK-3.1.json')
        fixture = freeze(self.report, path)
        self.assertEqual(fixture.best_margin, self.report.best_margin)
        loaded = load_fixture('RMK-3.1', path)
        self.assertEqual(loaded.target_id, 'RMK-3.1')
        self.assertAlmostEqual(verify_instance(loaded).min_margin, self.report.best_margin,
                               delta=REPRODUCTION_TOL)


class TestFixtures(unittest.TestCase):

    def test_shipped(self):
        self.assertEqual(fixtures(), ['EX-2.1', 'RMK-3.1'])
        self.assertRaises(LookupError, lambda: load_fixture('ZOU-1'))
        for id in fixtures():
            fixture = load_fixture(id)
            self.assertIsNotNone(fixture.best_margin)
            outcome = verify_instance(fixture)
            self.assertAlmostEqual(outcome.min_margin, fixture.best_margin, delta=REPRODUCTION_TOL)

            fixture.best_margin += 1e-6
            self.assertRaises(ReproductionMismatch, lambda: verify_instance(fixture))

    def test_search_round_trip(self):
        report = search('EX-2.1', 4, [2, 3], 3, hill_steps=2, threads=1)
        here = tempfile.mkdtemp()
        try:
            fixture = freeze(report, os.path.join(here, 'EX-2.1.json'))
            loaded = load_fixture('EX-2.1', os.path.join(here, 'EX-2.1.json'))
        finally:
            shutil.rmtree(here)
        self.assertEqual(loaded.best_margin, report.best_margin)
        self.assertAlmostEqual(verify_instance(loaded).min_margin, fixture.best_margin,
                               delta=REPRODUCTION_TOL)

    def test_example(self):
        outcome = verify_instance(load_fixture('EX-2.1'))
        self.assertAlmostEqual(outcome.min_margin, math.log(3.0) - math.log(S1), places=9)
        self.assertLess(outcome.min_margin, -1e-6)
        self.assertFalse(outcome.holds)

    def test_remark(self):
        outcome = verify_instance(load_fixture('RMK-3.1'))
        s1 = math.sqrt((85.0 + math.sqrt(85.0 ** 2 - 576.0)) / 2.0)
        self.assertAlmostEqual(outcome.min_margin, math.log((5.0 + math.sqrt(13.0)) / s1), places=9)
        self.assertLess(outcome.min_margin, -1e-6)
