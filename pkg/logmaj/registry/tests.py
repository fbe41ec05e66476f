## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""tests -- unit tests"""

import io, os, json, math, unittest
import numpy as np
from numpy.testing import assert_allclose
from .. import avro
from ..randgen import Stream
from . import *
from . import functions

A = np.diag([4.0, 1.0])
B = np.array([[2.0, 1.0], [1.0, 2.0]])

## s_1(A^1/2 B A^-1/2) for the pair above: the square root of the top
## eigenvalue of [[4.25, 5], [5, 8]].
S1 = math.sqrt((12.25 + math.sqrt(12.25 ** 2 - 36.0)) / 2.0)

class TestCatalog(unittest.TestCase):

    def test_lookup(self):
        zou = lookup('ZOU-1')
        self.assertEqual([(i.name, i.kind) for i in zou.inputs], [('A', 'psd'), ('B', 'psd')])
        self.assertEqual(zou.params, [])
        self.assertEqual([l.relation for l in zou.legs], ['log'])

        thm = lookup('THM-2.1')
        self.assertEqual([p.name for p in thm.params], ['p', 'r', 's', 't'])
        self.assertEqual(thm.params[3].low, '(r*p - r)/((r + s)*p)')

    def test_unknown(self):
        self.assertRaises(UnknownId, lambda: lookup('NOPE'))
        self.assertRaises(UnknownId, lambda: expand(['ZOU-1', 'NOPE']))

    def test_groups(self):
        theorems = expand(['all-theorems'])
        self.assertIn('ZOU-1', theorems)
        self.assertIn('FINAL-CHAIN', theorems)
        self.assertNotIn('CONJ-1.1', theorems)
        self.assertEqual(expand(['all-refutations']), ['EX-2.1', 'RMK-3.1'])
        self.assertEqual(expand(['ZOU-1', 'all-conjectures', 'ZOU-1'])[:2], ['ZOU-1', 'CONJ-1.1'])
        self.assertEqual(len(expand(['all'])), len(CATALOG))

    def test_statuses(self):
        for defn in CATALOG.values():
            self.assertIn(defn.status, STATUSES)
        self.assertEqual(lookup('CONJ-1.2-RMK').status, 'theorem')
        self.assertEqual(lookup('FINAL-CHAIN').status, 'conditional')
        self.assertTrue(any(l.conjectural for l in lookup('FINAL-CHAIN').legs))

    def test_anchors(self):
        kinds = ('Eq.', 'Theorem', 'Lemma', 'Corollary', 'Conjecture', 'Example', 'Remark',
                 'Proposition', 'relation', 'Section')
        for defn in CATALOG.values():
            self.assertTrue(defn.anchor.startswith(kinds), defn.id)
            self.assertTrue(defn.summary, defn.id)
        self.assertEqual(lookup('ZOU-1').anchor, 'Eq. (1)')
        self.assertEqual(lookup('EX-2.1').anchor, 'Example 2.1')
        self.assertEqual(lookup('THM-2.1').anchor, 'Theorem 2.1')
        self.assertEqual(lookup('CONJ-1.2-RMK').anchor, 'Remark 1.1')

    def test_dump(self):
        dumped = json.loads(dump())
        self.assertEqual(dumped['version'], VERSION)
        self.assertEqual([e['id'] for e in dumped['entries']], ids())
        bly = [e for e in dumped['entries'] if e['id'] == 'BLY-11'][0]
        self.assertEqual(bly['legs'][0]['p_set'][-1], float('inf'))
        self.assertEqual(lookup('RMK-3.1').anchor, [e for e in dumped['entries'] if e['id'] == 'RMK-3.1'][0]['anchor'])

    def test_check(self):
        entry = '''
entries:
  - id: BAD
    status: lemma
    inputs: [[A, pd]]
    legs:
      - { name: main, relation: log, lhs: "lam(A)", rhs: "%s" }
'''
        (version, [defn]) = load(io.StringIO(entry % 'lam(A^2)'))
        self.assertEqual(defn.id, 'BAD')
        self.assertRaises(BadDefinition, lambda: load(io.StringIO(entry % 'lam(C)')))
        self.assertRaises(BadDefinition, lambda: load(io.StringIO(entry % 'lam(A')))
        self.assertRaises(BadDefinition, lambda: load(io.StringIO(entry.replace('log', 'loose') % 'A')))
        self.assertRaises(BadDefinition, lambda: load(io.StringIO(entry.replace('pd', 'normal') % 'A')))
        self.assertRaises(BadDefinition, lambda: load(io.StringIO('entries: [{ id: X }]')))


class TestDomain(unittest.TestCase):

    def sample(self, id, count=200, **pinned):
        defn = lookup(id)
        return [sample_params(defn, Stream(3, id, i), pinned) for i in range(count)]

    def test_corollary(self):
        for params in self.sample('COR-2.1', p=2.0):
            self.assertEqual(params['p'], 2.0)
            self.assertTrue(0.25 <= params['t'] <= 0.75)

    def test_coupled(self):
        for params in self.sample('THM-2.1', p=1.0, r=1.0, s=1.0):
            self.assertTrue(0.0 <= params['t'] <= 1.0)
        for params in self.sample('THM-2.1'):
            self.assertGreaterEqual(params['r'] * params['s'], 0.0)
            self.assertGreaterEqual(abs(params['r'] + params['s']), 0.05)

    def test_furuta(self):
        for params in self.sample('LEM-2.2'):
            (p, q, r) = (params['p'], params['q'], params['r'])
            self.assertTrue(-r * (1 - q) <= p <= q - r * (1 - q))
            self.assertTrue(q >= 0.5 or (-r * (1 - q) - q) / (1 - 2 * q) <= p <= -r * (1 - q) / (1 - 2 * q))

    def test_deterministic(self):
        self.assertEqual(self.sample('CONJ-2.1', 5), self.sample('CONJ-2.1', 5))

    def test_empty(self):
        defn = lookup('EX-2.1')
        self.assertRaises(EmptyDomain, lambda: sample_params(defn, Stream(1), { 't': 0.5 }))

    def test_validate(self):
        defn = lookup('COR-2.1')
        self.assertEqual(validate_params(defn, { 'p': 2, 't': 0.5 }), { 'p': 2.0, 't': 0.5 })
        self.assertRaises(DomainViolation, lambda: validate_params(defn, { 'p': 2, 't': 0.9 }))
        self.assertRaises(DomainViolation, lambda: validate_params(defn, { 'p': 2 }))
        self.assertRaises(DomainViolation, lambda: validate_params(defn, { 'p': 2, 't': 0.5, 'q': 1 }))

    def test_zero_denominator(self):
        defn = lookup('CONJ-1.2-RMK')
        self.assertRaises(DomainViolation, lambda: validate_params(defn, { 'r': 0, 's': 0, 't': 0 }))

    def test_perturb(self):
        defn = lookup('THM-2.1')
        rng = Stream(5, 'perturb').generator()
        start = sample_params(defn, Stream(5, 'start'))
        for i in range(100):
            params = perturb_params(defn, start, 0.3, rng, ('p', ))
            if params is not None:
                self.assertEqual(params['p'], start['p'])
                validate_params(defn, params)


class TestEvaluate(unittest.TestCase):

    def test_equal_inputs(self):
        d = np.diag([1.0, 2.0])
        outcome = evaluate(lookup('ZOU-1'), [d, d], {})
        self.assertTrue(outcome.holds)
        assert_allclose(outcome.legs[0].verdict.k_margins, [0.0, 0.0], atol=1e-12)
        assert_allclose(outcome.min_margin, 0.0, atol=1e-12)
        self.assertEqual(outcome.dim, 2)
        self.assertEqual(sorted(outcome.digests), ['A', 'B'])

    def test_block_spectrum(self):
        (a, b) = (np.diag([1.0, 2.0]), np.diag([3.0, 4.0]))
        outcome = evaluate(lookup('PROP-4.1'), { 'A': a, 'B': b }, {})
        self.assertTrue(outcome.holds)
        env = { 'A': functions.word(outcome.inputs['A']), 'B': functions.word(outcome.inputs['B']) }
        spectrum = evaluate_expr('lam(block(A, B, B, A))', env)
        assert_allclose(spectrum.values, [6.0, 4.0, -2.0, -2.0], atol=1e-12)

    def test_refutation(self):
        outcome = evaluate(lookup('EX-2.1'), [A, B], { 'r': 1, 's': 0, 't': 0 })
        self.assertFalse(outcome.holds)
        assert_allclose(outcome.min_margin, math.log(3.0) - math.log(S1), rtol=1e-9)
        self.assertLess(outcome.min_margin, -1e-6)

    def test_eigenvalues_below_singular_values(self):
        outcome = evaluate(lookup('RMK-3.1'), [A, B], { 't': 0 })
        lam = 5.0 + math.sqrt(13.0)
        s1 = math.sqrt((85.0 + math.sqrt(85.0 ** 2 - 4 * 144.0)) / 2.0)
        assert_allclose(outcome.min_margin, math.log(lam / s1), rtol=1e-9)
        self.assertTrue(evaluate(lookup('THM-3.1'), [A, B], {}).holds)

    def test_conjectural_leg(self):
        outcome = evaluate(lookup('FINAL-CHAIN'), [A, B], {})
        self.assertEqual([l.conjectural for l in outcome.legs], [False, True])
        self.assertEqual(outcome.min_margin, outcome.legs[0].verdict.min_margin)

    def test_skipped(self):
        params = { 'p': 1, 'r': 0.2, 's': 0.3, 't': 0.5 }
        outcome = evaluate(lookup('THM-2.1'), [np.diag([1.0, 0.0]), np.diag([1.0, 2.0])], params)
        self.assertIsNotNone(outcome.skipped)
        self.assertIsNone(outcome.holds)
        self.assertIsNone(outcome.min_margin)

    def test_bad_inputs(self):
        zou = lookup('ZOU-1')
        self.assertRaises(DomainViolation, lambda: evaluate(zou, [np.diag([1.0, -1.0]), B], {}))
        self.assertRaises(DomainViolation, lambda: evaluate(zou, [A], {}))
        self.assertRaises(DomainViolation, lambda: evaluate(zou, [A, np.eye(3)], {}))
        self.assertRaises(DomainViolation, lambda: evaluate(zou, { 'A': A, 'C': B }, {}))
        singular = np.diag([1.0, 0.0])
        self.assertRaises(DomainViolation, lambda: evaluate(lookup('EX-2.1'), [singular, B], { 'r': 1, 's': 0, 't': 0 }))
        self.assertRaises(DomainViolation, lambda: evaluate(lookup('EX-2.1'), [A, B], { 'r': 0, 's': 0, 't': 0 }))

    def test_timings(self):
        self.assertIsNone(evaluate(lookup('ZOU-1'), [A, B], {}).wall_time)
        self.assertGreaterEqual(evaluate(lookup('ZOU-1'), [A, B], {}, timings=True).wall_time, 0.0)

    def test_json(self):
        outcome = evaluate(lookup('EX-2.1'), [A, B], { 'r': 1, 's': 0, 't': 0 })
        avro.validate(outcome)
        self.assertEqual(avro.loads(avro.dumps(outcome), Outcome), outcome)

    def test_tolerances(self):
        self.assertRaises(ValueError, Tolerances(tol=-1).validate)
        self.assertEqual(Tolerances().strictness, STRICTNESS)


class TestSuite(unittest.TestCase):

    def test_empty(self):
        self.assertEqual(run_suite([], 1, [2], 1), ([], []))

    def test_trials(self):
        self.assertRaises(ValueError, lambda: run_suite(['ZOU-1'], 0, [2], 1))

    def test_theorem(self):
        (outcomes, [summary]) = run_suite(['THM-3.1'], 10, [2, 3], 42)
        self.assertEqual(len(outcomes), 20)
        self.assertEqual([(o.dim, o.trial) for o in outcomes[:11]], [(2, i) for i in range(10)] + [(3, 0)])
        self.assertEqual(summary.failures, 0)
        self.assertEqual(summary.verdict, 'expected')

    def test_refutation(self):
        (outcomes, [summary]) = run_suite(['RMK-3.1'], 20, [2], 7)
        self.assertGreater(summary.violations, 0)
        self.assertTrue(summary.expected)

    def test_threads(self):
        one = run_suite(['ZOU-1', 'PROP-4.1'], 3, [2, 3], 11, threads=1)
        four = run_suite(['ZOU-1', 'PROP-4.1'], 3, [2, 3], 11, threads=4)
        self.assertEqual(avro.dumps(one), avro.dumps(four))

    def test_rank_deficient(self):
        zou = lookup('ZOU-1')
        (a, b) = draw_inputs(zou, 3, Stream(1), deficient=True)
        self.assertEqual((a.rank, b.rank), (2, 3))
        (a, b) = draw_inputs(zou, 3, Stream(1))
        self.assertEqual((a.rank, b.rank), (3, 3))

    def test_summaries(self):
        outcome = evaluate(lookup('EX-2.1'), [A, B], { 'r': 1, 's': 0, 't': 0 })
        refutation = summarize(lookup('EX-2.1'), [outcome])
        self.assertEqual((refutation.violations, refutation.verdict), (1, 'expected'))
        conjecture = summarize(lookup('CONJ-1.2'), [outcome])
        self.assertEqual(conjecture.verdict, 'conjecture_violation')
        theorem = summarize(lookup('CONJ-1.2-RMK'), [outcome])
        self.assertEqual((theorem.failures, theorem.verdict), (1, 'unexpected'))
        self.assertEqual(summarize(lookup('ZOU-1'), []).worst_margin, None)

    def test_workers(self):
        self.assertEqual(workers(3), 3)
        self.assertEqual(workers(0), 1)
        saved = os.environ.get('LOGMAJ_THREADS')
        os.environ['LOGMAJ_THREADS'] = '2'
        try:
            self.assertEqual(workers(), 2)
        finally:
            if saved is None:
                del os.environ['LOGMAJ_THREADS']
            else:
                os.environ['LOGMAJ_THREADS'] = saved
