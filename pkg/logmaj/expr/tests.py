## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""tests -- unit tests"""

import math, types, unittest
from . import *
from . import parse

class TestParse(unittest.TestCase):

    def setUp(self):
        self.read = parse.ExprParser(parse.Tree)

    def test_structure(self):
        self.assertEqual(
            repr(self.read('a + 1')),
            "<Expression: <BinOp: '+' <Name: 'a'> <Number: 1.0>>>"
        )

    def test_call(self):
        self.assertEqual(
            repr(self.read('f(x, 2)')),
            "<Expression: <Apply: <Name: 'f'> [<Name: 'x'>, <Number: 2.0>]>>"
        )

    def test_keywords(self):
        tree = repr(self.read('if (a) then b else c'))
        self.assertEqual(tree, "<Expression: <If: <Name: 'a'> <Name: 'b'> <Name: 'c'>>>")

    def test_errors(self):
        for text in ('1 +', '(1', 'f(1,', 'a < b < c', 'if (a) then b', '1 $ 2', ''):
            self.assertRaises(SyntaxError, lambda: read(text))

    def test_message(self):
        try:
            read('A * * B')
        except SyntaxError as exc:
            self.assertIn('STAR', str(exc))
            self.assertIn('A * * B', str(exc))
        else:
            self.fail('Expected a SyntaxError.')

    def test_unknown_character(self):
        try:
            read('1 $ 2')
        except SyntaxError as exc:
            self.assertIn("'$' at position 2", str(exc))
        else:
            self.fail('Expected a SyntaxError.')


class TestEvaluate(unittest.TestCase):

    def test_arithmetic(self):
        self.assertEqual(evaluate('1 + 2 * 3'), 7.0)
        self.assertEqual(evaluate('(1 + 2) * 3'), 9.0)
        self.assertEqual(evaluate('7 - 2 - 1'), 4.0)
        self.assertEqual(evaluate('8 / 2 / 2'), 2.0)

    def test_power(self):
        self.assertEqual(evaluate('2 ^ 3 ^ 2'), 512.0)
        self.assertEqual(evaluate('-2 ^ 2'), -4.0)
        self.assertEqual(evaluate('2 ^ -1'), 0.5)
        self.assertEqual(evaluate('x ^ (1 - t)', { 'x': 4.0, 't': 0.5 }), 2.0)

    def test_numbers(self):
        self.assertEqual(evaluate('1e-6'), 1e-6)
        self.assertEqual(evaluate('.5 + 1.'), 1.5)

    def test_logic(self):
        env = { 'r': 0.5, 's': -0.2 }
        self.assertTrue(evaluate('r > 0 and not s > 0', env))
        self.assertTrue(evaluate('r <= 0 or s < 0', env))
        self.assertFalse(evaluate('r == s', env))
        self.assertTrue(evaluate('r != s', env))

    def test_short_circuit(self):
        self.assertTrue(evaluate('q >= 0.5 or 1 / (1 - 2 * q) > 0', { 'q': 0.5 }))

    def test_conditional(self):
        bound = 'if (r >= 0) then 1 else 0'
        self.assertEqual(evaluate(bound, { 'r': 0.3 }), 1)
        self.assertEqual(evaluate(bound, { 'r': -0.3 }), 0)
        self.assertEqual(evaluate('if (1 < 2) then 3 else 4 + 1'), 3)

    def test_builtins(self):
        self.assertEqual(evaluate('sqrt(4)'), 2.0)
        self.assertEqual(evaluate('max(1, 2, 3)'), 3.0)
        self.assertEqual(evaluate('min(0.02, abs(-0.5))'), 0.02)
        self.assertEqual(evaluate('log(0)'), -math.inf)
        self.assertEqual(evaluate('inf'), math.inf)

    def test_shadow(self):
        self.assertEqual(evaluate('min', { 'min': 3.0 }), 3.0)

    def test_unbound(self):
        self.assertRaises(NameError, lambda: evaluate('mystery + 1'))
        self.assertRaises(NameError, lambda: evaluate('open(x)', { 'x': 'f' }))

    def test_cache(self):
        self.assertIs(compile_expr('a * b'), compile_expr('a * b'))
        self.assertIsInstance(compile_expr('a * b'), types.CodeType)

    def test_free_names(self):
        self.assertEqual(free_names('f(a, b) + c ^ 2'), frozenset(['f', 'a', 'b', 'c']))
        self.assertEqual(free_names('1 + 2'), frozenset())

    def test_extend(self):
        extra = types.SimpleNamespace(double=lambda x: 2 * x, __all__=('double', ))
        custom = Evaluator(compile_expr, builtin(use(extra)))
        self.assertEqual(custom('double(sqrt(9))'), 6.0)
        self.assertRaises(NameError, lambda: evaluate('double(1)'))
