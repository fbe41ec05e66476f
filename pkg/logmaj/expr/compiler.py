## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""compiler -- compile catalog expressions"""

import builtins, threading, functools, ast as _ast
from . import parse, ops, ast

__all__ = (
    'read', 'compile_expr', 'evaluate', 'Evaluator', 'free_names',
    'environment', 'use', 'builtin'
)


### Compiler

def Evaluator(compile_expr, BUILTIN):
    """Create an expression evaluator from a compiler and a set of
    builtin bindings.

    The evaluator takes source text (or a code object made by
    compile_expr) and a mapping of variable bindings and returns the
    value of the expression.  Bindings shadow builtins.

        evaluate = Evaluator(compile_expr, builtin(use(functions)))
        evaluate('A^0.5 * B', { 'A': a, 'B': b })
    """

    def evaluate(code, bindings=None):
        if isinstance(code, str):
            code = compile_expr(code)
        return eval(code, { '__builtins__': BUILTIN }, dict(bindings or ()))
    evaluate.builtin = BUILTIN
    return evaluate

def Compiler(read):
    """Cache compiled expressions by source text.  PLY parsers keep
    state, so parsing is serialized."""

    lock = threading.Lock()

    @functools.lru_cache(maxsize=None)
    def compile_expr(text):
        with lock:
            tree = read(text)
        return compile_ast(tree, '<expr %s>' % text)
    return compile_expr

def compile_ast(node, filename='<string>', mode='eval'):
    return compile(_ast.fix_missing_locations(node), filename, mode)

def free_names(code):
    """The names an expression refers to."""

    if isinstance(code, str):
        code = compile_expr(code)
    return frozenset(code.co_names)


### Environment

def environment(*modules):
    """Merge (namespace, names) pairs into one builtins mapping; later
    pairs win."""

    return {name: space[name] for (space, names) in modules for name in names}

def use(mod, *only):
    return (mod.__dict__, only or exported(mod))

def exported(mod):
    public = [n for n in dir(mod) if not n.startswith('_')]
    return getattr(mod, '__all__', public)

def builtin(*modules):
    return environment(
        use(builtins, 'float', 'int', 'len', 'round'),
        use(ops),
        *modules
    )


### Defaults

read = parse.ExprParser(ast)

compile_expr = Compiler(read)

evaluate = Evaluator(compile_expr, builtin())
