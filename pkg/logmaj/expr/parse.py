## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""parse -- parse catalog expressions"""

import functools
from ply import lex, yacc

__all__ = ('ExprParser', 'Tree', 'expression')


### Parser

def Parser(tokens, ast):
    """Make an expression parser.

    The grammar is a small arithmetic language: numbers, names,
    function calls, the usual binary operators with ^ for powers,
    comparisons, and/or/not and a conditional.  Operator precedence
    comes from the PLY precedence table; ^ is right associative and
    binds tighter than unary minus, so -A^2 is -(A^2).

        read = ExprParser(Tree)
        read("A^0.5 * B")
    """

    precedence = (
        ('nonassoc', 'ELSE'),
        ('left', 'OR'),
        ('left', 'AND'),
        ('right', 'NOT'),
        ('nonassoc', 'CMP'),
        ('left', 'PLUS', 'MINUS'),
        ('left', 'STAR', 'SLASH'),
        ('right', 'UNARY'),
        ('right', 'CARET')
    )

    def p_Expression(p):
        """Expression : Expr"""
        p[0] = ast.Expression(p[1])

    def p_Expr_if(p):
        """Expr : IF '(' Expr ')' THEN Expr ELSE Expr"""
        p[0] = ast.If(p[3], p[6], p[8])

    def p_Expr_or(p):
        """Expr : Expr OR Expr"""
        p[0] = ast.Or(p[1], p[3])

    def p_Expr_and(p):
        """Expr : Expr AND Expr"""
        p[0] = ast.And(p[1], p[3])

    def p_Expr_not(p):
        """Expr : NOT Expr"""
        p[0] = ast.UnaryOp(p[1], p[2])

    def p_Expr_cmp(p):
        """Expr : Expr CMP Expr"""
        p[0] = ast.CmpOp(p[2], p[1], p[3])

    def p_Expr_binop(p):
        """Expr : Expr PLUS Expr
                | Expr MINUS Expr
                | Expr STAR Expr
                | Expr SLASH Expr
                | Expr CARET Expr"""
        p[0] = ast.BinOp(p[2], p[1], p[3])

    def p_Expr_unary(p):
        """Expr : PLUS Expr %prec UNARY
                | MINUS Expr %prec UNARY"""
        p[0] = ast.UnaryOp(p[1], p[2])

    def p_Expr_primary(p):
        """Expr : Primary"""
        p[0] = p[1]

    def p_Primary_number(p):
        """Primary : NUMBER"""
        p[0] = ast.Number(p[1])

    def p_Primary_name(p):
        """Primary : NAME"""
        p[0] = ast.Name(p[1])

    def p_Primary_paren(p):
        """Primary : '(' Expr ')'"""
        p[0] = p[2]

    def p_Primary_call(p):
        """Primary : NAME '(' Arguments ')'"""
        p[0] = ast.Apply(ast.Name(p[1]), p[3])

    def p_Arguments(p):
        """Arguments : Arguments ',' Expr"""
        p[0] = extend(p[1], p[3])

    def p_Arguments_one(p):
        """Arguments : Expr"""
        p[0] = [p[1]]

    def p_Arguments_none(p):
        """Arguments : """
        p[0] = []

    def p_error(p):
        raise Stuck(p)

    return yacc.yacc(debug=False, write_tables=False, errorlog=yacc.NullLogger())

def extend(seq, *items):
    seq.extend(items)
    return seq


### Lexer

def Lexer():
    """An expression lexer."""

    tokens = [
        'PLUS', 'MINUS', 'STAR', 'SLASH', 'CARET', 'CMP', 'NUMBER', 'NAME'
    ]

    reserved = {
        'if': 'IF',
        'then': 'THEN',
        'else': 'ELSE',
        'and': 'AND',
        'or': 'OR',
        'not': 'NOT'
    }

    tokens.extend(sorted(set(reserved.values())))

    literals = "(),"

    t_CMP = r'[<>]=?|==|!='
    t_PLUS = r'\+'
    t_MINUS = r'\-'
    t_STAR = r'\*'
    t_SLASH = r'/'
    t_CARET = r'\^'

    def t_NUMBER(t):
        r'(?:\d+\.?\d*|\.\d+)(?:[eE][\+\-]?\d+)?'
        t.value = float(t.value)
        return t

    def t_NAME(t):
        r'[a-zA-Z_]\w*'
        t.type = reserved.get(t.value, 'NAME')
        return t

    t_ignore = ' \t\n\r'

    def t_error(t):
        raise SyntaxError('Unknown character %r at position %d in %r.' % (t.value[0], t.lexpos, t.lexer.lexdata))
    lexer = lex.lex(errorlog=lex.NullLogger())
    return (tokens, lexer)


### Trees

class Tree(object):
    """Record the shape of a parse without compiling it; node names
    are the ones compiler ASTs must provide."""

    NODES = ('And', 'Apply', 'BinOp', 'CmpOp', 'Expression', 'If', 'Name',
             'Number', 'Or', 'UnaryOp')

    def __init__(self, kind, *parts):
        self.kind = kind
        self.parts = parts

    def __repr__(self):
        return '<%s: %s>' % (self.kind, ' '.join(map(repr, self.parts)))

for _kind in Tree.NODES:
    setattr(Tree, _kind, classmethod(lambda cls, *parts, _k=_kind: cls(_k, *parts)))
del _kind


### Public Interface

class Stuck(Exception):
    """The parser met a token it has no rule for (None at the end)."""

def where(data, tok, width=15):
    start = max(0, tok.lexpos - width)
    return ('...' if start else '') + data[start:tok.lexpos + len(str(tok.value))]

def parse(parser, lexer, data, debug=False):
    try:
        return parser.parse(data, lexer=lexer, debug=debug)
    except Stuck as exc:
        (tok,) = exc.args
    if tok is None:
        raise SyntaxError('Expression %r ends too soon.' % data)
    raise SyntaxError('Unexpected %s %r at position %d (near %r) in %r.' % (
        tok.type, tok.value, tok.lexpos, where(data, tok), data
    ))

def ExprParser(ast=Tree, **kwargs):
    """Build a parser that constructs nodes with ast."""

    (tokens, lexer) = Lexer()
    return functools.partial(parse, Parser(tokens, ast), lexer, **kwargs)

expression = ExprParser()
