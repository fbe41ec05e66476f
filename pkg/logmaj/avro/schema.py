## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""schema -- declare the record schemata each subpackage ships

A schema file holds one or more named JSON definitions written one
after another.  Later files may name records from earlier ones."""

import os, sys, json
import avro.errors
from avro import schema as _s
from . import types

__all__ = ('load', 'require', 'iload')

def load(data):
    """Declare the definitions in data (text or an open port) and
    return their schemata in the order they appear.

    >>> load('''{
    ...     "type": "record", "name": "logmaj.Pair",
    ...     "fields": [{ "name": "lo", "type": "double" },
    ...                { "name": "hi", "type": "double" }]
    ... }''')
    [<avro.schema.RecordSchema ...>]
    """

    text = data if isinstance(data, str) else data.read()
    try:
        defns = [(name_of(d), d) for d in iload(text)]
    except ValueError as exc:
        raise SyntaxError('Bad schema source: %s' % exc)

    REGISTRY.add([(n, d) for (n, d) in defns if REGISTRY.fresh(n, d)])
    return [types.get_schema(n) for (n, _) in defns]

def require(*paths, depth=1):
    """Declare the schema files at paths, relative to the module that
    calls require().  Pass a larger depth from a wrapper.

        avro.require('linalg.json')
    """

    caller = sys._getframe(depth).f_globals.get('__file__')
    if caller is None:
        raise ValueError('Frame %d has no source file to be relative to.' % depth)

    folder = os.path.dirname(caller)
    for path in (os.path.abspath(os.path.join(folder, p)) for p in paths):
        if path not in REGISTRY.files:
            try:
                with open(path, encoding='utf-8') as port:
                    load(port)
            except IOError as exc:
                raise NameError('Cannot require %r: %s' % (path, exc))
            REGISTRY.files.add(path)

def iload(text, decoder=json.JSONDecoder(), _space=json.decoder.WHITESPACE.match):
    """Yield each JSON value in text.

    >>> list(iload('[1, 2] "a" { "c": 3 }'))
    [[1, 2], 'a', {'c': 3}]
    """

    pos = _space(text, 0).end()
    while pos < len(text):
        try:
            (value, pos) = decoder.raw_decode(text, pos)
        except ValueError as exc:
            raise ValueError('%s near %r' % (exc, text[pos:pos + 40]))
        yield value
        pos = _space(text, pos).end()

def name_of(defn):
    if not isinstance(defn, dict) or 'name' not in defn:
        raise SyntaxError('Expected a named definition, not %r.' % (defn,))
    (space, name) = (defn.get('namespace'), defn['name'])
    return name if ('.' in name or not space) else '%s.%s' % (space, name)


### Registry

class Registry(object):
    """Definitions declared so far, in declaration order.  avro only
    resolves cross-references inside one parse, so every addition
    re-parses the lot as a single union."""

    def __init__(self):
        self.defns = {}
        self.files = set()

    def fresh(self, name, defn):
        known = self.defns.get(name)
        if known is not None and known != defn:
            raise TypeError('%r is already declared differently.' % name)
        return known is None

    def add(self, fresh):
        if not fresh:
            return
        every = list(self.defns.values()) + [d for (_, d) in fresh]
        try:
            union = _s.parse(json.dumps(every))
        except (avro.errors.AvroException, ValueError) as exc:
            raise SyntaxError('Cannot declare %s: %s' % (', '.join(n for (n, _) in fresh), exc))
        self.defns.update(fresh)
        types.SCHEMATA.update((s.fullname, s) for s in union.schemas)

REGISTRY = Registry()
