## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""catalog -- the inequality catalog

Entries live in catalog.yaml next to this module.  Each one names its
matrix inputs, its parameters and the legs to check:

    - id: COR-2.1
      status: corollary
      anchor: Corollary 2.1
      summary: Theorem 2.1 with r = s = 1
      inputs: [[A, pd], [B, pd]]
      params:
        - [p, "1", "2"]
        - [t, "(p - 1)/(2*p)", "(p + 1)/(2*p)"]
      legs:
        - name: main
          relation: log
          lhs: "lam(gmean(A, B, t)^p * gmean(A, B, 1 - t)^p)"
          rhs: "lam(A * B)^p"

The compact list forms are expanded into Definition records on load;
every expression is compiled and its free names are checked before
the catalog is used."""

import os, logging
from .. import avro, expr
from ..data import yaml, os as files
from ..randgen import KINDS
from . import functions
from .relations import RELATIONS

__all__ = (
    'Input', 'Param', 'Binding', 'LegDefinition', 'Sweep', 'Definition',
    'UnknownId', 'BadDefinition', 'STATUSES', 'THEOREM_GRADE', 'GROUPS',
    'CATALOG', 'VERSION', 'lookup', 'ids', 'expand', 'dump', 'load', 'check'
)

log = logging.getLogger(__name__)

## The record schemata refer to logmaj.Verdict and logmaj.Matrix,
## declared when relations imports order and linalg.
avro.require('registry.json')

STATUSES = (
    'theorem', 'lemma', 'corollary', 'proposition', 'conditional',
    'conjecture', 'example_refutation'
)

## A failing non-conjectural leg of one of these is a bug or a
## numerical problem, never news.
THEOREM_GRADE = ('theorem', 'lemma', 'corollary', 'proposition', 'conditional')

GROUPS = {
    'all-theorems': THEOREM_GRADE,
    'all-refutations': ('example_refutation', ),
    'all-conjectures': ('conjecture', ),
    'all': STATUSES,
}

class UnknownId(LookupError):
    """No catalog entry (or group) has this name."""

class BadDefinition(ValueError):
    """A catalog entry is malformed."""


### Records

class Input(avro.structure('logmaj.Input')):
    pass

class Param(avro.structure('logmaj.Param')):
    pass

class Binding(avro.structure('logmaj.Binding')):
    pass

class LegDefinition(avro.structure('logmaj.LegDefinition')):
    pass

class Sweep(avro.structure('logmaj.Sweep')):
    pass

class Definition(avro.structure('logmaj.Definition')):

    @property
    def theorem_grade(self):
        return self.status in THEOREM_GRADE

    def input(self, name):
        for item in self.inputs:
            if item.name == name:
                return item
        raise KeyError(name)


### Lookup

def lookup(id):
    """Find a definition by id.

    >>> lookup('ZOU-1').inputs
    [Input(name='A', kind='psd', factor=1), Input(name='B', kind='psd', factor=1)]
    """

    try:
        return CATALOG[id]
    except KeyError:
        raise UnknownId('No catalog entry %r.' % id)

def ids(*statuses):
    """Catalog ids in catalog order, optionally restricted by status."""

    return [k for (k, d) in CATALOG.items() if not statuses or d.status in statuses]

def expand(names):
    """Resolve a list of ids and group names (all-theorems, ...) to a
    list of ids in catalog order.  Duplicates are dropped."""

    seen = set()
    result = []
    for name in names:
        if name in GROUPS:
            found = ids(*GROUPS[name])
        else:
            found = [lookup(name).id]
        for id in found:
            if id not in seen:
                seen.add(id)
                result.append(id)
    return result

def dump():
    """The whole catalog as a JSON string."""

    return avro.dumps({ 'version': VERSION, 'entries': list(CATALOG.values()) }, indent=2)


### Loading

def load(port):
    """Read a catalog from a YAML file object; return (version,
    definitions)."""

    source = yaml.load(port)
    if not (isinstance(source, dict) and 'entries' in source):
        raise BadDefinition('A catalog is a mapping with an "entries" list.')

    defns = []
    for entry in source['entries']:
        defn = definition(entry)
        check(defn)
        defns.append(defn)
    return (str(source.get('version', '0')), defns)

def definition(entry):
    entry = dict(entry)
    id = entry.get('id')
    try:
        return Definition(
            id=entry.pop('id'),
            status=entry.pop('status'),
            anchor=entry.pop('anchor', ''),
            summary=entry.pop('summary', ''),
            inputs=[Input(*i) for i in entry.pop('inputs')],
            params=[Param(n, str(lo), str(hi)) for (n, lo, hi) in entry.pop('params', ())],
            constraints=[str(c) for c in entry.pop('constraints', ())],
            setup=[Binding(n, str(e)) for (n, e) in entry.pop('setup', ())],
            legs=[leg(l) for l in entry.pop('legs')],
            sweep=[Sweep(n, [float(v) for v in vs]) for (n, vs) in entry.pop('sweep', {}).items()],
            cond=entry.pop('cond', None),
            **entry
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise BadDefinition('Malformed entry %r: %s' % (id, exc))

def leg(entry):
    p_set = entry.get('p_set')
    return LegDefinition(
        name=entry['name'],
        relation=entry['relation'],
        lhs=str(entry['lhs']),
        rhs=str(entry['rhs']),
        p_set=None if p_set is None else [float(p) for p in p_set],
        conjectural=bool(entry.get('conjectural', False))
    )


### Checks

## The names every expression may use beyond its own bindings.
BUILTIN = frozenset(expr.builtin(expr.use(functions)))

def check(defn):
    """Validate a definition: known status, input kinds and relations,
    and expressions that compile and only refer to names bound before
    them.  Raise BadDefinition; return defn."""

    if defn.status not in STATUSES:
        raise BadDefinition('%s: unknown status %r.' % (defn.id, defn.status))
    elif not defn.legs:
        raise BadDefinition('%s: no legs.' % defn.id)

    for item in defn.inputs:
        if item.kind not in KINDS:
            raise BadDefinition('%s: input %s has unknown kind %r.' % (defn.id, item.name, item.kind))
        elif item.factor < 1:
            raise BadDefinition('%s: input %s has factor %d.' % (defn.id, item.name, item.factor))

    scope = set(BUILTIN)
    for param in defn.params:
        names(defn, param.low, scope)
        names(defn, param.high, scope)
        scope.add(param.name)

    for constraint in defn.constraints:
        names(defn, constraint, scope)

    scope.update(i.name for i in defn.inputs)
    scope.add('I')
    for binding in defn.setup:
        names(defn, binding.expr, scope)
        scope.add(binding.name)

    seen = set()
    for item in defn.legs:
        if item.relation not in RELATIONS:
            raise BadDefinition('%s: leg %s has unknown relation %r.' % (defn.id, item.name, item.relation))
        elif item.name in seen:
            raise BadDefinition('%s: leg %s is declared twice.' % (defn.id, item.name))
        elif item.p_set is not None and not all(p >= 1 for p in item.p_set):
            raise BadDefinition('%s: leg %s has p < 1.' % (defn.id, item.name))
        seen.add(item.name)
        names(defn, item.lhs, scope)
        names(defn, item.rhs, scope)

    params = set(p.name for p in defn.params)
    for sweep in defn.sweep:
        if sweep.param not in params:
            raise BadDefinition('%s: sweep of unknown parameter %r.' % (defn.id, sweep.param))

    return defn

def names(defn, text, scope):
    try:
        free = expr.free_names(text)
    except SyntaxError as exc:
        raise BadDefinition('%s: %s' % (defn.id, exc))
    unbound = free - scope
    if unbound:
        raise BadDefinition('%s: %r refers to unbound %s.' % (defn.id, text, ', '.join(sorted(unbound))))


### Default Catalog

def builtin_catalog():
    path = os.path.join(os.path.dirname(__file__), 'catalog.yaml')
    (version, defns) = files.load(path, load)
    catalog = {}
    for defn in defns:
        if defn.id in catalog:
            raise BadDefinition('Duplicate id %r.' % defn.id)
        catalog[defn.id] = defn
    log.debug('catalog %s: %d entries', version, len(catalog))
    return (version, catalog)

(VERSION, CATALOG) = builtin_catalog()
