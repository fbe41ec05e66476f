## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""types -- name registry and casting for Avro-described values"""

from collections.abc import Mapping
from avro import schema as _s

__all__ = ('cast', 'declare', 'get_type', 'get_schema', 'type_name', 'to_schema')

## When a type is declared, it's added to a global registry.  This is
## used in various places, especially by cast(), to map schema names
## to Python types.

def declare(type):
    """Add a new type to the global type namespace."""

    key = type_name(type)
    if TYPES.setdefault(key, type) is not type:
        raise TypeError('Type %r has already been declared.' % key)
    return type

def get_type(name):
    """Get a type by name."""

    found = TYPES.get(name)
    if found is None:
        raise NameError('Undefined type: %r.' % name)
    return found

def get_schema(name):
    """Get a loaded schema by its full name."""

    found = SCHEMATA.get(name)
    if found is None:
        raise NameError('Undefined schema: %r.' % name)
    return found

def type_name(type):
    if isinstance(type, _s.NamedSchema):
        return type.fullname
    elif isinstance(type, _s.Schema):
        return type.type
    return getattr(type, '__kind__', None) or type.__name__

def to_schema(kind):
    """Find the Avro schema for a schema object, a declared type or a
    full name."""

    if isinstance(kind, _s.Schema):
        return kind
    elif isinstance(kind, str):
        return get_schema(kind)
    try:
        return kind.__schema__
    except AttributeError:
        return get_schema(type_name(kind))


### Cast

## Values read from JSON are plain dictionaries, lists and numbers.
## cast() walks a schema and rebuilds the Python objects declared for
## each named record along the way.

def cast(value, kind):
    """Convert plain data into the Python representation of kind."""

    schema = to_schema(kind)
    try:
        method = CAST[schema.type]
    except KeyError:
        raise TypeError('Cannot cast to %r.' % type_name(schema))
    return method(value, schema)

def cast_record(value, schema):
    cls = TYPES.get(schema.fullname)
    if cls is not None:
        if isinstance(value, cls):
            return value
        return cls.__restore__(value)
    if not isinstance(value, Mapping):
        raise TypeError('Expected a mapping for %r, not %r.' % (schema.fullname, value))
    return dict((f.name, cast(value[f.name], f.type)) for f in schema.fields)

def cast_array(value, schema):
    return [cast(v, schema.items) for v in value]

def cast_map(value, schema):
    return dict((str(k), cast(v, schema.values)) for (k, v) in value.items())

def cast_union(value, schema):
    ## Only nullable unions are used: [null, T].
    if value is None:
        if any(s.type == 'null' for s in schema.schemas):
            return None
        raise TypeError('A null value does not fit %r.' % schema)
    for branch in schema.schemas:
        if branch.type != 'null':
            return cast(value, branch)
    raise TypeError('Only null fits %r.' % schema)

def cast_null(value, schema):
    if value is not None:
        raise TypeError('Expected null, not %r.' % value)
    return None

CAST = {
    'record': cast_record,
    'error': cast_record,
    'array': cast_array,
    'map': cast_map,
    'union': cast_union,
    'null': cast_null,
    'boolean': lambda v, s: bool(v),
    'int': lambda v, s: int(v),
    'long': lambda v, s: int(v),
    'float': lambda v, s: float(v),
    'double': lambda v, s: float(v),
    'string': lambda v, s: str(v),
}


### Registry

## TYPES maps full names onto the Python classes that represent them.
## SCHEMATA tracks each parsed schema by name.  They're kept separate
## because some schemata (Definition fragments, for example) have no
## class of their own.

TYPES = {}

SCHEMATA = {}
