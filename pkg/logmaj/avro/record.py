## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""record -- slotted Python classes backed by record schemata

    class Summary(avro.structure('logmaj.Summary')):
        pass

Summary gets one slot per schema field, a constructor that takes
field values by position or name, and JSON round trips.  Field types
aren't checked on construction; marshall.validate() does that."""

import copy
from collections.abc import Mapping
from . import types

__all__ = ('structure', 'Structure')

def structure(name):
    """An abstract base bound to the declared record name."""

    short = name.rpartition('.')[2]
    return RecordType(short, (Structure, ), dict(__kind__=name, __abstract__=True, __slots__=()))

class RecordType(type):

    def __new__(mcls, name, bases, attr):
        kind = attr.get('__kind__')
        if kind is None:
            attr.setdefault('__slots__', ())
        else:
            record = attr['__schema__'] = types.get_schema(kind)
            attr.setdefault('__doc__', record.props.get('doc', ''))
            inherited = {n for b in bases for n in getattr(b, '__all__', ())}
            attr['__slots__'] = tuple(attr.get('__slots__', ())) + tuple(
                f.name for f in record.fields if f.name not in inherited
            )

        cls = super(RecordType, mcls).__new__(mcls, name, bases, attr)
        record = getattr(cls, '__schema__', None)
        cls.__all__ = tuple(f.name for f in record.fields) if record is not None else ()
        if not attr.get('__abstract__', False):
            types.declare(cls)
        return cls

def field_value(cls, field, given):
    if field.name in given:
        return given[field.name]
    elif field.has_default:
        return copy.deepcopy(field.default)
    raise TypeError('%s needs a value for %r.' % (cls.__name__, field.name))

class Structure(object, metaclass=RecordType):
    __abstract__ = True

    def __init__(self, *args, **kw):
        cls = type(self)
        if len(args) > len(cls.__all__):
            raise TypeError('%s has %d fields; got %d values.' % (
                cls.__name__, len(cls.__all__), len(args)))

        given = dict(zip(cls.__all__, args))
        for (name, value) in kw.items():
            if name not in cls.__all__:
                raise TypeError('%s has no field %r.' % (cls.__name__, name))
            elif name in given:
                raise TypeError('%r passed by position and by name.' % name)
            given[name] = value

        for field in cls.__schema__.fields:
            setattr(self, field.name, field_value(cls, field, given))

    def __iter__(self):
        return (getattr(self, n) for n in self.__all__)

    def __repr__(self):
        pairs = ('%s=%r' % (n, v) for (n, v) in zip(self.__all__, self))
        return '%s(%s)' % (type(self).__name__, ', '.join(pairs))

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return tuple(self) == tuple(other)

    def __ne__(self, other):
        same = self.__eq__(other)
        return same if same is NotImplemented else not same

    __hash__ = None

    def __copy__(self):
        return type(self).__restore_fields__(dict(zip(self.__all__, self)))

    def replace(self, **kw):
        return copy.copy(self).update(**kw)

    def update(self, **kw):
        for (name, value) in kw.items():
            setattr(self, name, value)
        return self

    ## JSON

    def __json__(self):
        return dict(zip(self.__all__, self))

    @classmethod
    def __restore__(cls, state):
        if not isinstance(state, Mapping):
            raise TypeError('Cannot restore %s from %r.' % (cls.__name__, state))
        values = {}
        for field in cls.__schema__.fields:
            if not (field.name in state or field.has_default):
                raise ValueError('%s is missing field %r.' % (cls.__name__, field.name))
            values[field.name] = types.cast(field_value(cls, field, state), field.type)
        return cls.__restore_fields__(values)

    @classmethod
    def __restore_fields__(cls, values):
        obj = object.__new__(cls)
        for (name, value) in values.items():
            setattr(obj, name, value)
        return obj
