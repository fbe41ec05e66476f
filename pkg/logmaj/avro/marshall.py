## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""marshall -- dump, load and validate Avro data"""

import json
import numpy as np
from avro import io as _io
from . import types

__all__ = ('dumps', 'loads', 'getstate', 'validate', 'JSONEncoder')


### JSON

## The JSON representation of Avro data is the wire format for every
## report and fixture.  Classes implement a special __json__() method
## to help produce the correct representation.

def dumps(obj, indent=None):
    """Serialize an object to a JSON string.  Keys are sorted so equal
    objects always produce the same bytes."""

    return json.dumps(obj, cls=JSONEncoder, sort_keys=True, allow_nan=True, indent=indent)

def loads(data, kind):
    """Unserialize an object from a JSON string.  The second argument
    is the object's type, schema or schema name."""

    return types.cast(json.loads(data), kind)

class JSONEncoder(json.JSONEncoder):

    def default(self, obj):
        ## Try to use the __json__() method to transform this object
        ## into a serializable value.
        to_json = getattr(type(obj), '__json__', None)
        if to_json:
            return to_json(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, np.generic):
            return obj.item()
        elif isinstance(obj, (set, frozenset)):
            return sorted(obj)
        return super(JSONEncoder, self).default(obj)


### Validation

def validate(obj, kind=None):
    """Check that obj conforms to its schema.  Raise ValueError if it
    doesn't; return obj otherwise."""

    schema = types.to_schema(type(obj) if kind is None else kind)
    if not _io.validate(schema, getstate(obj)):
        raise ValueError('Value does not conform to %s.' % types.type_name(schema))
    return obj


### Aux

def getstate(obj):
    """Reduce an object to the plain data the Avro validator and the
    JSON encoder understand."""

    to_json = getattr(type(obj), '__json__', None)
    if to_json:
        return getstate(to_json(obj))
    elif isinstance(obj, dict):
        return dict((k, getstate(v)) for (k, v) in obj.items())
    elif isinstance(obj, (list, tuple)):
        return [getstate(v) for v in obj]
    elif isinstance(obj, np.ndarray):
        return getstate(obj.tolist())
    elif isinstance(obj, np.bool_):
        return bool(obj)
    elif isinstance(obj, np.generic):
        return obj.item()
    return obj
