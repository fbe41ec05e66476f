## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""yaml -- YAML loading for catalogs and run configuration"""

import yaml

__all__ = ('load', 'loads', 'dumps', 'Loader')


### Public interface

def load(stream):
    """Load YAML from a file object."""

    return yaml.load(stream, Loader)

def loads(data):
    """Load YAML from a string.

    >>> loads('''
    ... id: THM-3.1
    ... legs: [a, b]
    ... ''')
    {'id': 'THM-3.1', 'legs': ['a', 'b']}
    """

    return yaml.load(data, Loader)

def dumps(data):
    """Serialize data to un-flowed YAML, keeping key order."""

    return yaml.dump(data, None, yaml.SafeDumper, default_flow_style=False, sort_keys=False)


### Load

## Safe tags only; a key repeated in one mapping is an error rather
## than a silent overwrite.

Base = getattr(yaml, 'CSafeLoader', yaml.SafeLoader)

class Loader(Base):

    def construct_mapping(self, node, deep=False):
        if isinstance(node, yaml.MappingNode):
            keys = [self.construct_object(k, deep=True) for (k, _) in node.value]
            for (index, key) in enumerate(keys):
                if key in keys[:index]:
                    raise yaml.constructor.ConstructorError(
                        'while constructing a mapping', node.start_mark,
                        'found duplicate key %r' % (key, ), node.value[index][0].start_mark
                    )
        return super(Loader, self).construct_mapping(node, deep=deep)
