## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""streams -- counter-based random streams addressed by labels

A Stream is a seed plus a path of labels.  Its generator is a Philox
bit generator keyed by a hash of that path, so the numbers drawn for
(seed, "THM-3.1", 4, 17) never depend on what else was drawn, in what
order, or on which thread.

    >>> stream = Stream(7, 'THM-3.1', 4, 17)
    >>> rng = stream.split('inputs', 'A').generator()
"""

import hashlib
import numpy as np

__all__ = ('Stream', )

class Stream(object):
    __slots__ = ('seed', 'labels', 'key')

    def __init__(self, seed, *labels):
        self.seed = int(seed)
        self.labels = tuple(labels)
        for label in self.labels:
            if not isinstance(label, (str, int)):
                raise TypeError('Stream labels are strings or integers, not %r.' % (label, ))
        path = repr((self.seed, ) + self.labels).encode('utf-8')
        self.key = int.from_bytes(hashlib.sha1(path).digest()[:16], 'little')

    def __repr__(self):
        return 'Stream(%s)' % ', '.join(repr(x) for x in (self.seed, ) + self.labels)

    def __eq__(self, other):
        if isinstance(other, Stream):
            return (self.seed, self.labels) == (other.seed, other.labels)
        return NotImplemented

    def __hash__(self):
        return hash((self.seed, self.labels))

    def split(self, *labels):
        """A child stream; its numbers are independent of the
        parent's."""

        return Stream(self.seed, *(self.labels + labels))

    def generator(self):
        """A fresh numpy Generator positioned at the start of this
        stream."""

        return np.random.Generator(np.random.Philox(key=self.key))
