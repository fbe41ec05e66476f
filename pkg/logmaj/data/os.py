## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""os -- reading and atomically replacing text files

Reports, fixtures and catalog dumps are only ever replaced whole:
readers see the old file or the new one, never a partial write."""

import os, errno, tempfile, contextlib as ctx

__all__ = ('load', 'contents', 'listing', 'atomic', 'put', 'dump')

ENCODING = 'utf-8'


### Reading

def load(path, parse, *default):
    """Call parse() on an open port for path.  A missing file gives
    the default when one is passed."""

    try:
        port = open(path, 'r', encoding=ENCODING)
    except IOError as exc:
        if default and exc.errno == errno.ENOENT:
            return default[0]
        raise
    with port:
        return parse(port)

def contents(path, *default):
    return load(path, lambda port: port.read(), *default)

def listing(folder, suffix):
    """The sorted stems of the files in folder ending with suffix."""

    return sorted(n[:-len(suffix)] for n in os.listdir(folder) if n.endswith(suffix))


### Writing

@ctx.contextmanager
def atomic(path):
    """Yield a port; what's written to it replaces path when the block
    exits normally.  On an exception path is left alone."""

    folder = os.path.dirname(os.path.abspath(path))
    port = tempfile.NamedTemporaryFile(
        'w', encoding=ENCODING, dir=folder, prefix='.atomic-', suffix='.new', delete=False
    )
    try:
        with port:
            yield port
    except BaseException:
        os.unlink(port.name)
        raise
    os.replace(port.name, path)

def put(path, text):
    with atomic(path) as port:
        port.write(text)

def dump(path, write, data):
    """Replace path with whatever write(data, port) produces."""

    with atomic(path) as port:
        write(data, port)
