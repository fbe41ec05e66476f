## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""config -- resolve and check run configurations

A RunConfig starts from the schema defaults.  A config file (YAML, so
JSON works too) overrides them, and command line flags override the
file:

    dims: [2, 3]
    trials: 50
    tol: 1.0e-10
"""

import logging
from .. import avro
from ..data import yaml, os as files
from ..registry import Tolerances

## Reports embed search reports; their schema must load first.
from .. import search as _search

__all__ = (
    'RunConfig', 'UsageError', 'resolve', 'load_config', 'check',
    'tolerances', 'COMMANDS', 'FORMATS', 'MIN_DIM', 'DIM_LIMIT'
)

log = logging.getLogger(__name__)

avro.require('cli.json')

COMMANDS = ('verify', 'search', 'reproduce', 'registry-dump')

FORMATS = ('json', 'csv-summary')

MIN_DIM = 2

## --max-dim may raise the dimension cap up to here.
DIM_LIMIT = 64

class UsageError(Exception):
    """Bad flags or configuration."""

class RunConfig(avro.structure('logmaj.RunConfig')):
    pass


### Resolve

def resolve(command, flags=None, path=None):
    """Build a checked RunConfig for command.  flags maps field names
    to values; None values are ignored."""

    values = {}
    if path:
        values.update(load_config(path))
    values.update((k, v) for (k, v) in (flags or {}).items() if v is not None)
    values['command'] = command

    try:
        config = RunConfig(**values)
    except TypeError as exc:
        raise UsageError(str(exc))
    return check(config)

def load_config(path):
    try:
        data = files.load(path, yaml.load)
    except IOError as exc:
        raise UsageError('Cannot read config %r: %s' % (path, exc))
    except Exception as exc:
        raise UsageError('Bad config %r: %s' % (path, exc))

    if data is None:
        return {}
    elif not isinstance(data, dict):
        raise UsageError('Config %r must be a mapping, not %r.' % (path, type(data).__name__))

    known = set(RunConfig.__all__) - set(['command'])
    unknown = sorted(set(data) - known)
    if unknown:
        raise UsageError('Config %r has unknown settings: %s.' % (path, ', '.join(unknown)))
    log.debug('config %s: %r', path, data)
    return data


### Check

def check(config):
    """Raise UsageError unless config is usable; return it."""

    if config.command not in COMMANDS:
        raise UsageError('Unknown command %r.' % config.command)
    elif config.format not in FORMATS:
        raise UsageError('Format must be one of %s, not %r.' % (', '.join(FORMATS), config.format))

    for name in ('tol', 'tol_det', 'strictness', 'initial'):
        if not number(getattr(config, name)) > 0:
            raise UsageError('--%s must be positive, not %r.' % (name.replace('_', '-'), getattr(config, name)))

    if not 0 < number(config.anneal) <= 1:
        raise UsageError('--anneal must be in (0, 1], not %r.' % config.anneal)
    elif config.cond is not None and not number(config.cond) >= 1:
        raise UsageError('--cond must be at least 1, not %r.' % config.cond)
    elif not MIN_DIM <= config.max_dim <= DIM_LIMIT:
        raise UsageError('--max-dim must be in [%d, %d], not %r.' % (MIN_DIM, DIM_LIMIT, config.max_dim))
    elif not config.dims:
        raise UsageError('At least one dimension is needed.')

    for dim in config.dims:
        if not MIN_DIM <= dim <= config.max_dim:
            raise UsageError('Dimension %r is outside [%d, %d]; see --max-dim.' % (dim, MIN_DIM, config.max_dim))

    if config.trials < 1:
        raise UsageError('--trials must be positive, not %r.' % config.trials)
    elif config.budget < 1:
        raise UsageError('--budget must be positive, not %r.' % config.budget)
    elif config.hill_steps < 0:
        raise UsageError('--hill-steps must not be negative, not %r.' % config.hill_steps)

    try:
        return avro.validate(config)
    except ValueError as exc:
        raise UsageError(str(exc))

def number(value):
    try:
        return float(value)
    except (TypeError, ValueError):
        raise UsageError('Expected a number, not %r.' % (value, ))

def tolerances(config):
    return Tolerances(config.tol, config.tol_det, config.strictness)
