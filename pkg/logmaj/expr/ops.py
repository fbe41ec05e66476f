## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""ops -- default operations available in an expression"""

## Note: __all__ is not defined.  Follow the convention of prefixing
## private bindings with an underscore; this module is imported
## entirely into the global evaluation context.

import math as _math

inf = _math.inf

pi = _math.pi

min = min

max = max

def abs(value):
    return value.__abs__()

def sqrt(value):
    return _math.sqrt(value)

def log(value):
    return _math.log(value) if value > 0 else -inf

def exp(value):
    return _math.exp(value)
