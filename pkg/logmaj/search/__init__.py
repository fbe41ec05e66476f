## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""search -- hunt for counterexamples to conjectures"""

from .hunt import *
