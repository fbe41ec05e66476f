## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""linalg -- small dense complex linear algebra for matrix
inequalities"""

from .errors import *
from .matrix import *
from .calculus import *
from .words import *
from . import jacobi, means
