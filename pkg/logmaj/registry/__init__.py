## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""registry -- the inequality catalog and the suites that check it"""

from .relations import *
from .catalog import *
from .domain import *
from .evaluate import *
from .suite import *
from . import functions
