## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""order -- log-majorization and unitarily invariant norms"""

from .majorization import *
from .norms import *
