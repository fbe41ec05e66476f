## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""cli -- command line front end"""

from .config import *
from .report import *
from .main import *
