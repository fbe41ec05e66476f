## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""randgen -- reproducible random matrices"""

from .streams import *
from .generate import *
