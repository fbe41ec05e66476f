## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""avro -- Python types for records declared by Avro schemata"""

from .types import *
from .marshall import *
from .schema import *
from .record import *
