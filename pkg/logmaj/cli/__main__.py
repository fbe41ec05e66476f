## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""__main__ -- python -m logmaj.cli"""

import sys
from .main import main

sys.exit(main())
