## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""logmaj -- numerical checks of log-majorization and matrix mean
inequalities"""
