#!/usr/bin/env python
# -*- coding: utf-8 -*-

# run as a module using "python -m zsindex"
# available under the ISC license, see LICENSE

import sys

import zsindex

if __name__ == "__main__":
    sys.exit(zsindex.main())
