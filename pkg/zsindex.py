#!/usr/bin/env python
# -*- coding: utf-8 -*-

# run zsindex directly from the git directory
# available under the ISC license, see LICENSE

import sys

import zsindex

if __name__ == "__main__":
    sys.exit(zsindex.main())
