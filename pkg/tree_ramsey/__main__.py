#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Main entry point for the tree_ramsey package.
"""

import sys
from .cli import main

if __name__ == "__main__":
    sys.exit(main())
