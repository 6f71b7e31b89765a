#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Version information for the tree_ramsey package.
This file is automatically updated by the build process.
"""

__version__ = "0.1.0"
VERSION = __version__
