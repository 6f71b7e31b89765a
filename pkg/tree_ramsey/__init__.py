#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
tree_ramsey - arithmetic structures in dense subsets of products of k-ary trees.

Searches emit witnesses (arithmetic subtrees, regular embeddings, tree arrays,
product trees) that independent verifiers re-check; finite Markov systems give
the recurrence-function view of the same structures.
"""

from .errors import TreeRamseyError
from .formats import parse_set_file, read_witness, write_witness
from .search import SearchBudget, SearchOutcome, SearchStatus
from .semigroup import FreeWord, PairWord, Word
from .sets import GridSet, GridTreeSet, TreeSet, density_1d, density_2d
from .structures import Verdict
from .version import __version__, VERSION

__all__ = [
    'TreeRamseyError', 'parse_set_file', 'read_witness', 'write_witness',
    'SearchBudget', 'SearchOutcome', 'SearchStatus', 'FreeWord', 'PairWord', 'Word',
    'GridSet', 'GridTreeSet', 'TreeSet', 'density_1d', 'density_2d', 'Verdict',
    '__version__', 'VERSION',
]
