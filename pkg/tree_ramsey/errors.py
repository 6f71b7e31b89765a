#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exception hierarchy for tree_ramsey.

Library code raises these; the command line front-end maps them to exit codes.
Verifiers never raise for a structural violation, they return a Verdict.
"""

from typing import Optional


class TreeRamseyError(Exception):
    """Base class for every error raised by the package."""


class AlphabetMismatchError(TreeRamseyError, ValueError):
    """Two operands are built over alphabets of different sizes."""

    def __init__(self, left: int, right: int):
        super().__init__(f"alphabet mismatch: k={left} vs k={right}")
        self.left = left
        self.right = right


class EnumerationCapError(TreeRamseyError):
    """An enumeration would exceed the configured cap (instance too large)."""

    def __init__(self, requested: int, cap: int, what: str = "items"):
        super().__init__(f"enumerating {requested} {what} exceeds the cap of {cap}")
        self.requested = requested
        self.cap = cap


class BudgetExhaustedError(TreeRamseyError):
    """A search ran out of its node or wall-clock budget."""

    def __init__(self, nodes: int, reason: str = "node cap"):
        super().__init__(f"search budget exhausted after {nodes} nodes ({reason})")
        self.nodes = nodes
        self.reason = reason


class PreconditionError(TreeRamseyError, ValueError):
    """A documented precondition of an operation does not hold."""


class WitnessFormatError(TreeRamseyError, ValueError):
    """A witness map is not total on its domain or is otherwise malformed."""


class DimensionMismatchError(TreeRamseyError, ValueError):
    """A state function does not match the state count of a system."""


class InvalidSystemError(TreeRamseyError, ValueError):
    """A finite Markov system is malformed (bad indices or probabilities)."""


class InvalidPairError(TreeRamseyError, ValueError):
    """A pair of Markov systems lacks a property an operation relies on."""


class FormatParseError(TreeRamseyError, ValueError):
    """A text artifact could not be parsed."""

    def __init__(self, reason: str, line: Optional[int] = None, source: str = "<string>"):
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {reason}")
        self.reason = reason
        self.line = line
        self.source = source
