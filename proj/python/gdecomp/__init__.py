"""Decompositions of mK_n into copies of a graph."""

from ._core import *  # noqa: F401,F403
from ._core import Error, InvalidArgument, ParseError, BudgetExceeded  # noqa: F401

__version__ = "0.1.0"
