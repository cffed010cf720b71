"""Finite-temperature Casimir thermodynamics for parallel plates."""

from ._core import *  # noqa: F401,F403
from ._core import (
    ConvergenceError,
    DegenerateError,
    DomainError,
    NoSolutionError,
    __doc__,
)

__version__ = "0.1.0"
