"""Computable Orlicz-Sobolev analysis on degenerate planes.

Thin re-export of the compiled core: Luxemburg norms, subunit ball geometry,
accumulating cutoffs, the doubling recursion, and whole-experiment runners.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
