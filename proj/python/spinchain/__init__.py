"""Pulse-level simulator for a quantum register built on an Ising spin
chain with first- and second-neighbor couplings.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
