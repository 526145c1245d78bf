"""Agent-based fiat money price discovery simulator."""

from ._fiatsim import *  # noqa: F401,F403
from ._fiatsim import __doc__  # noqa: F401

__version__ = "0.1.0"
