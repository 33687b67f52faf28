"""Regular asynchronous Boolean systems: orbits and serial connection."""

from ._regsys import *  # noqa: F401,F403
from ._regsys import __doc__  # noqa: F401
