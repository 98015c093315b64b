"""Python bindings for the stratavol core."""

from ._stratavol import *  # noqa: F401,F403
from ._stratavol import __doc__  # noqa: F401
