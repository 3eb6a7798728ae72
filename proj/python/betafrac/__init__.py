"""beta-fractional calculus bindings."""

from ._betafrac import *  # noqa: F401,F403
from ._betafrac import __doc__  # noqa: F401
