"""Event activity analytics: interarrival codebooks, activity tiers, early prediction."""

from ._eventvq import *  # noqa: F401,F403
from ._eventvq import __doc__  # noqa: F401

__version__ = "0.1.0"
