"""Exact multivalued solutions of 1-D homentropic gas dynamics.

Thin wrapper over the pybind11 extension; everything lives in ``_gasfold``.
"""

from ._gasfold import *  # noqa: F401,F403
from ._gasfold import __doc__  # noqa: F401

__version__ = "0.1.0"
