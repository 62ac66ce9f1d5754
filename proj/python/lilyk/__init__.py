"""Kernelization for distance-r domination problems on sparse graphs."""

from ._core import *  # noqa: F401,F403
from ._core import InputError, ResourceGuardError, InternalError  # noqa: F401

__version__ = "0.1.0"
