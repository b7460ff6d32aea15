"""Exact computations with finite categories parametrized over an orbital base."""

from .errors import *  # noqa: F401,F403
