# -*- coding: utf-8 -*-
# pylint: disable=undefined-variable
"""Named polynomials and quadratic forms whose properties are recomputed end to end."""
from .registry import *
from .verification import *

__all__ = (registry.__all__ + verification.__all__)
