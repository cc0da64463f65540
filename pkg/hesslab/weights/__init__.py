# -*- coding: utf-8 -*-
# pylint: disable=undefined-variable
"""Weight functions, weighted leading parts and the weight conditions on anti-triangular Hessians."""
from .weight import *
from .verification import *

__all__ = (weight.__all__ + verification.__all__)
