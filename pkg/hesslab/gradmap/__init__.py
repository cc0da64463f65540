# -*- coding: utf-8 -*-
# pylint: disable=undefined-variable
"""Gradient maps: the Keller condition, exact inversion and unipotency."""
from .keller import *
from .inversion import *
from .unipotent import *

__all__ = (keller.__all__ + inversion.__all__ + unipotent.__all__)
