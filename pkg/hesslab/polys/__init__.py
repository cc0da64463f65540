# -*- coding: utf-8 -*-
# pylint: disable=undefined-variable
"""Exact sparse multivariate polynomials over the rationals and the Gaussian rationals."""
from .scalars import *
from .polynomial import *
from .parsing import *

__all__ = (scalars.__all__ + polynomial.__all__ + parsing.__all__)
