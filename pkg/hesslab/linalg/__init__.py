# -*- coding: utf-8 -*-
# pylint: disable=undefined-variable
"""Exact linear algebra over the scalar fields: matrices, transforms and congruence constructions."""
from .matrix import *
from .factorization import *

__all__ = (matrix.__all__ + factorization.__all__)
