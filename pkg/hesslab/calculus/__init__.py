# -*- coding: utf-8 -*-
# pylint: disable=undefined-variable
"""Symbolic gradients, Hessians, Jacobians and exact determinants of polynomial matrices."""
from .matrices import *
from .determinant import *
from .derivatives import *

__all__ = (matrices.__all__ + determinant.__all__ + derivatives.__all__)
