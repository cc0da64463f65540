# -*- coding: utf-8 -*-
# pylint: disable=undefined-variable
"""Transforms that make the Hessian of a polynomial zero below its anti-diagonal."""
from .kernel import *
from .classify import *
from .witness import *
from .weight_search import *
from .clearing import *
from .normalize import *
from .pipeline import *
from .corpus import *

__all__ = (
    kernel.__all__ + classify.__all__ + witness.__all__ + weight_search.__all__ + clearing.__all__ + normalize.__all__ +
    pipeline.__all__ + corpus.__all__
)
