# -*- coding: utf-8 -*-
# pylint: disable=undefined-variable
"""Module for command line interface parameters."""
from .arguments import *
from .options import *
from .types import *

__all__ = (arguments.__all__ + options.__all__ + types.__all__)
