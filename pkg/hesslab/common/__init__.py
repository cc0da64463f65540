# -*- coding: utf-8 -*-
# pylint: disable=undefined-variable
"""Common utilities shared by all modules."""
from .lang import *
from .log import *

__all__ = (lang.__all__ + log.__all__)
