# -*- coding: utf-8 -*-
# pylint: disable=undefined-variable
"""Quadratic forms, isotropy searches and descent certificates of anisotropy."""
from .residues import *
from .form import *
from .certificate import *
from .search import *
from .harness import *

__all__ = (residues.__all__ + form.__all__ + certificate.__all__ + search.__all__ + harness.__all__)
