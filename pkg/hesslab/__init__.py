# -*- coding: utf-8 -*-
"""Exact symbolic toolkit for polynomials with constant Hessian determinants."""
__version__ = '0.1.0a0'
