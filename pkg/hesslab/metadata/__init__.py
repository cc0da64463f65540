# -*- coding: utf-8 -*-
"""Packaged data files."""
