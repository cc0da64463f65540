# -*- coding: utf-8 -*-
"""JSON metadata of the named fixtures, one file per fixture."""
