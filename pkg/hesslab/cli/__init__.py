# -*- coding: utf-8 -*-
# pylint: disable=wrong-import-position,wildcard-import
"""Module for the command line interface."""
import click_completion

# Activate the completion of parameter types provided by the click_completion package
click_completion.init()

from .root import cmd_root
from .calculus import cmd_hessian, cmd_det, cmd_leadpart
from .triangulate import cmd_classify, cmd_antitri
from .gradmap import cmd_invert
from .quadform import cmd_isotropy
from .verify import cmd_verify
