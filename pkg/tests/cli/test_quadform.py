# -*- coding: utf-8 -*-
"""Tests for the :mod:`~hesslab.cli.quadform` module."""
import json

from hesslab.cli import cmd_isotropy


def test_isotropy_witness(run_cli_command):
    """Test the `hesslab isotropy` command for an isotropic form."""
    result = run_cli_command(cmd_isotropy, ['x1^2 - x2^2', '--height', '3'])

    assert 'outcome: witness' in result.output_lines
    assert 'vector: (1, -1)' in result.output_lines


def test_isotropy_certificate(run_cli_command):
    """Test the `hesslab isotropy` command exits with status 1 for an anisotropic form."""
    result = run_cli_command(cmd_isotropy, ['x1^2 + x2^2 + x3^2'], exit_code=1)

    assert 'outcome: anisotropic_certificate' in result.output_lines
    assert 'prime: 2' in result.output_lines


def test_isotropy_gaussian(run_cli_command):
    """Test the `hesslab isotropy` command for the anisotropic Gaussian form."""
    options = ['x1^2 + 3*x2^2 + 5*x3^2 + 10*x4^2', '--field', 'Qi', '--height', '1', '--out', 'json']
    result = run_cli_command(cmd_isotropy, options, exit_code=1)

    assert '"outcome": "anisotropic_certificate"' in result.output


def test_isotropy_ignores_other_degrees(run_cli_command):
    """Test the `hesslab isotropy` command only looks at the quadratic part."""
    result = run_cli_command(cmd_isotropy, ['x1*x2 + x1^3 + 1', '--out', 'json'])
    assert json.loads(result.output)['form'] == [['0', '1/2'], ['1/2', '0']]
