# -*- coding: utf-8 -*-
"""Tests for the :mod:`~hesslab.cli.triangulate` module."""
import json

from hesslab.cli import cmd_antitri, cmd_classify


def test_classify(run_cli_command):
    """Test the `hesslab classify` command."""
    result = run_cli_command(cmd_classify, ['(x1 + x2)^3', '--out', 'json'])
    record = json.loads(result.output)

    assert record['case_tag'] == 'InOneForm'
    assert record['forms'] == ['x1 + x2']

    result = run_cli_command(cmd_classify, ['(x1 + x2)^3'])
    assert result.output_lines[:2] == ['class: InOneForm', 'l1: x1 + x2']


def test_classify_non_degenerate(run_cli_command):
    """Test the `hesslab classify` command for a polynomial with a nonzero Hessian determinant."""
    result = run_cli_command(cmd_classify, ['x1*x2'])
    assert result.output_lines[0] == 'class: NonDegenerate'


def test_classify_errors(run_cli_command):
    """Test the `hesslab classify` command exits with status 2 for more than three variables."""
    run_cli_command(cmd_classify, ['x1*x4^2'], exit_code=2)


def test_antitri(run_cli_command):
    """Test the `hesslab antitri` command."""
    result = run_cli_command(cmd_antitri, ['x1*x2 + x2^3', '--out', 'json'])
    record = json.loads(result.output)

    assert record['case_tag'] == 'weight'
    assert record['T'] == [['0', '1'], ['1', '0']]
    assert record['w'] == ['1', '2']
    assert record['constants'] == ['1', '1']

    result = run_cli_command(cmd_antitri, ['x1*x2 + x2^3'])
    assert result.output_lines[0] == 'case: weight'
    assert 'w: (1, 2)' in result.output_lines


def test_antitri_normalize(run_cli_command):
    """Test the `hesslab antitri --normalize` command."""
    result = run_cli_command(cmd_antitri, ['x1*x2 + x2^3', '--normalize', '--out', 'json'])
    normalization = json.loads(result.output)['normalization']

    assert normalization == {'L': [['1', '0'], ['0', '1']], 'c': '1', 'TL': [['0', '1'], ['1', '0']]}


def test_antitri_obstruction(run_cli_command):
    """Test the `hesslab antitri` command exits with status 1 for an anisotropic quadratic polynomial."""
    result = run_cli_command(cmd_antitri, ['x1^2 + x2^2'], exit_code=1)
    assert 'case: isotropy_obstruction' in result.output_lines

    result = run_cli_command(cmd_antitri, ['x1^2 + x2^2', '--field', 'Qi', '--out', 'json'])
    assert json.loads(result.output)['case_tag'] == 'quadratic'


def test_antitri_errors(run_cli_command):
    """Test the `hesslab antitri` command exits with status 2 for a non-constant Hessian determinant."""
    result = run_cli_command(cmd_antitri, ['x1^3 + x2^2'], exit_code=2)
    assert 'is not constant' in result.output
