# -*- coding: utf-8 -*-
"""Tests for the :mod:`~hesslab.cli.calculus` module."""
import json

from hesslab.cli import cmd_det, cmd_hessian, cmd_leadpart


def test_det(run_cli_command):
    """Test the `hesslab det` command."""
    result = run_cli_command(cmd_det, ['--n', '2', 'x1*x2 + x1^3'])
    assert result.output_lines == ['-1']


def test_det_infers_variables(run_cli_command):
    """Test the `hesslab det` command infers the number of variables from the input."""
    result = run_cli_command(cmd_det, ['x1*x3 + x2^2 + x3^3', '--out', 'json'])
    assert json.loads(result.output) == {'determinant': '-2', 'polynomial': 'x3^3 + x1*x3 + x2^2'}


def test_det_parameters(run_cli_command):
    """Test the `hesslab det` command with a parameter."""
    result = run_cli_command(cmd_det, ['t*x1^2 + x2^2', '--params', 't'])
    assert result.output_lines == ['4*t']


def test_det_file(run_cli_command, tmp_path):
    """Test the `hesslab det` command reading the polynomial from a file."""
    filepath = tmp_path / 'polynomial.txt'
    filepath.write_text('x1^2 + x2^2\n')

    result = run_cli_command(cmd_det, ['--file', str(filepath)])
    assert result.output_lines == ['4']


def test_det_errors(run_cli_command):
    """Test the `hesslab det` command exits with status 2 for invalid input."""
    result = run_cli_command(cmd_det, ['x1 +'], exit_code=2)
    assert '[poly_core.syntax]' in result.output

    run_cli_command(cmd_det, [], exit_code=2)
    run_cli_command(cmd_det, ['x1', '--field', 'R'], exit_code=2)


def test_hessian(run_cli_command):
    """Test the `hesslab hessian` command."""
    result = run_cli_command(cmd_hessian, ['x1*x2 + x1^3', '--out', 'json'])
    assert json.loads(result.output)['hessian'] == [['6*x1', '1'], ['1', '0']]

    result = run_cli_command(cmd_hessian, ['x1*x2 + x1^3'])
    assert [line.split() for line in result.output_lines] == [['6*x1', '1'], ['1', '0']]


def test_leadpart(run_cli_command):
    """Test the `hesslab leadpart` command."""
    result = run_cli_command(cmd_leadpart, ['x1*x2 + x2^3 + x1^2', '--weights', '3,2'])
    assert result.output_lines == ['x2^3 + x1^2', 'weight: 6']

    result = run_cli_command(cmd_leadpart, ['x1*x2', '--weights', '1,1/2', '--out', 'json'])
    assert json.loads(result.output) == {'leading': 'x1*x2', 'polynomial': 'x1*x2', 'w': ['1', '1/2'], 'weight': '3/2'}

    run_cli_command(cmd_leadpart, ['x1*x2', '--weights', '1,2,3'], exit_code=2)
