# -*- coding: utf-8 -*-
"""Command to invert polynomial maps with an anti-triangular Jacobian."""
import click

from hesslab.calculus import gradient
from hesslab.exceptions import NonConstantDeterminantError
from hesslab.gradmap import invert_antitriangular, normalized_gradient_map, verify_unipotent
from hesslab.triangulate import IsotropyObstruction, dillen_pipeline, normalize_linear_part
from . import echo
from .params import arguments, options
from .root import cmd_root
from .utils import attempt, emit, format_matrix, load_map, load_polynomial, read_input


def render_inverse(record: dict):
    if 'T' in record:
        yield 'T:'
        yield format_matrix(record['T'])
    yield f'F: ({", ".join(record["F"])})'
    yield f'G: ({", ".join(record["G"])})'
    yield f'constants: {", ".join(record["constants"])}'
    yield f'unipotent: {record["unipotent"]}'


@cmd_root.command('invert')
@arguments.POLYNOMIAL()
@options.VARIABLES()
@options.FIELD()
@options.PARAMETERS()
@options.FILE()
@options.OUTPUT()
@options.HEIGHT()
@options.BUDGET()
@options.DEGREE_LIMIT()
@click.option('--map', 'is_map', is_flag=True, help='Read the input as map components separated by semicolons.')
@options.TRACEBACK()
def cmd_invert(text, n, field, parameters, file, output, height, budget, degree_limit, is_map, traceback):
    """Invert the gradient map of f(Tx) for a transform T found by `antitri`.

    With `--map` the input is a polynomial map whose Jacobian is anti-triangular with nonzero constants on the
    anti-diagonal; it is inverted directly. Exits with status 1 if no transform exists for the polynomial.
    """
    text = read_input(text, file)

    if is_map:
        with attempt(include_traceback=traceback):
            mapping = load_map(text, n, parameters, field)
            witness = invert_antitriangular(mapping, degree_limit)
            unipotent = verify_unipotent(mapping)

        record = witness.to_record()
        record.update({'F': mapping.to_strings(), 'unipotent': unipotent})
        emit(record, output, render_inverse)
        return

    with attempt(include_traceback=traceback):
        f = load_polynomial(text, n, parameters, field)
        result = dillen_pipeline(f, height=height, budget=budget)

    if isinstance(result, IsotropyObstruction):
        echo.echo_critical('no transform exists: the quadratic part is anisotropic.', echo.ExitCode.NEGATIVE)

    with attempt(include_traceback=traceback):
        if result.constants is None:
            raise NonConstantDeterminantError(f'the Hessian determinant of `{f}` is not a nonzero constant.')

        mapping = gradient(result.transformed)
        witness = invert_antitriangular(mapping, degree_limit)
        lower, scale = normalize_linear_part(f, result.transform)
        unipotent = verify_unipotent(normalized_gradient_map(f, result.transform * lower, scale))

    record = witness.to_record()
    record.update({'T': result.transform.matrix.to_strings(), 'F': mapping.to_strings(), 'unipotent': unipotent})
    emit(record, output, render_inverse)
