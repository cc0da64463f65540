# -*- coding: utf-8 -*-
"""Commands to classify zero Hessian polynomials and to find transforms with an anti-triangular Hessian."""
import click

from hesslab.polys import format_scalar
from hesslab.triangulate import IsotropyObstruction, classify_polynomial, dillen_pipeline, normalize_linear_part
from . import echo
from .params import arguments, options
from .root import cmd_root
from .utils import attempt, emit, format_matrix, load_polynomial, read_input


def render_classification(record: dict):
    yield f'class: {record["case_tag"]}'
    for index, form in enumerate(record['forms'], 1):
        yield f'l{index}: {form}'
    if 'family' in record:
        yield f'g: ({", ".join(record["family"])})'
    if 'reduced' in record:
        yield f'reduced: {record["reduced"]}'
    if 'T' in record:
        yield 'T:'
        yield format_matrix(record['T'])


def render_witness(record: dict):
    """Yield the lines of the text rendering of a witness or an obstruction record."""
    yield f'case: {record["case_tag"]}'

    if record['case_tag'] == 'isotropy_obstruction':
        yield 'the quadratic part is anisotropic:'
        yield format_matrix(record['form'])
        return

    yield 'T:'
    yield format_matrix(record['T'])

    if record['w'] is not None:
        yield f'w: ({", ".join(record["w"])})'
    if record['leading'] is not None:
        yield f'leading: {record["leading"]}'
    if record['constants'] is not None:
        yield f'constants: {", ".join(record["constants"])}'

    yield 'Hessian of f(Tx):'
    yield format_matrix(record['hessian'])

    if 'normalization' in record:
        yield f'c: {record["normalization"]["c"]}'
        yield 'TL:'
        yield format_matrix(record['normalization']['TL'])


@cmd_root.command('classify')
@arguments.POLYNOMIAL()
@options.VARIABLES()
@options.FIELD()
@options.FILE()
@options.OUTPUT()
@options.TRACEBACK()
def cmd_classify(text, n, field, file, output, traceback):
    """Classify a polynomial in at most three variables with a zero Hessian determinant."""
    text = read_input(text, file)

    with attempt(include_traceback=traceback):
        f = load_polynomial(text, n, (), field)
        classification = classify_polynomial(f)

    emit(classification.to_record(), output, render_classification)


@cmd_root.command('antitri')
@arguments.POLYNOMIAL()
@options.VARIABLES()
@options.FIELD()
@options.FILE()
@options.OUTPUT()
@options.HEIGHT()
@options.BUDGET()
@click.option('--normalize', is_flag=True, help='Also normalize the Hessian of f(Tx) at the origin to c times J.')
@options.TRACEBACK()
def cmd_antitri(text, n, field, file, output, height, budget, normalize, traceback):
    """Find T such that the Hessian of f(Tx) is zero below its anti-diagonal.

    Exits with status 1 if the quadratic part of a quadratic polynomial is anisotropic, which rules out such T.
    """
    text = read_input(text, file)

    with attempt(include_traceback=traceback):
        f = load_polynomial(text, n, (), field)
        result = dillen_pipeline(f, height=height, budget=budget)

    record = result.to_record()

    if isinstance(result, IsotropyObstruction):
        emit(record, output, render_witness)
        echo.echo_critical('no transform exists: the quadratic part is anisotropic.', echo.ExitCode.NEGATIVE)

    if normalize:
        if result.constants is None:
            echo.echo_warning('the Hessian determinant is not a nonzero constant, skipping the normalization.')
        else:
            with attempt(include_traceback=traceback):
                lower, scale = normalize_linear_part(f, result.transform)
            combined = result.transform * lower
            record['normalization'] = {
                'L': lower.matrix.to_strings(),
                'c': format_scalar(scale),
                'TL': combined.matrix.to_strings(),
            }

    emit(record, output, render_witness)
