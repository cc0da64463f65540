# -*- coding: utf-8 -*-
"""Command to decide the isotropy of the quadratic part of a polynomial."""
from hesslab.quadform import QuadraticForm, isotropy_search
from . import echo
from .params import arguments, options
from .root import cmd_root
from .utils import attempt, emit, format_matrix, load_polynomial, read_input


def render_isotropy(record: dict):
    yield f'outcome: {record["outcome"]}'
    if 'vector' in record:
        yield f'vector: ({", ".join(record["vector"])})'
    if 'certificate' in record:
        certificate = record['certificate']
        yield f'prime: {certificate["prime"]}'
        for step in certificate['steps']:
            forced = ', '.join(f'x{index}' for index in step['forced'])
            yield f'modulo {step["modulus"]}: {forced} divisible by {certificate["prime"]}'
    else:
        yield f'searched up to height: {record["height"]}'


@cmd_root.command('isotropy')
@arguments.POLYNOMIAL()
@options.VARIABLES()
@options.FIELD()
@options.FILE()
@options.OUTPUT()
@options.HEIGHT()
@options.TRACEBACK()
def cmd_isotropy(text, n, field, file, output, height, traceback):
    """Search a nontrivial zero of the quadratic part of a polynomial or a certificate that none exists.

    Exits with status 1 when the form is certified anisotropic.
    """
    text = read_input(text, file)

    with attempt(include_traceback=traceback):
        form = QuadraticForm.from_polynomial(load_polynomial(text, n, (), field))
        result = isotropy_search(form, height)

    record = result.to_record()
    record['form'] = form.gram.to_strings()

    if output == 'text':
        echo.echo(format_matrix(record['form']))

    emit(record, output, render_isotropy)

    if result.is_anisotropic:
        echo.echo_critical('the form is anisotropic.', echo.ExitCode.NEGATIVE)

    if not result.is_isotropic:
        echo.echo_warning(f'the isotropy is undecided up to height {result.height}.')
