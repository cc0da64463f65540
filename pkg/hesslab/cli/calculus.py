# -*- coding: utf-8 -*-
"""Commands computing Hessians, their determinants and weighted leading parts."""
from hesslab.calculus import hessian, hessian_determinant
from hesslab.weights import w_leading_part
from .params import arguments, options
from .root import cmd_root
from .utils import attempt, emit, format_matrix, load_polynomial, read_input


@cmd_root.command('hessian')
@arguments.POLYNOMIAL()
@options.VARIABLES()
@options.FIELD()
@options.PARAMETERS()
@options.FILE()
@options.OUTPUT()
@options.TRACEBACK()
def cmd_hessian(text, n, field, parameters, file, output, traceback):
    """Print the Hessian matrix of a polynomial."""
    text = read_input(text, file)

    with attempt(include_traceback=traceback):
        f = load_polynomial(text, n, parameters, field)
        matrix = hessian(f)

    record = {'polynomial': str(f), 'hessian': matrix.to_strings()}
    emit(record, output, lambda record: [format_matrix(record['hessian'])])


@cmd_root.command('det')
@arguments.POLYNOMIAL()
@options.VARIABLES()
@options.FIELD()
@options.PARAMETERS()
@options.FILE()
@options.OUTPUT()
@options.TRACEBACK()
def cmd_det(text, n, field, parameters, file, output, traceback):
    """Print the determinant of the Hessian matrix of a polynomial."""
    text = read_input(text, file)

    with attempt(include_traceback=traceback):
        f = load_polynomial(text, n, parameters, field)
        determinant = hessian_determinant(f)

    record = {'polynomial': str(f), 'determinant': str(determinant)}
    emit(record, output, lambda record: [record['determinant']])


@cmd_root.command('leadpart')
@arguments.POLYNOMIAL()
@options.WEIGHTS()
@options.VARIABLES()
@options.FIELD()
@options.PARAMETERS()
@options.FILE()
@options.OUTPUT()
@options.TRACEBACK()
def cmd_leadpart(text, weights, n, field, parameters, file, output, traceback):
    """Print the weighted leading part of a polynomial and its weight."""
    text = read_input(text, file)

    with attempt(include_traceback=traceback):
        f = load_polynomial(text, n, parameters, field)
        leading = w_leading_part(f, weights)

    record = {
        'polynomial': str(f),
        'w': weights.to_strings(),
        'leading': str(leading.part),
        'weight': str(leading.value),
    }
    emit(record, output, lambda record: [record['leading'], f'weight: {record["weight"]}'])
