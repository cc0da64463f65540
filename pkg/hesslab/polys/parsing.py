# -*- coding: utf-8 -*-
"""Parser for the text representation of polynomials and scalars.

Grammar, with ``^`` binding tightest and unary signs allowed in front of any factor::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INTEGER)?
    atom   := NUMBER | NAME | '(' expr ')'

Numbers are integers or rationals ``p/q``. The name ``i`` denotes the imaginary unit and is only accepted over the
Gaussian rationals. Every other name must be a declared variable or parameter.
"""
import re
import typing

from hesslab.exceptions import ParsingError, UnknownVariableError
from .polynomial import Polynomial, PolynomialContext
from .scalars import Field

__all__ = ('parse_poly', 'parse_scalar', 'parse_vector')

TOKEN_REGEX = re.compile(
    r'\s*(?:(?P<number>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))'
)


class Token(typing.NamedTuple):
    kind: str
    value: str
    position: int


def tokenize(text: str) -> typing.List[Token]:
    """Split the text in tokens.

    :raises `~hesslab.exceptions.ParsingError`: on a character that does not start any token.
    """
    tokens = []
    position = 0
    stripped_end = len(text.rstrip())

    while position < stripped_end:
        match = TOKEN_REGEX.match(text, position)

        if match is None or match.end() == position:
            offset = len(text) - len(text[position:].lstrip())
            raise ParsingError(f'unexpected character `{text[offset]}`', offset)

        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()

    tokens.append(Token('end', '', len(text)))

    return tokens


class _Parser:
    """Recursive descent parser that evaluates directly into ring elements of the target context."""

    def __init__(self, text: str, context: PolynomialContext):
        self.context = context
        self.ring = context.ring
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.token
        self.index += 1
        return token

    def expect(self, value: str) -> Token:
        token = self.token
        if token.value != value or token.kind != 'op':
            found = 'end of input' if token.kind == 'end' else f'`{token.value}`'
            raise ParsingError(f'expected `{value}` but found {found}', token.position)
        return self.advance()

    def parse(self):
        if self.token.kind == 'end':
            raise ParsingError('empty expression', self.token.position)

        element = self.expression()

        if self.token.kind != 'end':
            raise ParsingError(f'unexpected token `{self.token.value}`', self.token.position)

        return element

    def expression(self):
        element = self.term()
        while self.token.kind == 'op' and self.token.value in '+-':
            operator = self.advance().value
            right = self.term()
            element = element + right if operator == '+' else element - right
        return element

    def term(self):
        element = self.unary()
        while self.token.kind == 'op' and self.token.value == '*':
            self.advance()
            element = element * self.unary()
        return element

    def unary(self):
        if self.token.kind == 'op' and self.token.value in '+-':
            operator = self.advance().value
            element = self.unary()
            return -element if operator == '-' else element
        return self.power()

    def power(self):
        element = self.atom()
        if self.token.kind == 'op' and self.token.value == '^':
            self.advance()
            token = self.advance()
            if token.kind != 'number' or '/' in token.value:
                raise ParsingError('exponents must be non-negative integers', token.position)
            element = element**int(token.value)
        return element

    def atom(self):
        token = self.advance()

        if token.kind == 'number':
            return self.ring(self.number(token))

        if token.kind == 'name':
            return self.name(token)

        if token.kind == 'op' and token.value == '(':
            element = self.expression()
            self.expect(')')
            return element

        found = 'end of input' if token.kind == 'end' else f'`{token.value}`'
        raise ParsingError(f'expected a number, a name or `(` but found {found}', token.position)

    def number(self, token: Token):
        domain = self.context.field.domain
        numerator, _, denominator = token.value.partition('/')
        if denominator and int(denominator) == 0:
            raise ParsingError('division by zero in a rational number', token.position)
        return domain.convert(int(numerator)) / domain.convert(int(denominator or 1))

    def name(self, token: Token):
        names = self.context.names

        if token.value in names:
            return self.ring.gens[names.index(token.value)]

        if token.value == 'i':
            if self.context.field is not Field.QI:
                raise ParsingError('the imaginary unit `i` requires the field `Qi`', token.position)
            domain = self.context.field.domain
            return self.ring(domain(0, 1))

        raise UnknownVariableError(f'the name `{token.value}` is not a declared variable or parameter.')


def parse_poly(
    text: str,
    variables: typing.Sequence[str],
    parameters: typing.Sequence[str] = (),
    field: typing.Union[Field, str] = Field.Q,  # pylint: disable=unsubscriptable-object
) -> Polynomial:
    """Parse the text of a polynomial.

    :param text: the polynomial, for example ``x1*x2 + 3/2*x2^2``.
    :param variables: the ordered variable names, or the number of variables for ``x1..xn``.
    :param parameters: the ordered parameter names.
    :param field: the scalar field of the coefficients.
    :return: the polynomial, expanded in canonical form.
    :raises `~hesslab.exceptions.ParsingError`: if the text does not follow the grammar.
    :raises `~hesslab.exceptions.UnknownVariableError`: if the text uses an undeclared name.
    """
    if isinstance(variables, int):
        context = PolynomialContext.standard(variables, parameters, Field.from_string(field))
    elif isinstance(variables, PolynomialContext):
        context = variables
    else:
        context = PolynomialContext(tuple(variables), tuple(parameters), Field.from_string(field))

    return Polynomial(context, _Parser(text, context).parse())


def parse_scalar(text: str, field: typing.Union[Field, str] = Field.Q):  # pylint: disable=unsubscriptable-object
    """Parse the text of a scalar such as ``-3/2`` or ``1+2*i``.

    :return: an element of the domain of the field.
    :raises `~hesslab.exceptions.ParsingError`: if the text is not a constant expression.
    """
    field = Field.from_string(field)
    context = PolynomialContext(('_',), (), field)

    try:
        polynomial = Polynomial(context, _Parser(str(text), context).parse())
    except UnknownVariableError as exception:
        raise ParsingError(f'`{text}` is not a scalar') from exception

    if not polynomial.is_constant():
        raise ParsingError(f'`{text}` is not a scalar')

    return polynomial.constant_value()


def parse_vector(text: str, field: typing.Union[Field, str] = Field.Q) -> typing.Tuple:  # pylint: disable=unsubscriptable-object
    """Parse a comma separated list of scalars, optionally wrapped in parentheses, such as ``(1, i)``."""
    stripped = str(text).strip()
    if stripped.startswith('(') and stripped.endswith(')'):
        stripped = stripped[1:-1]
    if not stripped.strip():
        raise ParsingError('empty vector')
    return tuple(parse_scalar(entry, field) for entry in stripped.split(','))
