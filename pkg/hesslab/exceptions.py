# -*- coding: utf-8 -*-
"""Exceptions raised by the `hesslab` package.

Every exception carries a module qualified ``code`` that the command line interface reports next to the message, so
scripted experiments can tell failures apart without parsing free text.
"""

__all__ = (
    'HesslabError', 'ParsingError', 'UnknownVariableError', 'UnsupportedFieldError', 'ZeroPolynomialError',
    'IndexOutOfRangeError', 'DimensionMismatchError', 'SizeLimitExceededError', 'SingularMatrixError',
    'NotSymmetricError', 'NotAntiTriangularError', 'MiddleEntryNotSquareError', 'SquareRootUnavailableError',
    'RankDeficientError', 'InvalidArgumentError', 'UnstableLeadingPartError', 'PreconditionUnmetError',
    'EmptyKernelError', 'NotZeroHessianError', 'NeedsExtensionError', 'UnsupportedDimensionError',
    'ZeroHessianDeterminantError', 'BudgetExceededError', 'HypothesesUnmetError', 'NonConstantDeterminantError',
    'IsotropyUndecidedError', 'NonConstantAntiDiagonalError', 'DegreeLimitExceededError', 'MalformedCertificateError',
    'UnknownFixtureError'
)


class HesslabError(Exception):
    """Base class for all exceptions raised by `hesslab`."""

    code = 'hesslab.error'


class ParsingError(HesslabError, ValueError):
    """Raised when the text of a polynomial or scalar does not follow the grammar."""

    code = 'poly_core.syntax'

    def __init__(self, message: str, position: int = None):
        self.message = message
        self.position = position
        super().__init__(message if position is None else f'{message} (at position {position})')


class UnknownVariableError(HesslabError, ValueError):
    """Raised when a polynomial refers to a name that is neither a declared variable nor a parameter."""

    code = 'poly_core.unknown_variable'


class UnsupportedFieldError(HesslabError, ValueError):
    """Raised when a scalar field other than the rationals or the Gaussian rationals is requested."""

    code = 'poly_core.unsupported_field'


class ZeroPolynomialError(HesslabError, ValueError):
    """Raised when an operation needs a nonzero polynomial."""

    code = 'poly_core.zero_polynomial'


class IndexOutOfRangeError(HesslabError, IndexError):
    """Raised when a variable index is outside of the declared variables."""

    code = 'poly_core.index_out_of_range'


class DimensionMismatchError(HesslabError, ValueError):
    """Raised when the dimensions or contexts of the operands do not fit together."""

    code = 'poly_core.dimension_mismatch'


class SizeLimitExceededError(HesslabError, ValueError):
    """Raised when a polynomial determinant is requested for a matrix larger than the configured limit."""

    code = 'calculus.size_limit_exceeded'


class SingularMatrixError(HesslabError, ValueError):
    """Raised when an inverse of a singular matrix is requested."""

    code = 'exact_linalg.singular'


class NotSymmetricError(HesslabError, ValueError):
    """Raised when a symmetric matrix is required."""

    code = 'exact_linalg.not_symmetric'


class NotAntiTriangularError(HesslabError, ValueError):
    """Raised when a matrix is required to be zero below its anti-diagonal but is not."""

    code = 'exact_linalg.not_anti_triangular'


class MiddleEntryNotSquareError(HesslabError, ValueError):
    """Raised when the middle entry of an odd sized matrix has no square root in the scalar field."""

    code = 'exact_linalg.middle_entry_not_square'


class SquareRootUnavailableError(HesslabError, ValueError):
    """Raised when a construction needs a square root that does not exist in the scalar field."""

    code = 'exact_linalg.square_root_unavailable'


class RankDeficientError(HesslabError, ValueError):
    """Raised when the nested complements of a flag construction do not exist."""

    code = 'exact_linalg.rank_deficient'


class InvalidArgumentError(HesslabError, ValueError):
    """Raised when an argument is outside of its admissible range."""

    code = 'weights.invalid_argument'


class UnstableLeadingPartError(HesslabError, ValueError):
    """Raised when the weighted leading part changes for every positive step along a direction."""

    code = 'weights.unstable_leading_part'


class PreconditionUnmetError(HesslabError, ValueError):
    """Raised when the stated preconditions of a verification do not hold for the given input."""

    code = 'weights.precondition_unmet'


class EmptyKernelError(HesslabError, ValueError):
    """Raised when a degenerating transform is requested without kernel vectors."""

    code = 'triangulate.empty_kernel'


class NotZeroHessianError(HesslabError, ValueError):
    """Raised when a polynomial with a nonzero Hessian determinant is passed to the zero Hessian classification."""

    code = 'triangulate.not_zero_hessian'


class NeedsExtensionError(HesslabError):
    """Raised when a construction would need a proper extension of the scalar field."""

    code = 'triangulate.needs_extension'


class UnsupportedDimensionError(HesslabError, ValueError):
    """Raised when an operation does not support the number of variables of its input."""

    code = 'triangulate.unsupported_dimension'


class ZeroHessianDeterminantError(HesslabError, ValueError):
    """Raised when the weight search is started on a polynomial whose Hessian determinant vanishes."""

    code = 'triangulate.zero_hessian_determinant'


class BudgetExceededError(HesslabError):
    """Raised when the weight search does not succeed within its iteration budget.

    :param steps: the number of weight steps that were taken.
    :param state: the last transform and weights, for diagnostics.
    """

    code = 'triangulate.budget_exceeded'

    def __init__(self, message: str, steps: int = 0, state=None):
        self.steps = steps
        self.state = state
        super().__init__(message)


class HypothesesUnmetError(HesslabError, ValueError):
    """Raised when the clearing algorithm finds its input outside of its hypotheses."""

    code = 'triangulate.hypotheses_unmet'


class NonConstantDeterminantError(HesslabError, ValueError):
    """Raised when the pipeline is given a polynomial whose Hessian determinant is not a constant."""

    code = 'triangulate.non_constant_determinant'


class IsotropyUndecidedError(HesslabError):
    """Raised when the isotropy of a quadratic part could not be decided within the search height."""

    code = 'triangulate.isotropy_undecided'


class NonConstantAntiDiagonalError(HesslabError, ValueError):
    """Raised when an anti-triangular map has an anti-diagonal Jacobian entry that is not a nonzero constant."""

    code = 'gradmap.non_constant_anti_diagonal'


class DegreeLimitExceededError(HesslabError, ValueError):
    """Raised when the degree of a computed inverse exceeds the configured limit."""

    code = 'gradmap.degree_limit_exceeded'


class MalformedCertificateError(HesslabError, ValueError):
    """Raised when a descent certificate cannot be interpreted."""

    code = 'quadform.malformed_certificate'


class UnknownFixtureError(HesslabError, ValueError):
    """Raised when a fixture name is not recognized."""

    code = 'cli.unknown_fixture'
