# -*- coding: utf-8 -*-
"""Results of the triangularization: witnesses with an anti-triangular Hessian and isotropy obstructions."""
import dataclasses
import typing

from hesslab.calculus import PolyMatrix, align_fields, hessian, hessian_determinant
from hesslab.linalg import Transform
from hesslab.polys import Polynomial, format_scalar, substitute_linear
from hesslab.quadform import IsotropyResult, QuadraticForm
from hesslab.weights import WeightFn, w_leading_part

__all__ = ('AntiTriWitness', 'IsotropyObstruction')


@dataclasses.dataclass(frozen=True)
class AntiTriWitness:
    """A transform ``T`` such that the Hessian of ``f(Tx)`` is zero below its anti-diagonal.

    :param polynomial: the polynomial ``f``.
    :param transform: the transform ``T``.
    :param weights: the weights the transform was found with, if any.
    :param leading: the ``w``-leading part of ``f(Tx)`` for those weights.
    :param constants: the anti-diagonal entries ``c1..cn`` of the Hessian of ``f(Tx)`` from the bottom left corner
        upward, set when the Hessian determinant of ``f`` is a nonzero constant.
    :param case_tag: the route that produced the witness.
    """

    polynomial: Polynomial
    transform: Transform
    weights: typing.Optional[WeightFn] = None  # pylint: disable=unsubscriptable-object
    leading: typing.Optional[Polynomial] = None  # pylint: disable=unsubscriptable-object
    constants: typing.Optional[typing.Tuple] = None  # pylint: disable=unsubscriptable-object
    case_tag: str = 'weight'

    @classmethod
    def build(cls, f: Polynomial, transform: Transform, weights: WeightFn = None, case_tag: str = 'weight'):
        """Return the witness for ``f`` and ``T``, deriving the leading part and the anti-diagonal constants."""
        f, transform = align_fields(f, transform)
        transformed = substitute_linear(f, transform)
        leading = w_leading_part(transformed, weights).part if weights is not None and transformed else None
        determinant = hessian_determinant(f)
        constants = None

        if determinant.is_constant() and not determinant.is_zero():
            entries = hessian(transformed).anti_diagonal()
            if all(entry.is_constant() for entry in entries):
                constants = tuple(entry.constant_value() for entry in entries)

        return cls(f, transform, weights, leading, constants, case_tag)

    @property
    def transformed(self) -> Polynomial:
        """Return ``f(Tx)``."""
        return substitute_linear(*align_fields(self.polynomial, self.transform))

    def hessian(self) -> PolyMatrix:
        """Return the Hessian of ``f(Tx)``, recomputed from scratch."""
        return hessian(self.transformed)

    def is_valid(self) -> bool:
        """Return whether the Hessian of ``f(Tx)`` is exactly zero below the anti-diagonal."""
        return self.hessian().is_anti_triangular()

    def to_record(self) -> dict:
        record = {
            'case_tag': self.case_tag,
            'polynomial': str(self.polynomial),
            'T': self.transform.matrix.to_strings(),
            'T_inverse': self.transform.inverse.to_strings(),
            'w': self.weights.to_strings() if self.weights is not None else None,
            'leading': str(self.leading) if self.leading is not None else None,
            'constants': [format_scalar(value) for value in self.constants] if self.constants is not None else None,
            'hessian': self.hessian().to_strings(),
        }
        return record


@dataclasses.dataclass(frozen=True)
class IsotropyObstruction:
    """Proof that no witness exists for a quadratic polynomial: its quadratic part is anisotropic.

    :param polynomial: the polynomial.
    :param form: its quadratic part.
    :param isotropy: the isotropy result carrying the descent certificate.
    """

    polynomial: Polynomial
    form: QuadraticForm
    isotropy: IsotropyResult
    case_tag: str = 'isotropy_obstruction'

    def to_record(self) -> dict:
        return {
            'case_tag': self.case_tag,
            'polynomial': str(self.polynomial),
            'form': self.form.gram.to_strings(),
            'isotropy': self.isotropy.to_record(),
        }
