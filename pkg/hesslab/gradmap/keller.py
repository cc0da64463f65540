# -*- coding: utf-8 -*-
"""The Keller condition: the Jacobian determinant of a polynomial map is a nonzero constant."""
import typing

from hesslab.calculus import PolyMap, jacobian, poly_determinant
from hesslab.exceptions import DimensionMismatchError
from hesslab.polys import Polynomial

__all__ = ('KellerResult', 'keller_check')


class KellerResult(typing.NamedTuple):

    is_keller: bool
    determinant: Polynomial


def keller_check(mapping: PolyMap) -> KellerResult:
    """Return whether the Jacobian determinant of the map is a nonzero constant, together with the determinant.

    :raises `~hesslab.exceptions.DimensionMismatchError`: if the map does not have one component per variable.
    """
    if mapping.n != mapping.context.n:
        raise DimensionMismatchError(
            f'a map with {mapping.n} components in {mapping.context.n} variables has no Jacobian determinant.'
        )

    determinant = poly_determinant(jacobian(mapping))

    return KellerResult(determinant.is_constant() and not determinant.is_zero(), determinant)
