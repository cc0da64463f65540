# -*- coding: utf-8 -*-
"""Desk-scale experiment on polynomials with a constant Hessian determinant and a definite quadratic part.

For ``n <= 3`` a polynomial whose Hessian determinant is a nonzero constant and whose quadratic part at some point is
anisotropic must have degree two. The harness checks both hypotheses for a given polynomial and point and reports which
of them fails, or whether the degree conclusion holds.
"""
import dataclasses
import enum
import typing

from hesslab.calculus import hessian_determinant
from hesslab.exceptions import UnsupportedDimensionError
from hesslab.polys import Polynomial
from .form import QuadraticForm, hessian_at
from .search import DEFAULT_ISOTROPY_HEIGHT, IsotropyResult, isotropy_search

__all__ = ('HarnessVerdict', 'HarnessReport', 'definite_harness')


class HarnessVerdict(enum.Enum):

    DEGREE_TWO_CONFIRMED = 'degree_two_confirmed'
    HYPOTHESIS_FAILS = 'hypothesis_fails'
    COUNTEREXAMPLE_CANDIDATE = 'counterexample_candidate'


@dataclasses.dataclass(frozen=True)
class HarnessReport:
    """Verdict of :func:`definite_harness` with the data it is based on."""

    verdict: HarnessVerdict
    determinant: Polynomial
    hypothesis: typing.Optional[str] = None  # pylint: disable=unsubscriptable-object
    isotropy: typing.Optional[IsotropyResult] = None  # pylint: disable=unsubscriptable-object

    def to_record(self) -> dict:
        record = {'verdict': self.verdict.value, 'determinant': str(self.determinant)}
        if self.hypothesis is not None:
            record['hypothesis'] = self.hypothesis
        if self.isotropy is not None:
            record['isotropy'] = self.isotropy.to_record()
        return record


def definite_harness(f: Polynomial,
                     point: typing.Sequence = None,
                     height: int = DEFAULT_ISOTROPY_HEIGHT) -> HarnessReport:
    """Check the hypotheses of the definite degree two statement for ``f`` at ``point``.

    The quadratic part of ``f(x + point)`` has the Gram matrix ``H f(point) / 2``.

    :param f: a polynomial in at most three variables without parameters.
    :param point: the point, the origin when omitted.
    :param height: the height bound of the isotropy search.
    :raises `~hesslab.exceptions.UnsupportedDimensionError`: if ``f`` has more than three variables.
    """
    if f.n > 3:
        raise UnsupportedDimensionError(f'the harness supports at most three variables, got {f.n}.')

    if point is None:
        point = [f.field.zero] * f.n

    determinant = hessian_determinant(f)

    if not determinant.is_constant() or determinant.is_zero():
        return HarnessReport(HarnessVerdict.HYPOTHESIS_FAILS, determinant, 'constant_nonzero_determinant')

    gram = hessian_at(f, [f.field.convert(value) for value in point]) * (f.field.domain.convert(1) / 2)
    isotropy = isotropy_search(QuadraticForm(gram), height)

    if not isotropy.is_anisotropic:
        return HarnessReport(HarnessVerdict.HYPOTHESIS_FAILS, determinant, 'anisotropic_quadratic_part', isotropy)

    if f.degree == 2:
        return HarnessReport(HarnessVerdict.DEGREE_TWO_CONFIRMED, determinant, isotropy=isotropy)

    return HarnessReport(HarnessVerdict.COUNTEREXAMPLE_CANDIDATE, determinant, isotropy=isotropy)
