# -*- coding: utf-8 -*-
"""End-to-end verification of the named fixtures."""
import dataclasses
import json
import typing

from hesslab.calculus import cofactor_determinant, hessian, hessian_determinant, poly_determinant
from hesslab.common.log import HESSLAB_LOGGER
from hesslab.exceptions import BudgetExceededError, HesslabError
from hesslab.polys import format_scalar, parse_poly
from hesslab.quadform import (
    DescentCertificate, QuadraticForm, check_certificate, find_descent_certificate, find_witness, isotropy_search
)
from hesslab.triangulate import DEFAULT_WEIGHT_BUDGET, find_adapted_weight
from .registry import (
    counterexample_determinant, fixture_context, fixture_polynomial, get_fixture_metadata,
    get_fixture_metadata_filepath, recorded_coefficients
)

__all__ = ('FixtureCheck', 'FixtureReport', 'verify_fixture')

LOGGER = HESSLAB_LOGGER.getChild('fixtures')


class FixtureCheck(typing.NamedTuple):

    description: str
    passed: bool
    detail: str = ''


@dataclasses.dataclass(frozen=True)
class FixtureReport:
    """The outcome of every check of a fixture; the fixture passes when all checks do."""

    name: str
    checks: typing.Tuple[FixtureCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_record(self) -> dict:
        return {
            'name': self.name,
            'passed': self.passed,
            'checks': [check._asdict() for check in self.checks],
        }


def _counterexample_checks(n: int) -> typing.Iterator[FixtureCheck]:
    f = fixture_polynomial('gn-counterexample', n)
    expected = counterexample_determinant(n)
    recorded = recorded_coefficients('gn-counterexample')

    if n in recorded:
        coefficient = expected.terms()[0][1]
        yield FixtureCheck(
            f'n={n}: closed form coefficient matches the recorded value',
            format_scalar(coefficient) == recorded[n],
            f'computed {format_scalar(coefficient)}, recorded {recorded[n]}',
        )

    determinant = hessian_determinant(f)
    yield FixtureCheck(f'n={n}: Hessian determinant equals the closed form', determinant == expected, str(determinant))

    at_zero = hessian_determinant(f.specialize(t=0))
    yield FixtureCheck(f'n={n}: Hessian determinant vanishes at t=0', at_zero.is_zero(), str(at_zero))

    at_one = hessian_determinant(f.specialize(t=1))
    yield FixtureCheck(f'n={n}: Hessian determinant at t=1 is g', at_one == expected.specialize(t=1), str(at_one))


def _dillen_checks(budget: int) -> typing.Iterator[FixtureCheck]:
    metadata = get_fixture_metadata('dillen4')
    f = fixture_polynomial('dillen4')
    matrix = hessian(f)
    determinant = poly_determinant(matrix)

    yield FixtureCheck(
        'Hessian determinant is a nonzero constant',
        determinant.is_constant() and not determinant.is_zero(),
        str(determinant),
    )

    expansion = cofactor_determinant(matrix)
    yield FixtureCheck('cofactor expansion agrees with elimination', expansion == determinant, str(expansion))

    cubic = f.homogeneous_part(3)
    yield FixtureCheck(
        'cubic part', cubic == parse_poly(metadata['cubic_part'], fixture_context('dillen4')), str(cubic)
    )

    try:
        adapted = find_adapted_weight(f, budget, strict=False)
    except BudgetExceededError as exception:
        yield FixtureCheck(
            'weight search with ordered positive weights fails', True, f'no success after {exception.steps} steps'
        )
    except HesslabError as exception:
        yield FixtureCheck(
            'weight search with ordered positive weights fails', False, f'[{exception.code}] {exception}'
        )
    else:
        yield FixtureCheck(
            'weight search with ordered positive weights fails', False, f'found the weights {adapted.weights}'
        )


def _qi_form_checks() -> typing.Iterator[FixtureCheck]:
    metadata = get_fixture_metadata('qi-form')
    form = QuadraticForm.from_polynomial(fixture_polynomial('qi-form'))
    certificate = find_descent_certificate(form)

    yield FixtureCheck('descent certificate found', certificate is not None)

    if certificate is None:
        return

    yield FixtureCheck('descent certificate replays', check_certificate(form, certificate))

    record = json.loads(json.dumps(certificate.to_record()))
    yield FixtureCheck(
        'serialized certificate replays', check_certificate(form, DescentCertificate.from_record(record))
    )

    height = metadata['search_height']
    vector, _ = find_witness(form, height, candidate_limit=None)
    detail = '' if vector is None else str(vector)
    yield FixtureCheck(f'no isotropic vector up to height {height}', vector is None, detail)

    result = isotropy_search(form, height)
    yield FixtureCheck('isotropy search reports anisotropy', result.is_anisotropic, result.outcome.value)


def verify_fixture(name: str, n: int = None, budget: int = DEFAULT_WEIGHT_BUDGET) -> FixtureReport:
    """Recompute every claim attached to a named fixture.

    :param name: one of ``FIXTURE_NAMES``.
    :param n: the number of variables; by default every size listed in the fixture metadata is checked.
    :param budget: the step budget of the weight search of the ``dillen4`` fixture.
    :return: the report with one entry per check.
    :raises `~hesslab.exceptions.UnknownFixtureError`: if the name is not recognized.
    :raises `~hesslab.exceptions.InvalidArgumentError`: if the fixture is not defined for ``n`` variables.
    """
    get_fixture_metadata_filepath(name)
    fixture_context(name, n)

    if name == 'gn-counterexample':
        sizes = get_fixture_metadata(name)['variables'] if n is None else [n]
        checks = [check for size in sizes for check in _counterexample_checks(size)]
    elif name == 'dillen4':
        checks = list(_dillen_checks(budget))
    else:
        checks = list(_qi_form_checks())

    for check in checks:
        LOGGER.info('%s: %s %s', name, 'PASS' if check.passed else 'FAIL', check.description)

    return FixtureReport(name, tuple(checks))
