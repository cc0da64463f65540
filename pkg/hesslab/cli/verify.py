# -*- coding: utf-8 -*-
"""Command to recompute the claims attached to the packaged fixtures."""
import click
from tqdm import tqdm

from hesslab.fixtures import FIXTURE_NAMES, verify_fixture
from . import echo
from .params import arguments, options
from .root import cmd_root
from .utils import attempt, emit, format_matrix


def render_reports(record: dict):
    for report in record['fixtures']:
        rows = [['PASS' if check['passed'] else 'FAIL', check['description'], check['detail']]
                for check in report['checks']]
        yield format_matrix(rows)
        yield f'{report["name"]}: {"PASS" if report["passed"] else "FAIL"}'


@cmd_root.command('verify')
@arguments.FIXTURE()
@click.option('-a', '--all', 'verify_all', is_flag=True, help='Verify every packaged fixture.')
@options.VARIABLES(help='Number of variables of the counterexample family; every recorded size when omitted.')
@options.BUDGET()
@options.OUTPUT()
@options.TRACEBACK()
def cmd_verify(name, verify_all, n, budget, output, traceback):
    """Recompute the determinants, weight searches and certificates of a named fixture.

    Exits with status 1 if a check fails.
    """
    if (name is None) == (not verify_all):
        raise click.UsageError('provide either a fixture name or `--all`.')

    names = FIXTURE_NAMES if verify_all else (name,)
    reports = []

    with attempt(include_traceback=traceback):
        for fixture in tqdm(names, desc='Verifying fixtures', disable=not verify_all, leave=False):
            size = n if fixture == 'gn-counterexample' or not verify_all else None
            reports.append(verify_fixture(fixture, n=size, budget=budget))

    passed = all(report.passed for report in reports)
    record = {'fixtures': [report.to_record() for report in reports], 'passed': passed}
    emit(record, output, render_reports)

    if not passed:
        echo.echo_critical('some fixture checks failed.', echo.ExitCode.NEGATIVE)
