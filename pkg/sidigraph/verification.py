"""
The verify suite: every ordering check, monotonicity claim and closed-form
oracle that applies to budgets up to ``n_max``.
"""

import logging

from sidigraph import analysis, orderings
from sidigraph.closed_form import energy_cycle, iota_energy_cycle
from sidigraph.graphs import adjacency_matrix, make_cycle
from sidigraph.models import InvalidArgument, Sign, VerificationReport
from sidigraph.spectra import MAX_ITERATIONS, NumericFailure, char_poly, energy, iota_energy, poly_roots


log = logging.getLogger(__name__)

ORACLE_MAX_LENGTH = 50
ORACLE_TOLERANCE = 1e-8
MONOTONE_MAX_N = 100


def check_cycle_oracle(length, sign, max_iterations=MAX_ITERATIONS, tolerance=ORACLE_TOLERANCE):
    """Closed forms against the root finder run on the cycle's characteristic polynomial."""
    sign = Sign(sign)
    case = 'C%d%s' % (length, sign.symbol)
    try:
        spectrum = poly_roots(char_poly(adjacency_matrix(make_cycle(length, sign))), max_iterations=max_iterations)
    except NumericFailure as exc:
        return VerificationReport('closed-form-oracle', length, False, str(exc), case)

    iota_error = abs(iota_energy(spectrum) - iota_energy_cycle(length, sign))
    energy_error = abs(energy(spectrum) - energy_cycle(length, sign))
    passed = iota_error <= tolerance and energy_error <= tolerance
    detail = 'iota error %.2g, energy error %.2g' % (iota_error, energy_error)
    return VerificationReport('closed-form-oracle', length, passed, detail, case)


def check_head_gap_bound():
    value = analysis.head_gap(analysis.HEAD_GAP_START)
    passed = value < analysis.HEAD_GAP_BOUND
    detail = 'gap %.6f against bound %.6f' % (value, analysis.HEAD_GAP_BOUND)
    return VerificationReport('head-gap-bound', analysis.HEAD_GAP_START, passed, detail)


def check_monotone(n, grid_points=analysis.GRID_POINTS):
    for function, interval, direction in analysis.monotone_claims(n):
        report = analysis.certify_monotone(function, n, interval, grid_points, direction)
        yield VerificationReport('monotone', n, report.passed, report.detail, function)


def iter_checks(n_max, tolerance=orderings.TIE_TOLERANCE, max_iterations=MAX_ITERATIONS):
    """Yield a VerificationReport for each check applicable up to ``n_max``."""
    if n_max < 4:
        raise InvalidArgument("The verify suite needs n_max >= 4, not %r" % (n_max,))

    for length in range(2, min(n_max, ORACLE_MAX_LENGTH) + 1):
        for sign in (Sign.POSITIVE, Sign.NEGATIVE):
            yield check_cycle_oracle(length, sign, max_iterations)

    for n in range(4, n_max + 1):
        yield orderings.check_extremal(n, tolerance)
        if n >= 6:
            yield orderings.check_mixed_chain(n, tolerance)
        if n >= 22:
            yield orderings.check_same_sign_chain(n, tolerance)
        if n % 2:
            continue
        yield orderings.check_mixed_block(n, tolerance)
        if n >= 6:
            yield orderings.check_center_crossover(n, tolerance)
        if n >= 10:
            yield orderings.check_floating_pair(n, tolerance)
        if n >= 22:
            yield orderings.check_head_interleaving(n, tolerance)

    if n_max >= analysis.HEAD_GAP_START:
        yield check_head_gap_bound()
    for n in range(6, min(n_max, MONOTONE_MAX_N) + 1, 2):
        for report in check_monotone(n):
            yield report


def run_suite(n_max, tolerance=orderings.TIE_TOLERANCE, max_iterations=MAX_ITERATIONS):
    reports = []
    for report in iter_checks(n_max, tolerance, max_iterations):
        log.debug("%s", report)
        reports.append(report)
    return reports
