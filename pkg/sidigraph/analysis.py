from dataclasses import dataclass
import logging
import math
from typing import Tuple

import numpy as np

from sidigraph.models import InvalidArgument


log = logging.getLogger(__name__)

GRID_POINTS = 10000
MIN_GRID_POINTS = 1000
MONOTONE_SLACK = 1e-12
HEAD_GAP_START = 22
HEAD_GAP_BOUND = 2 * math.sqrt(3) - 2

INCREASING = 'increasing'
DECREASING = 'decreasing'


def _cot(t):
    return np.cos(t) / np.sin(t)


def _csc(t):
    return 1.0 / np.sin(t)


def _result(x, values):
    return float(values) if np.ndim(x) == 0 else values


def _check_domain(x, n):
    if n <= 4:
        raise InvalidArgument("n must exceed 4, not %r" % (n,))
    x = np.asarray(x, dtype=float)
    if np.any(x < 2) or np.any(x > n - 2):
        raise InvalidArgument("x must lie in [2, %g]" % (n - 2))
    return x


def f_cot_cot(x, n):
    """2cot(pi/x) + 2cot(pi/(n-x)): increasing on [2, n/2], decreasing on [n/2, n-2]."""
    t = _check_domain(x, n)
    return _result(x, 2 * _cot(np.pi / t) + 2 * _cot(np.pi / (n - t)))


def f_csc_csc(x, n):
    """2csc(pi/x) + 2csc(pi/(n-x)): decreasing on [2, n/2]."""
    t = _check_domain(x, n)
    return _result(x, 2 * _csc(np.pi / t) + 2 * _csc(np.pi / (n - t)))


def f_csc_cot(x, n):
    """2csc(pi/x) + 2cot(pi/(n-x)): decreasing on [2, n-2]."""
    t = _check_domain(x, n)
    return _result(x, 2 * _csc(np.pi / t) + 2 * _cot(np.pi / (n - t)))


def f_inv_sq_csc(x, n=None):
    """(pi/x^2) csc^2(pi/x): decreasing for x >= 2."""
    t = np.asarray(x, dtype=float)
    if np.any(t < 2):
        raise InvalidArgument("x must be at least 2")
    if n is not None:
        t = _check_domain(x, n)
    return _result(x, np.pi / t ** 2 * _csc(np.pi / t) ** 2)


def head_gap(x, n=None):
    """2csc(pi/(x-4)) - 2cot(pi/(x-6)), decreasing for x >= 8.

    At x = 22 it sits just below 2*sqrt(3) - 2, which puts (C_6^+, C_{n-6}^+)
    above (C_2^-, C_{n-4}^-) for every even n >= 22.
    """
    t = np.asarray(x, dtype=float)
    if np.any(t < 8):
        raise InvalidArgument("x must be at least 8")
    return _result(x, 2 * _csc(np.pi / (t - 4)) - 2 * _cot(np.pi / (t - 6)))


FUNCTIONS = {
    'cot_cot': f_cot_cot,
    'csc_csc': f_csc_csc,
    'csc_cot': f_csc_cot,
    'inv_sq_csc': f_inv_sq_csc,
    'head_gap': head_gap,
}


@dataclass(frozen=True)
class MonotoneReport:

    function: str
    budget_n: float
    interval: Tuple[float, float]
    grid_step: float
    direction: str
    worst_difference: float
    passed: bool

    @property
    def detail(self):
        return '%s on [%g, %g], worst step %.3g' % (
            self.direction, self.interval[0], self.interval[1], self.worst_difference)

    def __str__(self):
        text = '%s %s' % ('ok  ' if self.passed else 'FAIL', self.function)
        if self.budget_n is not None:
            text += ' n=%g' % self.budget_n
        return '%s: %s' % (text, self.detail)


def monotone_claims(n):
    """The (function, interval, direction) claims that hold for budget ``n``."""
    claims = [
        ('cot_cot', (2, n / 2), INCREASING),
        ('cot_cot', (n / 2, n - 2), DECREASING),
        ('csc_csc', (2, n / 2), DECREASING),
        ('csc_cot', (2, n - 2), DECREASING),
        ('inv_sq_csc', (2, n - 2), DECREASING),
    ]
    if n > HEAD_GAP_START:
        claims.append(('head_gap', (HEAD_GAP_START, n), DECREASING))
    return claims


def claimed_direction(function, n, interval):
    lo, hi = interval
    if function != 'cot_cot':
        return DECREASING
    if hi <= n / 2:
        return INCREASING
    if lo >= n / 2:
        return DECREASING
    raise InvalidArgument("cot_cot is not monotone across n/2 = %g" % (n / 2))


def certify_monotone(function, n, interval, grid_points=GRID_POINTS, direction=None, slack=MONOTONE_SLACK):
    """Sample ``function`` on a uniform grid over ``interval`` and check each step keeps ``direction``.

    Without an explicit ``direction`` the claimed one for that function and
    interval is used.
    """
    if function not in FUNCTIONS:
        raise InvalidArgument("Unknown function %r; choose from %s" % (function, ', '.join(sorted(FUNCTIONS))))
    if grid_points < MIN_GRID_POINTS:
        raise InvalidArgument("Certification needs at least %d grid points, not %r" % (MIN_GRID_POINTS, grid_points))
    if direction is None:
        direction = claimed_direction(function, n, interval)
    if direction not in (INCREASING, DECREASING):
        raise InvalidArgument("Direction must be %r or %r, not %r" % (INCREASING, DECREASING, direction))

    lo, hi = interval
    grid = np.linspace(lo, hi, grid_points)
    differences = np.diff(FUNCTIONS[function](grid, n))

    if direction == INCREASING:
        worst = float(differences.min())
        passed = worst >= -slack
    else:
        worst = float(differences.max())
        passed = worst <= slack

    report = MonotoneReport(function, n, (lo, hi), (hi - lo) / (grid_points - 1), direction, worst, passed)
    if not passed:
        log.warning("Monotonicity claim failed: %s", report)
    return report
