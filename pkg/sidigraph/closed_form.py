"""
Closed-form energies of signed directed cycles, and their sums over cycle pairs.

Each function returns the value together with the case of the formula that
produced it, so the command line can show which expression was used.
"""

import math

from sidigraph.models import InvalidArgument, Sign


def cot(x):
    # cot(pi/2) is exactly zero; math.tan would give 1.6e16 instead.
    if x == math.pi / 2:
        return 0.0
    return 1.0 / math.tan(x)


def csc(x):
    return 1.0 / math.sin(x)


def _check_length(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidArgument("Cycle length must be an integer >= 2, not %r" % (n,))


_FUNCTIONS = {'cot': cot, 'csc': csc}


def _term(function, coefficient, denominator):
    value = coefficient * _FUNCTIONS[function](math.pi / denominator)
    label = '%s(pi/%d)' % (function, denominator)
    if coefficient != 1:
        label = '%d*%s' % (coefficient, label)
    return value, label


def iota_energy_case(n, sign):
    """Return ``(value, case)`` for the iota energy of the signed cycle of length ``n``."""
    _check_length(n)
    sign = Sign(sign)
    if n % 2:
        return _term('cot', 1, 2 * n)
    if sign is Sign.POSITIVE:
        return _term('cot', 2, n)
    return _term('csc', 2, n)


def energy_case(n, sign):
    """Return ``(value, case)`` for the energy of the signed cycle of length ``n``."""
    _check_length(n)
    sign = Sign(sign)
    if n % 2:
        return _term('csc', 1, 2 * n)
    # Positive cycles take cot when 4 divides n, negative ones when it does not.
    if (sign is Sign.POSITIVE) == (n % 4 == 0):
        return _term('cot', 2, n)
    return _term('csc', 2, n)


def iota_energy_cycle(n, sign):
    return iota_energy_case(n, sign)[0]


def energy_cycle(n, sign):
    return energy_case(n, sign)[0]


def pair_iota(pair):
    return (iota_energy_cycle(pair.c1.length, pair.c1.sign)
        + iota_energy_cycle(pair.c2.length, pair.c2.sign))


def pair_energy(pair):
    return (energy_cycle(pair.c1.length, pair.c1.sign)
        + energy_cycle(pair.c2.length, pair.c2.sign))
