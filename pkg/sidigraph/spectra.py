import cmath
from dataclasses import dataclass
import logging
import math
from typing import Tuple

import numpy as np

from sidigraph.graphs import adjacency_matrix, as_signed_cycle, strong_components
from sidigraph.models import InvalidArgument, Sign


log = logging.getLogger(__name__)

MAX_DIMENSION = 512
MAX_ITERATIONS = 1000
RESIDUAL_TOLERANCE = 1e-10
STEP_TOLERANCE = 1e-13
CONJUGATE_TOLERANCE = 1e-8

# Angular offset of the starting ring, so no start point sits on a root ray.
RING_OFFSET = 0.4
# Iterations without a smaller step before a multiple-root cluster counts as settled.
STAGNATION_WINDOW = 25


class NumericFailure(ArithmeticError):

    def __init__(self, message, roots=(), residuals=(), iterations=0):
        super().__init__(message)
        self.roots = tuple(roots)
        self.residuals = tuple(residuals)
        self.iterations = iterations


@dataclass(frozen=True)
class Polynomial:

    coefficients: Tuple[float, ...]

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def is_monic(self):
        return self.coefficients[-1] == 1

    def __call__(self, x):
        return np.polynomial.polynomial.polyval(x, self.coefficients)

    def __str__(self):
        terms = []
        for power in range(self.degree, -1, -1):
            coefficient = self.coefficients[power]
            if coefficient == 0:
                continue
            magnitude = abs(coefficient)
            if power == 0 or magnitude != 1:
                body = '%g' % magnitude
                if power:
                    body += '*'
            else:
                body = ''
            if power:
                body += 'x' if power == 1 else 'x^%d' % power
            terms.append(('-' if coefficient < 0 else '+', body))
        if not terms:
            return '0'
        text = ''.join(' %s %s' % term for term in terms).strip()
        return text[2:] if text.startswith('+ ') else '-' + text[2:]


@dataclass(frozen=True)
class ComplexSpectrum:

    eigenvalues: Tuple[complex, ...]

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)

    def sorted_by_argument(self, places=9):
        """Eigenvalues ordered by argument in [0, 2pi), then by modulus."""
        def key(z):
            z = _clean(z, places)
            angle = math.atan2(z.imag, z.real) % (2 * math.pi) if z else 0.0
            return (round(angle, places) % round(2 * math.pi, places), round(abs(z), places))
        return sorted((_clean(z, places) for z in self.eigenvalues), key=key)

    def is_conjugate_closed(self, tolerance=CONJUGATE_TOLERANCE):
        conjugates = ComplexSpectrum(tuple(z.conjugate() for z in self.eigenvalues))
        return spectra_match(self, conjugates, tolerance)


def _clean(z, places):
    # Drop rounding noise so exact zeros and real roots print and sort stably.
    return complex(round(z.real, places) + 0.0, round(z.imag, places) + 0.0)


def spectra_match(a, b, tolerance=CONJUGATE_TOLERANCE):
    """Whether two spectra are equal as multisets, each eigenvalue within `tolerance`."""
    left, right = list(a), list(b)
    if len(left) != len(right):
        return False
    unmatched = list(right)
    for z in left:
        distances = [abs(z - w) for w in unmatched]
        best = int(np.argmin(distances))
        if distances[best] > tolerance:
            return False
        unmatched.pop(best)
    return True


def char_poly(matrix):
    """Characteristic polynomial det(xI - A) by Faddeev-LeVerrier trace recursion.

    Entries of A are integers, so every coefficient is an integer and each one
    is rounded as soon as it is produced; the recursion stays exact while
    intermediate entries stay below 2**53.
    """
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidArgument("Characteristic polynomial needs a square matrix, not shape %r" % (a.shape,))
    n = a.shape[0]
    if n < 1 or n > MAX_DIMENSION:
        raise InvalidArgument("Matrix dimension %d is outside [1, %d]" % (n, MAX_DIMENSION))
    if not np.isin(a, (-1, 0, 1)).all():
        raise InvalidArgument("Adjacency entries must be -1, 0 or +1")

    a = a.astype(float)
    identity = np.eye(n)
    coefficients = [0.0] * (n + 1)
    coefficients[n] = 1.0

    m = identity
    warned = False
    for k in range(1, n + 1):
        am = a @ m
        if not warned and np.abs(am).max() > 2.0 ** 53:
            log.warning("Trace recursion intermediates exceed 2**53 from step %d of %d; coefficients may be inexact", k, n)
            warned = True
        coefficient = float(round(-np.trace(am) / k))
        coefficients[n - k] = coefficient
        m = am + coefficient * identity

    return Polynomial(tuple(coefficients))


def _initial_ring(coefficients):
    # Fujiwara bound: every root lies within 2 * max |a_(n-k)|^(1/k), with a_0 halved.
    degree = len(coefficients) - 1
    k = np.arange(1, degree + 1)
    magnitudes = np.abs(coefficients[degree - k])
    magnitudes[-1] /= 2
    radius = 2 * float(np.max(magnitudes ** (1.0 / k)))
    angles = 2 * np.pi * np.arange(degree) / degree + RING_OFFSET
    return radius * np.exp(1j * angles)


def _residual_bound(z, degree, tolerance):
    return tolerance * (1.0 + np.abs(z)) ** degree


def _newton_ratios(coefficients, z, tolerance):
    """p(z) / p'(z) at each iterate, and whether |p(z)| is within the residual bound.

    Iterates outside the unit disk are evaluated through the reversed
    polynomial q(w) = w^n p(1/w), so nothing overflows for large degree.
    """
    degree = len(coefficients) - 1
    descending = coefficients[::-1]
    ratios = np.zeros_like(z)
    within = np.zeros(z.shape, dtype=bool)

    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        inner = np.abs(z) <= 1
        zi = z[inner]
        values = np.polyval(descending, zi)
        slopes = np.polyval(np.polyder(descending), zi)
        ratios[inner] = np.where(values == 0, 0, values / slopes)
        within[inner] = np.abs(values) <= _residual_bound(zi, degree, tolerance)

        outer = ~inner
        zo = z[outer]
        w = 1 / zo
        # The ascending coefficients of p are the descending coefficients of q.
        q = np.polyval(coefficients, w)
        q_slopes = np.polyval(np.polyder(coefficients), w)
        ratios[outer] = np.where(q == 0, 0, zo * q / (degree * q - w * q_slopes))
        # |p(z)| <= tol (1 + |z|)^n  is  |q(w)| <= tol (1 + |w|)^n.
        within[outer] = np.abs(q) <= _residual_bound(w, degree, tolerance)

    return ratios, within


def poly_roots(p, max_iterations=MAX_ITERATIONS, tolerance=RESIDUAL_TOLERANCE):
    """All complex roots of a monic polynomial, by Aberth-Ehrlich simultaneous iteration."""
    coefficients = np.asarray(p.coefficients, dtype=float)
    if len(coefficients) < 2:
        raise InvalidArgument("Root finding needs a polynomial of degree >= 1")
    if coefficients[-1] != 1:
        raise InvalidArgument("Root finding needs a monic polynomial, leading coefficient is %r" % coefficients[-1])

    # Factor out x^k exactly before iterating.
    zeros = 0
    while coefficients[zeros] == 0:
        zeros += 1
    coefficients = coefficients[zeros:]
    degree = len(coefficients) - 1

    if degree == 0:
        roots = np.zeros(0, dtype=complex)
    elif degree == 1:
        roots = np.array([-coefficients[0]], dtype=complex)
    else:
        roots = _aberth(coefficients, max_iterations, tolerance)

    roots = np.concatenate([np.zeros(zeros, dtype=complex), roots])
    return ComplexSpectrum(tuple(complex(z) for z in roots))


def _aberth(coefficients, max_iterations, tolerance):
    degree = len(coefficients) - 1

    ring = _initial_ring(coefficients)
    z = ring.copy()
    best_step = math.inf
    since_best = 0
    residual_ok = False

    for iteration in range(1, max_iterations + 1):
        ratios, _ = _newton_ratios(coefficients, z, tolerance)

        differences = z[:, None] - z[None, :]
        np.fill_diagonal(differences, 1.0)
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            inverses = 1.0 / differences
            np.fill_diagonal(inverses, 0.0)
            repulsion = inverses.sum(axis=1)
            step = ratios / (1 - ratios * repulsion)
        step = np.where(ratios == 0, 0, step)
        stuck = ~np.isfinite(step)
        if stuck.any():
            # Nudge iterates that landed on a critical point.
            step[stuck] = 1e-3 * (1.0 + np.abs(z[stuck]))
        z = z - step

        lost = ~np.isfinite(z)
        if lost.any():
            log.debug("Restarting %d non-finite iterates from the initial ring", int(lost.sum()))
            z[lost] = ring[lost]
            step[lost] = ring[lost]

        largest = float(np.max(np.abs(step) / (1.0 + np.abs(z))))
        _, within = _newton_ratios(coefficients, z, tolerance)
        residual_ok = bool(within.all())

        if largest <= STEP_TOLERANCE:
            log.debug("Aberth iteration converged after %d steps for degree %d", iteration, degree)
            if residual_ok:
                return z
            break
        if largest < best_step:
            best_step, since_best = largest, 0
        else:
            since_best += 1
        if residual_ok and since_best >= STAGNATION_WINDOW:
            log.debug("Aberth iteration settled after %d steps for degree %d (step %.3g)",
                iteration, degree, largest)
            return z

    if residual_ok:
        log.warning("Accepting roots of degree %d polynomial after %d iterations without step convergence",
            degree, max_iterations)
        return z
    with np.errstate(over='ignore', invalid='ignore'):
        residuals = np.abs(np.polyval(coefficients[::-1], z))
    raise NumericFailure("Aberth iteration did not converge for degree %d after %d iterations (worst residual %.3g)"
        % (degree, iteration, float(residuals.max())), roots=z, residuals=residuals, iterations=iteration)


def cycle_roots(length, sign):
    """The roots of x^n - sign: the spectrum of a signed directed cycle."""
    offset = 0 if Sign(sign) is Sign.POSITIVE else 1
    return [cmath.exp(1j * math.pi * (2 * k + offset) / length) for k in range(length)]


def eigenvalues(g, max_iterations=MAX_ITERATIONS):
    """The adjacency spectrum of ``g``.

    The adjacency matrix is block triangular over the strong components, so
    the spectrum is the union of the components' spectra. Singletons add a
    zero, directed cycles use their analytic roots and anything else goes
    through the characteristic polynomial.
    """
    roots = []
    for component in strong_components(g):
        if component.n_vertices == 1:
            roots.append(0j)
            continue
        cycle = as_signed_cycle(component)
        if cycle is not None:
            roots.extend(cycle_roots(cycle.length, cycle.sign))
            continue
        log.debug("Falling back to the root finder for a %d-vertex strong component", component.n_vertices)
        polynomial = char_poly(adjacency_matrix(component))
        roots.extend(poly_roots(polynomial, max_iterations=max_iterations).eigenvalues)
    return ComplexSpectrum(tuple(roots))


def energy(spectrum):
    return float(sum(abs(z.real) for z in spectrum))


def iota_energy(spectrum):
    return float(sum(abs(z.imag) for z in spectrum))


def energy_of_graph(g):
    return sum(energy(eigenvalues(component)) for component in strong_components(g)
        if component.n_vertices > 1)


def iota_energy_of_graph(g):
    """Iota energy as the sum over strong components; singletons contribute nothing."""
    return sum(iota_energy(eigenvalues(component)) for component in strong_components(g)
        if component.n_vertices > 1)
