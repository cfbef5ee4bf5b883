import math

import numpy as np
from django.test import SimpleTestCase

from sidigraph.analysis import (DECREASING, HEAD_GAP_BOUND, INCREASING, certify_monotone, f_cot_cot,
    f_csc_cot, f_csc_csc, f_inv_sq_csc, head_gap, monotone_claims)
from sidigraph.closed_form import pair_iota
from sidigraph.models import CyclePair, InvalidArgument


def cot(x):
    return 1 / math.tan(x)


def csc(x):
    return 1 / math.sin(x)


class FunctionValueTest(SimpleTestCase):

    def test_cot_cot(self):
        self.assertAlmostEqual(f_cot_cot(15, 30), 4 * cot(2 * math.pi / 30), places=12)
        self.assertAlmostEqual(f_cot_cot(2, 30), 2 * cot(math.pi / 28), places=12)
        self.assertAlmostEqual(f_cot_cot(4, 12), 2 + 2 * cot(math.pi / 8), places=12)
        self.assertEqual('%.3f' % f_cot_cot(4, 12), '6.828')

    def test_csc_csc(self):
        self.assertAlmostEqual(f_csc_csc(2, 30), 2 + 2 * csc(math.pi / 28), places=12)
        self.assertAlmostEqual(f_csc_csc(15, 30), 4 * csc(2 * math.pi / 30), places=12)
        self.assertEqual('%.3f' % f_csc_csc(4, 12), '8.054')

    def test_csc_cot(self):
        self.assertAlmostEqual(f_csc_cot(2, 30), 2 + 2 * cot(math.pi / 28), places=12)
        self.assertAlmostEqual(f_csc_cot(28, 30), 2 * csc(math.pi / 28), places=12)
        self.assertAlmostEqual(f_csc_cot(4, 10), 2 * math.sqrt(2) + 2 * math.sqrt(3), places=12)

    def test_inv_sq_csc(self):
        self.assertAlmostEqual(f_inv_sq_csc(2), math.pi / 4, places=12)
        self.assertAlmostEqual(f_inv_sq_csc(4), math.pi / 8, places=12)

    def test_arrays(self):
        values = f_csc_csc(np.array([2.0, 4.0, 6.0]), 12)
        self.assertEqual(values.shape, (3,))
        self.assertIsInstance(f_csc_csc(2, 12), float)

    def test_domain(self):
        with self.assertRaises(InvalidArgument):
            f_cot_cot(1, 10)
        with self.assertRaises(InvalidArgument):
            f_csc_csc(9, 10)
        with self.assertRaises(InvalidArgument):
            f_csc_cot(2, 4)
        with self.assertRaises(InvalidArgument):
            f_inv_sq_csc(1.5)
        with self.assertRaises(InvalidArgument):
            f_csc_cot(np.array([2.0, 11.0]), 12)
        with self.assertRaises(InvalidArgument):
            head_gap(7)


class FunctionPropertyTest(SimpleTestCase):

    def test_symmetry(self):
        for n in range(6, 61, 2):
            for x in range(2, n - 1):
                self.assertEqual(f_cot_cot(x, n), f_cot_cot(n - x, n))
                self.assertEqual(f_csc_csc(x, n), f_csc_csc(n - x, n))

    def test_csc_above_cot(self):
        for n in range(6, 61, 2):
            x = np.linspace(2, n - 2, 201)[1:-1]
            self.assertTrue(np.all(f_csc_csc(x, n) > f_cot_cot(x, n)))

    def test_matches_pair_values_at_even_points(self):
        for n in range(6, 41, 2):
            for m in range(2, n - 1, 2):
                same_positive = CyclePair.of((m, '+'), (n - m, '+'), n)
                same_negative = CyclePair.of((m, '-'), (n - m, '-'), n)
                mixed = CyclePair.of((m, '-'), (n - m, '+'), n)
                self.assertLessEqual(abs(f_cot_cot(m, n) - pair_iota(same_positive)), 1e-12)
                self.assertLessEqual(abs(f_csc_csc(m, n) - pair_iota(same_negative)), 1e-12)
                self.assertLessEqual(abs(f_csc_cot(m, n) - pair_iota(mixed)), 1e-12)

    def test_head_gap_at_22(self):
        value = head_gap(22)
        self.assertAlmostEqual(value, 1.463, delta=0.001)
        self.assertLess(value, HEAD_GAP_BOUND)
        self.assertAlmostEqual(value, 2 * csc(math.pi / 18) - 2 * cot(math.pi / 16), places=12)


class CertifyTest(SimpleTestCase):

    def test_examples(self):
        report = certify_monotone('csc_csc', 30, (2, 15), 10000)
        self.assertEqual(report.direction, DECREASING)
        self.assertTrue(report.passed)
        report = certify_monotone('cot_cot', 30, (2, 15), 10000)
        self.assertEqual(report.direction, INCREASING)
        self.assertTrue(report.passed)
        report = certify_monotone('inv_sq_csc', None, (2, 100), 10000)
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.grid_step, 98 / 9999, places=12)

    def test_every_claim(self):
        for n in range(6, 101, 2):
            for function, interval, direction in monotone_claims(n):
                report = certify_monotone(function, n, interval, 10000, direction)
                self.assertTrue(report.passed, str(report))

    def test_wrong_direction_fails(self):
        report = certify_monotone('csc_cot', 20, (2, 18), 1000, INCREASING)
        self.assertFalse(report.passed)
        self.assertLess(report.worst_difference, 0)
        self.assertTrue(str(report).startswith('FAIL csc_cot n=20'))

    def test_rejects_bad_requests(self):
        with self.assertRaises(InvalidArgument):
            certify_monotone('csc_csc', 30, (2, 15), 999)
        with self.assertRaises(InvalidArgument):
            certify_monotone('sin', 30, (2, 15))
        with self.assertRaises(InvalidArgument):
            certify_monotone('cot_cot', 30, (2, 28))
        with self.assertRaises(InvalidArgument):
            certify_monotone('csc_csc', 30, (2, 15), direction='up')
