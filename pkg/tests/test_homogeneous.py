import unittest
from math import comb

from cohomone.exceptions import InconsistentDescriptorException
from cohomone.groups import parse_group
from cohomone.homogeneous import euler_char, quotient_invariants


class TestEulerChar(unittest.TestCase):
    def test_complex_projective_spaces(self):
        for n in range(1, 9):
            with self.subTest(n=n):
                self.assertEqual(n + 1, euler_char(parse_group(f'SU({n + 1})'), parse_group(f'SU{{1,{n}}}')))

    def test_grassmannians(self):
        for a in range(1, 10):
            for b in range(1, 11 - a):
                with self.subTest(a=a, b=b):
                    self.assertEqual(comb(a + b, a),
                                     euler_char(parse_group(f'SU({a + b})'), parse_group(f'SU{{{a},{b}}}')))

    def test_orthogonal_quotients(self):
        for n in range(2, 9):
            with self.subTest(n=n):
                self.assertEqual(2 ** (n - 1), euler_char(parse_group(f'SO({2 * n})'), parse_group(f'U({n})')))
        for n in range(1, 9):
            with self.subTest(n=n):
                self.assertEqual(2, euler_char(parse_group(f'SO({2 * n + 1})'), parse_group(f'SO({2 * n})')))

    def test_components_divide(self):
        self.assertEqual(1, euler_char(parse_group('SO(3)'), parse_group('Z2.SO(2)')))

        with self.assertRaises(InconsistentDescriptorException):
            euler_char(parse_group('SU(3)'), parse_group('Z4.T2'))

    def test_lower_rank_vanishes(self):
        self.assertEqual(0, euler_char(parse_group('SU(3)'), parse_group('SU(2)')))

    def test_quotient_invariants(self):
        invariants = quotient_invariants(parse_group('Sp(2)'), parse_group('Sp(1)xSp(1)'))

        self.assertEqual(4, invariants.dim_quotient)
        self.assertEqual(0, invariants.corank)
        self.assertEqual(2, invariants.euler)
