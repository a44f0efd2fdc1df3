import unittest
from math import gcd

from hypothesis import assume, given, strategies as st

from cohomone.enums import QuotientType
from cohomone.exceptions import GroupSemanticException, InconsistentDescriptorException
from cohomone.groups import dim, parse_group
from cohomone.spheres import (SPHERE_PATTERNS, classify_quotient, in_span, integer_kernel, pi1_index_brute_force,
                              pi1_index_circle, sphere_isotropy_circle, transitive_pairs_on_sphere, weighted_circle)


class TestCircles(unittest.TestCase):
    def test_sphere_isotropy_circle(self):
        self.assertEqual((4, -1, -1), sphere_isotropy_circle(3, 1))

    def test_projective_family(self):
        for n in range(3, 11):
            for k in range(-9, 10, 2):
                l = (k + 2) * (n - 1)
                if gcd(l, k) != 1:
                    continue
                with self.subTest(n=n, k=k):
                    self.assertEqual(2, pi1_index_circle(l, k, n))

    @given(st.integers(-12, 12), st.integers(-12, 12), st.integers(2, 6))
    def test_brute_force_agrees(self, l, k, n):
        assume(gcd(l, k) == 1 and l != k * (n - 1))

        self.assertEqual(pi1_index_brute_force(l, k, n), pi1_index_circle(l, k, n))

    def test_invalid_circle(self):
        with self.assertRaises(GroupSemanticException):
            pi1_index_circle(4, 2, 3)
        with self.assertRaises(InconsistentDescriptorException):
            pi1_index_circle(2, 1, 3)


class TestLattice(unittest.TestCase):
    def test_integer_kernel(self):
        kernel = integer_kernel([(1, 1, 1)], 3)

        self.assertEqual(2, len(kernel))
        self.assertTrue(all(sum(v) == 0 for v in kernel))

    def test_in_span(self):
        self.assertTrue(in_span([(1, -1, 0)], [(1, 0, -1), (0, 1, -1)], 3))
        self.assertFalse(in_span([(1, 0, 0)], [(1, 0, -1), (0, 1, -1)], 3))


class TestRecognition(unittest.TestCase):
    def test_embedded_sphere(self):
        quotient = classify_quotient(parse_group('SU(3)@[1..3] in SU(3)'), parse_group('SU(2)@[2..3] in SU(3)'))

        self.assertEqual(QuotientType.sphere, quotient.type)
        self.assertEqual(5, quotient.dim)

    def test_abstract_sphere(self):
        self.assertEqual('S^3', classify_quotient(parse_group('SO(4)'), parse_group('SO(3)')).text)
        self.assertEqual('S^7', classify_quotient(parse_group('Spin(7)'), parse_group('G2')).text)

    def test_projective_space(self):
        quotient = classify_quotient(parse_group('SO(3)'), parse_group('1'))

        self.assertEqual(QuotientType.projective, quotient.type)
        self.assertEqual('RP^3', quotient.text)

    def test_isotropy_group_too_large(self):
        with self.assertRaises(InconsistentDescriptorException):
            classify_quotient(parse_group('SU(2)'), parse_group('SO(3)'))

    def test_blocks_starting_at_even_coordinates(self):
        for K, H, l in [('SO(4)@[2..5]', 'SO(3)@[2..4]', 3), ('SO(6)@[2..7]', 'SO(5)@[2..6]', 5),
                        ('SO(4)@[1..4]', 'SO(3)@[1..3]', 3)]:
            with self.subTest(K=K, H=H):
                quotient = classify_quotient(parse_group(f'{K} in SO(7)'), parse_group(f'{H} in SO(7)'))

                self.assertEqual(QuotientType.sphere, quotient.type)
                self.assertEqual(l, quotient.dim)

    def test_twisted_circle_gives_sphere(self):
        K = parse_group('U(3)@[1..3] in Sp(3)')
        for k in range(-4, 5):
            weights = ','.join(map(str, sphere_isotropy_circle(3, k)))
            with self.subTest(k=k):
                quotient = classify_quotient(K, parse_group(f'S1[w({weights})]xSU(2)@[2..3] in Sp(3)'))

                self.assertEqual(QuotientType.sphere, quotient.type)
                self.assertEqual(5, quotient.dim)

    def test_circle_with_index_two_gives_projective_space(self):
        quotient = classify_quotient(parse_group('U(3)@[1..3] in Sp(3)'),
                                     parse_group('S1[w(6,-1,-1)]xSU(2)@[2..3] in Sp(3)'))

        self.assertEqual(QuotientType.projective, quotient.type)
        self.assertEqual('RP^5', quotient.text)

    def test_unitary_circle_family_follows_index(self):
        expected = {1: QuotientType.sphere, 2: QuotientType.projective}
        for n in range(3, 6):
            K = parse_group(f'U({n})@[1..{n}] in Sp({n})')
            for l in range(-6, 7):
                for k in range(-4, 5):
                    if gcd(l, k) != 1 or l == k * (n - 1):
                        continue
                    weights = ','.join(map(str, weighted_circle(l, k, n)))
                    H = parse_group(f'S1[w({weights})]xSU({n - 1})@[2..{n}] in Sp({n})')
                    index = pi1_index_circle(l, k, n)
                    with self.subTest(l=l, k=k, n=n):
                        quotient = classify_quotient(K, H)

                        self.assertEqual(expected.get(index, QuotientType.lens), quotient.type)
                        self.assertEqual(index, quotient.index)
                        if index <= 2:
                            self.assertEqual(2 * n - 1, quotient.dim)

    def test_transitive_pairs(self):
        names = [a.pattern.name for a in transitive_pairs_on_sphere(7)]

        self.assertEqual(['SO', 'SU', 'U', 'Sp', 'SpSp1', 'SpU1', 'Spin7'], names)

    def test_pattern_dimensions_agree_with_groups(self):
        for pattern in SPHERE_PATTERNS:
            for n in [0] if pattern.is_fixed else range(pattern.n_min, 11):
                action = pattern.instantiate(n)
                with self.subTest(pattern=pattern.name, n=n):
                    self.assertEqual(dim(parse_group(action.acting)) - dim(parse_group(action.isotropy)),
                                     action.sphere_dim)

    def test_sphere_dimension_must_be_positive(self):
        with self.assertRaises(GroupSemanticException):
            transitive_pairs_on_sphere(0)
