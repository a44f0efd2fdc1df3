import time
import unittest

from cohomone.catalog import entry_by_id, instantiate_entry
from cohomone.dataclasses import EnumConfig
from cohomone.diagrams import dim_M, euler_char_M, format_diagram, normalize_diagram, validate_diagram
from cohomone.enumerator import (COMPONENT_ORDERS, UNPLACED, component_variants, cross_check_catalog, diagram_key,
                                 enumerate_candidates, enumerate_Kminus, enumerate_Kplus, fits, keys_match,
                                 placement_key, shape_key, torus_choices)
from cohomone.enums import GroupFamily
from cohomone.groups import ambient_of, dim, format_group, parse_group, rank


class TestEmbeddings(unittest.TestCase):
    def test_known_non_embeddings(self):
        self.assertFalse(fits(parse_group('SU(3)'), ambient_of(parse_group('Sp(2)'))))
        self.assertFalse(fits(parse_group('SU(4)'), ambient_of(parse_group('SO(7)'))))
        self.assertFalse(fits(parse_group('G2'), ambient_of(parse_group('SO(6)'))))
        self.assertTrue(fits(parse_group('G2'), ambient_of(parse_group('SO(7)'))))
        self.assertTrue(fits(parse_group('U(2)'), ambient_of(parse_group('Sp(2)'))))

    def test_rank_and_dimension(self):
        self.assertFalse(fits(parse_group('SU(3)'), ambient_of(parse_group('SU(3)'))))
        self.assertFalse(fits(parse_group('T3'), ambient_of(parse_group('SU(3)'))))


class TestKplus(unittest.TestCase):
    def test_maximal_rank(self):
        G = parse_group('SU(4)')
        kplus = enumerate_Kplus(G, EnumConfig())

        self.assertTrue(kplus)
        for K in kplus:
            with self.subTest(format_group(K)):
                self.assertEqual(rank(G), rank(K))


class TestKminus(unittest.TestCase):
    def test_g2_around_su3(self):
        H = parse_group('SU(3)@[1..6] in SO(7)')
        grown = [K for K, _ in enumerate_Kminus(H, parse_group('SO(7)'))]
        symbols = [[f.symbol for f in K.factors] for K in grown]

        self.assertIn(['G2'], symbols)
        self.assertNotIn(['SU(4)'], symbols)
        for K in grown:
            self.assertGreater(dim(K), dim(H))


class TestIsotropy(unittest.TestCase):
    def test_wide_tori_follow_the_configured_bound(self):
        basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        narrow = list(torus_choices(basis, 3, 3, 1))
        wide = list(torus_choices(basis, 3, 3, 3))

        self.assertLess(len(narrow), len(wide))
        self.assertLessEqual(set(narrow), set(wide))
        self.assertEqual(wide, list(torus_choices(basis, 3, 3)))

    def test_narrow_tori_use_kmax(self):
        basis = ((1, 0), (0, 1))

        self.assertEqual(list(torus_choices(basis, 2, 3)), list(torus_choices(basis, 2, 3, 1)))

    def test_bounds_must_be_positive(self):
        with self.assertRaises(ValueError):
            EnumConfig(wide_kmax=0)


class TestCandidates(unittest.TestCase):
    def test_ranks_outside_the_bound(self):
        self.assertEqual([], enumerate_candidates(parse_group('SU(2)')))
        self.assertEqual([], enumerate_candidates(parse_group('SU(5)'), EnumConfig(rank_bound=3)))

    def test_candidates_are_admissible_and_sorted(self):
        candidates = enumerate_candidates(parse_group('SU(3)'))
        texts = [format_diagram(d) for d in candidates]

        self.assertTrue(candidates)
        self.assertEqual(sorted(texts), texts)
        self.assertEqual(len(texts), len(set(texts)))
        for d in candidates:
            with self.subTest(format_diagram(d)):
                self.assertTrue(validate_diagram(d).passed)
                self.assertGreater(euler_char_M(d), 0)
                self.assertEqual(0, dim_M(d) % 2)

    def test_deterministic(self):
        first = [format_diagram(d) for d in enumerate_candidates(parse_group('Sp(2)'))]
        second = [format_diagram(d) for d in enumerate_candidates(parse_group('Sp(2)'))]

        self.assertEqual(first, second)

    def test_monotone_in_kmax(self):
        G = parse_group('SU(3)')
        small = {format_diagram(d) for d in enumerate_candidates(G, EnumConfig(kmax=1))}
        large = {format_diagram(d) for d in enumerate_candidates(G, EnumConfig(kmax=3))}

        self.assertLessEqual(small, large)

    def test_catalog_diagram_is_found(self):
        d = normalize_diagram(instantiate_entry(entry_by_id('su3-so3-u2'), 3))
        keys = {diagram_key(c) for c in enumerate_candidates(d.G)}

        self.assertTrue(any(keys_match(diagram_key(d), key) for key in keys))

    def test_keys_tell_embeddings_apart(self):
        so3 = diagram_key(instantiate_entry(entry_by_id('su3-so3-u2'), 3))
        su2 = diagram_key(instantiate_entry(entry_by_id('su3-su2-u2'), 3))

        self.assertEqual(shape_key(parse_group('SO(3)')), shape_key(parse_group('SU(2)')))
        self.assertNotEqual(so3, su2)
        self.assertFalse(keys_match(so3, su2))
        self.assertTrue(keys_match(so3, so3))

    def test_placement_key(self):
        self.assertEqual(3, placement_key(parse_group('SO(3)@[1..3] in SU(3)'))[0])
        self.assertEqual(2, placement_key(parse_group('SU(2)@[1..2] in SU(3)'))[0])
        self.assertEqual(placement_key(parse_group('S1[w(1,-1,0)] in SU(3)')),
                         placement_key(parse_group('S1[w(0,-1,1)] in SU(3)')))
        self.assertEqual(UNPLACED, placement_key(parse_group('SO(3)'))[0])

    def test_component_variants(self):
        d = instantiate_entry(entry_by_id('su3-so3-t2'), 3)
        variants = list(component_variants(d))

        self.assertEqual(3 * len(COMPONENT_ORDERS), len(variants))
        self.assertEqual({2, 3}, {v.H.component_order for v in variants})
        self.assertEqual([], list(component_variants(variants[0])))


class TestCrossCheck(unittest.TestCase):
    def test_catalog_rows_are_enumerated(self):
        for family, n in [(GroupFamily.su, 3), (GroupFamily.su, 4), (GroupFamily.su, 6), (GroupFamily.sp, 2),
                          (GroupFamily.sp, 4), (GroupFamily.so_odd, 3), (GroupFamily.so_odd, 5),
                          (GroupFamily.so_even, 4), (GroupFamily.so_even, 6)]:
            with self.subTest(family=family.value, n=n):
                start = time.monotonic()
                report = cross_check_catalog(family, n)

                self.assertLess(time.monotonic() - start, 60)
                self.assertTrue(report.complete, report.missing)
                self.assertGreaterEqual(report.candidates, len(report.found))
