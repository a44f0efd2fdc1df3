import unittest

import mock

from cohomone.catalog import (catalog_entries, entry_by_id, entry_text, evaluate_chi, instantiate_entry, parse_chi,
                              render, reports_of, verify_all, verify_entry)
from cohomone.dataclasses import VerifySettings
from cohomone.diagrams import chi_terms
from cohomone.enums import GroupFamily, Verdict
from cohomone.exceptions import CohomoneException, GroupSyntaxException, InconsistentDescriptorException, \
    OutOfRangeException
from cohomone.spheres import pi1_surjective_in_SO

SUSPECTED_ERRATA = {'sp2-z2-diagonal-sp1', 'sp-irreducible-sp1', 'so-even-sigma'}


class TestTemplates(unittest.TestCase):
    def test_placeholders(self):
        self.assertEqual('SU(3)@[3..5]', render('SU({n-2})@[3..{n}]', 5))
        self.assertEqual('SU{1,4}@[1..5]', render('SU{1,{n-1}}@[1..{n}]', 5))

    def test_repetitions(self):
        self.assertEqual('S1[w(-1,1,0,0)]', render('S1[w(-1,1,<0^{n-2}>)]', 4))
        self.assertEqual('SO(3)#irr3in5(1,2,3,4,7)', render('SO(3)#irr3in5(<1..4>,{2*n+1})', 3))

    def test_empty_lists_and_trivial_factors(self):
        self.assertEqual('S1[w(1,1)]', render('S1[w(1,1,<0^{n-2}>)]', 2))
        self.assertEqual('SO(2)', render('SO(2)xSO({2*n-3})', 2))
        self.assertEqual('1', render('SU({n-1})', 2))

    def test_component_prefix(self):
        self.assertEqual('Z2.SO(2)', render('Z2.SO(2)xSp({n-2})', 2))

    def test_invalid_placeholder(self):
        with self.assertRaises(GroupSyntaxException):
            render('SU({n/2})', 3)


class TestChiExpressions(unittest.TestCase):
    def test_evaluate(self):
        self.assertEqual(15, evaluate_chi('n*(n+1)/2', 5))
        self.assertEqual(64, evaluate_chi('2^(n+1)', 5))
        self.assertEqual(32, evaluate_chi('n*2^{n-1}', 4))
        self.assertEqual(6, evaluate_chi('6', 3))

    def test_not_an_integer(self):
        with self.assertRaises(CohomoneException):
            evaluate_chi('n/2', 3)

    def test_foreign_symbol(self):
        with self.assertRaises(CohomoneException):
            parse_chi('2*m')


class TestEntries(unittest.TestCase):
    def test_catalog_is_loaded_through_schema(self):
        entries = catalog_entries()

        self.assertEqual(len(entries), len(set(entries.pluck('id'))))
        self.assertEqual(GroupFamily.sp, entry_by_id('sp-u2').family)

    def test_unknown_entry(self):
        with self.assertRaises(CohomoneException) as cm:
            entry_by_id('no-such-entry')

        self.assertEqual('Unknown Entry', cm.exception.code)

    def test_family_and_range(self):
        su3 = catalog_entries(GroupFamily.su).where_in_range(3)

        self.assertEqual(['su3-so3-u2', 'su3-so3-t2', 'su3-z3-so3-t2', 'su3-su2-u2', 'su3-u2-u2'], su3.pluck('id'))
        self.assertEqual(3, len(su3.where_printed()))

    def test_entry_text(self):
        self.assertEqual('SO(2)@[1..2]xSO(3)@[5..7] < U(2)@[1..4]xSO(3)@[5..7], SO(2)@[1..2]xSO(4)@[4..7] < SO(7)',
                         entry_text(entry_by_id('so-odd-u2'), 3))

    def test_out_of_range(self):
        with self.assertRaises(OutOfRangeException) as cm:
            instantiate_entry(entry_by_id('so7-g2-u3'), 4)

        self.assertEqual({'entry_id': 'so7-g2-u3', 'n': 4}, cm.exception.extra)

    def test_spin_level_entries(self):
        d = instantiate_entry(entry_by_id('spin7-g2-u3'), 3)

        self.assertTrue(d.spin_level)
        self.assertEqual('SO(7)', d.ambient.text)


class TestVerification(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.reports = reports_of(verify_all())

    def test_printed_values_match(self):
        for r in self.reports:
            if r.entry_id in SUSPECTED_ERRATA or r.printed_chi is None:
                continue
            with self.subTest(entry=r.entry_id, n=r.n):
                self.assertEqual(Verdict.match, r.verdict, r.error)

    def test_every_entry_passes_the_checks(self):
        for r in self.reports:
            with self.subTest(entry=r.entry_id, n=r.n):
                self.assertTrue(r.checks_passed, r.error or [c.check for c in r.validation.failures()
                                                            + r.filters.failures()])
                self.assertGreater(r.computed_chi, 0)
                self.assertEqual(0, r.dim_m % 2)

    def test_suspected_errata(self):
        expected = {
            ('sp2-z2-diagonal-sp1', 2): 5,
            ('sp-irreducible-sp1', 5): 10,
            ('so-even-sigma', 5): 32,
        }
        for (entry_id, n), computed in expected.items():
            with self.subTest(entry=entry_id):
                r = verify_entry(entry_by_id(entry_id), n)
                self.assertEqual(Verdict.discrepancy, r.verdict)
                self.assertEqual(computed, r.computed_chi)
                self.assertIsNotNone(r.printed_chi)
                self.assertNotEqual(r.printed_value, r.computed_chi)

    def test_match_values(self):
        su3 = self.reports.where_entry('su3-so3-u2')
        self.assertEqual([3], su3.pluck('computed_chi'))
        self.assertEqual(36, self.reports.find('sun-normalizer', 8).computed_chi)
        self.assertEqual(16, self.reports.find('sun-sigma', 8).computed_chi)
        self.assertEqual(14, self.reports.find('spin7-circle-k-3', 3).computed_chi)

    def test_row_with_block_at_even_coordinate(self):
        for n in (3, 4, 5):
            with self.subTest(n=n):
                r = verify_entry(entry_by_id('so-odd-u2'), n)

                self.assertEqual(Verdict.match, r.verdict, r.error)
                self.assertTrue(r.checks_passed)
                self.assertEqual(2 * n * (n + 1), r.computed_chi)

    def test_cases_without_printed_value(self):
        for r in self.reports.where_verdict(Verdict.no_printed_value):
            with self.subTest(entry=r.entry_id):
                self.assertIsNone(r.printed_chi)

    def test_explicit_ranges(self):
        summary = verify_all({GroupFamily.su: [3, 5]})

        self.assertEqual({'su3-so3-u2', 'su3-so3-t2', 'su3-z3-so3-t2', 'su3-su2-u2', 'su3-u2-u2', 'sun-sigma',
                          'sun-normalizer'}, {r.entry_id for r in summary.reports})
        self.assertEqual(0, len(verify_all({}).reports))

    def test_wide_family_ranges(self):
        summary = verify_all({
            GroupFamily.su: list(range(5, 11)),
            GroupFamily.so_odd: list(range(3, 9)),
            GroupFamily.sp: list(range(2, 9)),
            GroupFamily.so_even: list(range(4, 9)),
        })

        self.assertGreater(len(summary.reports), 0)
        for r in summary.reports:
            if r.entry_id in SUSPECTED_ERRATA:
                continue
            with self.subTest(entry=r.entry_id, n=r.n):
                self.assertTrue(r.checks_passed, r.error)
                self.assertGreater(r.computed_chi, 0)
                if r.printed_chi is not None:
                    self.assertEqual(Verdict.match, r.verdict, r.error)

    def test_spin_level_terms_come_from_connected_preimages(self):
        # a nonzero term needs a group of maximal rank, whose preimage in the spin group is connected
        for e in catalog_entries(GroupFamily.spin_odd):
            d = instantiate_entry(e, e.n_min)
            terms = chi_terms(d, False)
            with self.subTest(entry=e.id):
                self.assertTrue(d.spin_level)
                self.assertEqual(chi_terms(d), terms)
                self.assertEqual(verify_entry(e, e.n_min).computed_chi,
                                 verify_entry(e, e.n_min, covering_correction=False).computed_chi)
                for K, chi in zip((d.Kminus, d.Kplus, d.H), terms):
                    if chi:
                        self.assertTrue(pi1_surjective_in_SO(K))

    def test_parallel_verification_keeps_order(self):
        sequential = verify_all({GroupFamily.su: [3, 4]})
        parallel = verify_all({GroupFamily.su: [3, 4]}, VerifySettings(workers=2))

        self.assertEqual(sequential, parallel)

    def test_sampling_grid(self):
        settings = VerifySettings(samples=[2, 3, 9])

        self.assertEqual([3, 9], settings.sample(3, None))
        self.assertEqual([3, 4, 8], VerifySettings().sample(3, None))
        self.assertEqual([4], VerifySettings().sample(4, 4))

    def test_failures_are_reported(self):
        with mock.patch('cohomone.catalog.verification.chi_terms',
                        side_effect=InconsistentDescriptorException(message='broken')):
            r = verify_entry(entry_by_id('sp-u2'), 3)

        self.assertEqual(Verdict.discrepancy, r.verdict)
        self.assertIsNone(r.computed_chi)
        self.assertIn('broken', r.error)

    def test_covering_correction_is_passed_on(self):
        with mock.patch('cohomone.catalog.verification.chi_terms', return_value=(7, 7, 0)) as terms:
            r = verify_entry(entry_by_id('spin7-g2-so6'), 3, covering_correction=False)

        self.assertFalse(terms.call_args.args[1])
        self.assertEqual(14, r.computed_chi)
