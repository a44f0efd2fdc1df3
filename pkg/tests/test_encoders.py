import json
import os
import unittest
from fractions import Fraction

import mock
from marshmallow import ValidationError
from sympy import Integer

from cohomone.catalog import catalog_entries
from cohomone.collections import CatalogCollection, ReportCollection
from cohomone.dataclasses import CoverageReport, EnumConfig, VerificationReport
from cohomone.encoders import CohomoneJsonEncoder
from cohomone.enums import GroupFamily, Verdict
from cohomone.models import CatalogRecord


def _dumps(data) -> str:
    return json.dumps(data, cls=CohomoneJsonEncoder, sort_keys=True)


class TestJsonEncoder(unittest.TestCase):
    def test_exact_numbers_and_sets(self):
        self.assertEqual('{"a": 5, "b": "1/2", "c": [1, 3]}',
                         _dumps({'a': Integer(5), 'b': Fraction(1, 2), 'c': {3, 1}}))

    def test_dataclasses_and_enums(self):
        report = CoverageReport('SU', 3, 12, found=('su3-so3-u2',))

        expected = {'family': 'SU', 'n': 3, 'candidates': 12, 'found': ['su3-so3-u2'], 'missing': [], 'exact': []}

        self.assertEqual(expected, json.loads(_dumps(report)))
        self.assertEqual('"MATCH"', _dumps(Verdict.match))

    def test_output_is_deterministic(self):
        report = VerificationReport(entry_id='sp-u2', n=2, diagram='', verdict=Verdict.match, computed_chi=8)

        self.assertEqual(_dumps(report), _dumps(report))
        self.assertEqual('MATCH', json.loads(_dumps(report))['verdict'])


class TestCatalogRecordSchema(unittest.TestCase):
    document = {
        'entries': [{
            'id': 'sp-u2', 'family': 'Sp', 'n_min': 2, 'n_max': None, 'h': 'S1', 'kminus': 'U(2)', 'kplus': 'T2',
            'printed_chi': '2*n^2', 'source': 'result list', 'comment': 'ignored',
        }],
    }

    def test_load_envelope(self):
        records = CatalogRecord.Schema().load(self.document, many=True)

        self.assertEqual(1, len(records))
        self.assertEqual('sp-u2', records[0].id)
        self.assertFalse(records[0].spin_level)
        self.assertTrue(records[0].in_range(10))
        self.assertFalse(records[0].in_range(1))

    def test_missing_envelope(self):
        with self.assertRaises(ValidationError):
            CatalogRecord.Schema().load(self.document['entries'], many=True)
        with self.assertRaises(ValidationError):
            CatalogRecord.Schema().load({'entries': self.document['entries'][0]}, many=True)

    def test_dump_envelope(self):
        records = CatalogRecord.Schema().load(self.document, many=True)
        dumped = CatalogRecord.Schema().dump(records, many=True)

        self.assertEqual(['entries'], list(dumped))
        self.assertEqual('Sp', dumped['entries'][0]['family'])


class TestReportCollection(unittest.TestCase):
    def setUp(self):
        self.reports = ReportCollection([
            VerificationReport(entry_id='a', n=2, diagram='', verdict=Verdict.match),
            VerificationReport(entry_id='a', n=3, diagram='', verdict=Verdict.discrepancy),
            VerificationReport(entry_id='b', n=2, diagram='', verdict=Verdict.no_printed_value),
        ])

    def test_where(self):
        self.assertEqual([3], self.reports.where_verdict(Verdict.discrepancy).pluck('n'))
        self.assertEqual(2, len(self.reports.where_entry('a')))
        self.assertIsInstance(self.reports.where_entry('a'), ReportCollection)

    def test_slices_keep_the_type(self):
        self.assertIsInstance(self.reports[:2], ReportCollection)
        self.assertEqual(2, len(self.reports[1:]))

    def test_find(self):
        self.assertEqual(Verdict.no_printed_value, self.reports.find('b', 2).verdict)
        self.assertIsNone(self.reports.find('b', 3))


class TestCatalogCollection(unittest.TestCase):
    def test_find_and_filter(self):
        entries = catalog_entries()

        self.assertEqual('sp-u2', entries.find_by_id('sp-u2').id)
        self.assertIsNone(entries.find_by_id('sp-u3'))
        self.assertIsInstance(entries.where_family(GroupFamily.sp), CatalogCollection)
        self.assertEqual({GroupFamily.sp}, set(entries.where_family('Sp').pluck('family')))

    def test_printed_split(self):
        entries = catalog_entries()

        self.assertEqual(len(entries), len(entries.where_printed()) + len(entries.where_printed(False)))
        self.assertTrue(all(e.printed_chi is None for e in entries.where_printed(False)))


class TestEnumConfig(unittest.TestCase):
    def test_kmax_from_environment(self):
        with mock.patch.dict(os.environ, {'C1_KMAX': '3'}):
            self.assertEqual(3, EnumConfig().kmax)
            self.assertEqual(5, EnumConfig(kmax=5).kmax)

    def test_bounds_are_positive(self):
        with self.assertRaises(ValueError):
            EnumConfig(rank_bound=0)
        with self.assertRaises(ValueError):
            EnumConfig(max_factors=-1)
