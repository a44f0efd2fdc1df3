import io
import json
import os
import tempfile
import unittest

import mock

from cohomone.cli import run


def _run(*argv) -> tuple[int, str]:
    with mock.patch('sys.stdout', new_callable=io.StringIO) as out, \
            mock.patch('sys.stderr', new_callable=io.StringIO):
        code = run(list(argv))
    return code, out.getvalue()


class TestCli(unittest.TestCase):
    def test_euler(self):
        self.assertEqual((0, '3\n'), _run('euler', 'SU(3)', 'SU{1,2}'))

    def test_euler_json(self):
        code, out = _run('euler', 'SU(3)', 'SU{1,2}', '--format', 'json')

        self.assertEqual(0, code)
        self.assertEqual([{'G': 'SU(3)', 'K': 'SU{1,2}', 'euler': 3}], json.loads(out))

    def test_index(self):
        self.assertEqual((0, '2\n'), _run('index', '6', '1', '3'))

    def test_malformed_expression(self):
        code, out = _run('euler', 'SU(3)', 'SU(3', '--format', 'json')
        error = json.loads(out)

        self.assertEqual(2, code)
        self.assertEqual('Syntax Error', error['error'])
        self.assertIsInstance(error['offset'], int)

    def test_missing_input(self):
        code, _ = _run('invariants')

        self.assertEqual(2, code)

    def test_invariants_from_file(self):
        with tempfile.NamedTemporaryFile('w', suffix='.txt', delete=False, encoding='utf-8') as f:
            f.write('# groups\nSU(3)\n\nG2  # exceptional\n')
        self.addCleanup(os.remove, f.name)

        code, out = _run('invariants', '--file', f.name, '--format', 'json')
        rows = json.loads(out)

        self.assertEqual(0, code)
        self.assertEqual(['SU(3)', 'G2'], [r['group'] for r in rows])
        self.assertEqual([6, 12], [r['weyl_order'] for r in rows])

    def test_verify_catalog(self):
        code, out = _run('verify-catalog', '--family', 'SU', '--n', '3', '--format', 'json')
        document = json.loads(out)

        self.assertEqual(0, code)
        self.assertEqual(5, len(document['reports']))
        self.assertEqual(3, document['counts']['MATCH'])

    def test_patterns(self):
        code, out = _run('patterns', '--format', 'json')

        self.assertEqual(0, code)
        self.assertTrue(json.loads(out))

    def test_catalog_export(self):
        code, out = _run('catalog-export', '--format', 'json')

        self.assertEqual(0, code)
        self.assertIn('entries', json.loads(out))
