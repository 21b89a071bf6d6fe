"""
🧪 Tests d'Intégration - Ligne de Commande
==========================================
"""

import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

import cli
from config import EXIT_CODES, SCHEMA_VERSIONS
from integer_sets.set_io import load_system, save_point_set
from tests.helpers import MEDIAN_NOT_TVPI, TVPI_NOT_MU, pset

TVPI_NOT_MU_SYSTEM = {
    'dim': 2,
    'rows': [
        {'coeffs': [1, 2], 'rhs': 2},
        {'coeffs': [1, 0], 'rhs': 0},
        {'coeffs': [-1, 0], 'rhs': -2},
        {'coeffs': [0, 1], 'rhs': 0},
        {'coeffs': [0, -1], 'rhs': -2},
    ],
}


class TestCli(unittest.TestCase):
    """Tests des sous-commandes via cli.main"""

    def setUp(self):
        """Initialisation avant chaque test"""
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.tvpi_path = self.path('tvpi.json')
        save_point_set(TVPI_NOT_MU, self.tvpi_path)
        self.median_path = self.path('median.json')
        save_point_set(MEDIAN_NOT_TVPI, self.median_path)
        self.out = self.path('out.json')

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def run_cli(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            code = cli.main(list(argv) + ['--quiet'])
        return code, stdout.getvalue()

    def read_out(self):
        with open(self.out, 'r', encoding='utf-8') as handle:
            return json.load(handle)

    def test_check_exit_codes(self):
        """Test check: 0 vrai, 1 faux avec certificat"""
        code, _ = self.run_cli('check', '--in', self.tvpi_path, '--property', 'repr-tvpi')
        self.assertEqual(code, EXIT_CODES['property_true'])

        code, _ = self.run_cli('check', '--in', self.tvpi_path, '--property', 'mu-closed', '--out', self.out)
        self.assertEqual(code, EXIT_CODES['property_false'])
        document = self.read_out()
        self.assertEqual(document['schema'], SCHEMA_VERSIONS['certificate'])
        self.assertFalse(document['holds'])
        self.assertEqual(document['certificate']['produced'], [1, 0])

    def test_check_parameterized_properties(self):
        """Test closed:<op>, weak-F:<kmax> et hereditary:<p>"""
        code, _ = self.run_cli('check', '--in', self.median_path, '--property', 'closed:median')
        self.assertEqual(code, 0)
        code, _ = self.run_cli('check', '--in', self.median_path, '--property', 'weak-F:3')
        self.assertEqual(code, 0)
        code, _ = self.run_cli('check', '--in', self.median_path, '--property', 'hereditary:2-decomposable')
        self.assertEqual(code, 0)

    def test_usage_errors(self):
        """Test erreurs d'utilisation: code 2"""
        self.assertEqual(self.run_cli('check', '--in', self.tvpi_path, '--property', 'convex')[0], 2)
        self.assertEqual(self.run_cli('check', '--property', 'mu-closed')[0], 2)
        self.assertEqual(self.run_cli('check', '--in', self.path('absent.json'), '--property', 'mu-closed')[0], 2)
        self.assertEqual(self.run_cli('frobnicate')[0], 2)
        self.assertEqual(self.run_cli('classify', '--in', self.tvpi_path, '--seed', '-1')[0], 2)
        broken = self.path('broken.json')
        with open(broken, 'w', encoding='utf-8') as handle:
            handle.write('{"dim": 2, "points": [[0, 0],')
        self.assertEqual(self.run_cli('classify', '--in', broken)[0], 2)

    def test_closure(self):
        """Test closure op:mu: points ajoutés et informations de fermeture"""
        code, _ = self.run_cli('closure', '--in', self.tvpi_path, '--kind', 'op:mu', '--out', self.out)
        self.assertEqual(code, 0)
        document = self.read_out()
        self.assertEqual(document['schema'], SCHEMA_VERSIONS['point_set'])
        self.assertIn([1, 0], document['points'])
        self.assertEqual(document['closure']['kind'], 'op:mu')

    def test_classify_with_xlsx(self):
        """Test classify avec export Excel"""
        workbook = self.path('profil.xlsx')
        code, output = self.run_cli('classify', '--in', self.tvpi_path, '--xlsx', workbook)
        self.assertEqual(code, 0)
        self.assertTrue(os.path.exists(workbook))
        self.assertIn('repr-tvpi', output)

    def test_repr(self):
        """Test repr: système relisible si représentable, trou sinon"""
        anti_diagonal = self.path('anti.json')
        save_point_set(pset((0, 1), (1, 0)), anti_diagonal)
        code, _ = self.run_cli('repr', '--in', anti_diagonal, '--class', 'UTVPI', '--out', self.out)
        self.assertEqual(code, 0)
        self.assertEqual(load_system(self.out).dim, 2)

        code, _ = self.run_cli('repr', '--in', anti_diagonal, '--class', 'dc', '--out', self.out)
        self.assertEqual(code, 1)
        self.assertEqual(self.read_out()['hole'], [0, 0])

    def test_solve(self):
        """Test solve: solutions entières dans la boîte"""
        system_path = self.path('system.json')
        with open(system_path, 'w', encoding='utf-8') as handle:
            json.dump(TVPI_NOT_MU_SYSTEM, handle)
        code, _ = self.run_cli('solve', '--in', system_path, '--box', '0:2,0:2', '--out', self.out)
        self.assertEqual(code, 0)
        self.assertEqual(sorted(self.read_out()['points']), sorted(TVPI_NOT_MU.to_rows()))
        self.assertEqual(self.run_cli('solve', '--in', system_path)[0], 2)

    def test_solve_malformed_system(self):
        """Test système dont les lignes ne sont pas une liste: code 2"""
        system_path = self.path('malformed.json')
        with open(system_path, 'w', encoding='utf-8') as handle:
            json.dump({'dim': 2, 'rows': 5}, handle)
        self.assertEqual(self.run_cli('solve', '--in', system_path, '--box', '0:1,0:1')[0], 2)

    def test_reference_examples(self):
        """Test rejeu des exemples embarqués"""
        code, output = self.run_cli('paper-examples')
        self.assertEqual(code, 0)
        self.assertIn('tvpi-not-mu', output)

    def test_verify_theorems(self):
        """Test suites: succès, puis mutation détectée"""
        code, _ = self.run_cli('verify-theorems', '--trials', '2', '--suite', 'operation-laws',
                               '--suite', 'median-mu-utvpi', '--out', self.out)
        self.assertEqual(code, 0)
        document = self.read_out()
        self.assertEqual([s['name'] for s in document['suites']], ['operation-laws', 'median-mu-utvpi'])

        code, _ = self.run_cli('verify-theorems', '--trials', '20', '--suite', 'operation-laws',
                               '--mutate', 'mu-ceil')
        self.assertEqual(code, 1)

    def test_json_and_plot(self):
        """Test document sur la sortie standard et tracé ASCII"""
        code, output = self.run_cli('check', '--in', self.tvpi_path, '--property', 'mu-closed', '--plot')
        self.assertEqual(code, 1)
        self.assertIn('0 | . o #', output)
        code, output = self.run_cli('closure', '--in', self.tvpi_path, '--kind', 'utvpi', '--json')
        self.assertEqual(code, 0)
        self.assertIn('"schema"', output)


if __name__ == '__main__':
    unittest.main()
