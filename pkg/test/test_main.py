import unittest
import pytest
import json
import os
import tempfile
from unittest import TestCase
from main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run


class TestCommands(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.out = os.path.join(self.tmp.name, 'out', 'result.txt')

    def tearDown(self):
        self.tmp.cleanup()

    def read(self):
        with open(self.out) as file:
            return file.read()

    def test_fmu_of_empty_type(self):
        self.assertEqual(run(['fmu', '--mu', '0,0,0', '--out', self.out]), EXIT_OK)
        self.assertEqual(self.read().strip(), '1')

    def test_fmu_specialized(self):
        self.assertEqual(run(['fmu', '--mu', '0,2', '--q', '0', '--t', '1/2', '--out', self.out]), EXIT_OK)
        self.assertEqual(self.read().strip(), '1/2*x1*x2 + x2^2')

    def test_enumerate_json(self):
        self.assertEqual(run(['enumerate', '--mu', '0,1,2,2', '--format', 'json', '--out', self.out]), EXIT_OK)
        data = json.loads(self.read())
        self.assertEqual(data['count'], 3)
        self.assertEqual(len(data['queues']), 3)

    def test_tableaux(self):
        self.assertEqual(run(['tableaux', '--mu', '0,1,2,2', '--out', self.out]), EXIT_OK)
        self.assertIn('3 queue tableaux of type 0,1,2,2', self.read())

    def test_reports(self):
        self.assertEqual(run(['verify-qkz', '--lambda', '2,1,0', '--out', self.out]), EXIT_OK)
        self.assertEqual(run(['martin-check', '--lambda', '2,1,0', '--t', '1/2', '--out', self.out]), EXIT_OK)
        self.assertEqual(run(['nonsym', '--lambda', '2,0', '--out', self.out]), EXIT_OK)

    def test_martin_check_reports_discrepancy(self):
        self.assertEqual(run(['martin-check', '--lambda', '2,1,1,0', '--t', '1/3', '--out', self.out]), EXIT_OK)
        text = self.read()
        self.assertIn('max_discrepancy: 0', text)
        self.assertIn('reference', text)
        self.assertEqual(run(['martin-check', '--lambda', '2,1,0', '--t', '0', '--format', 'json',
                              '--out', self.out]), EXIT_OK)
        data = json.loads(self.read())
        self.assertEqual(data['max_discrepancy'], '0')
        self.assertTrue(data['passed'])
        self.assertEqual(len(data['identities']), 6)
        self.assertIn('reference', data['identities'][0])

    def test_stationary_json(self):
        self.assertEqual(run(['stationary', '--lambda', '2,1,0', '--t', '0', '--format', 'json',
                              '--out', self.out]), EXIT_OK)
        data = json.loads(self.read())
        self.assertEqual(dict(zip(data['states'], data['pi']))['2,1,0'], '2/9')

    def test_stationary_with_simulation(self):
        self.assertEqual(run(['stationary', '--lambda', '1,0', '--steps', '200', '--seed', '3',
                              '--format', 'json', '--out', self.out]), EXIT_OK)
        self.assertIn('total_variation', json.loads(self.read()))


class TestErrors(TestCase):
    def test_usage_errors(self):
        self.assertEqual(run([]), EXIT_USAGE)
        self.assertEqual(run(['bogus']), EXIT_USAGE)
        self.assertEqual(run(['fmu']), EXIT_USAGE)
        self.assertEqual(run(['fmu', '--mu', 'a,b']), EXIT_USAGE)
        self.assertEqual(run(['zlambda', '--lambda', '1,2']), EXIT_USAGE)
        self.assertEqual(run(['martin-check', '--lambda', '1,0', '--t', 'half']), EXIT_USAGE)

    def test_bad_truncation(self):
        self.assertEqual(run(['ansatz', '--lambda', '2,0', '--trunc', '2']), EXIT_USAGE)

    def test_exit_codes_are_distinct(self):
        self.assertEqual(len({EXIT_OK, EXIT_USAGE, EXIT_FAILED}), 3)
