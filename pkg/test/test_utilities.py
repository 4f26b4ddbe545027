import unittest
import pytest
import json
import os
import tempfile
from unittest import TestCase
from fractions import Fraction
import numpy as np
import extensions.utilities as utilities


class TestParsing(unittest.TestCase):
    def test_parse_composition(self):
        self.assertEqual(utilities.parse_composition('0, 1,2,2'), (0, 1, 2, 2))
        for bad in ['', '1,,2', '1,-2', 'x']:
            with pytest.raises(ValueError):
                utilities.parse_composition(bad)

    def test_parse_rational(self):
        self.assertEqual(utilities.parse_rational('1/2'), Fraction(1, 2))
        self.assertEqual(utilities.parse_rational('0.25'), Fraction(1, 4))
        self.assertEqual(utilities.parse_rational(3), Fraction(3))
        with pytest.raises(ValueError):
            utilities.parse_rational('1/0')
        with pytest.raises(TypeError):
            utilities.parse_rational(True)

    def test_format(self):
        self.assertEqual(utilities.format_rational(Fraction(4, 2)), '2')
        self.assertEqual(utilities.format_rational(Fraction(-3, 6)), '-1/2')
        self.assertEqual(utilities.format_composition((2, 1, 0)), '2,1,0')


class TestReports(TestCase):
    def test_report_frame(self):
        report = utilities.report_frame([('a', 'r', '1,0', 1, True), ('b', 'r', '0,1', 1, 0)])
        self.assertEqual(list(report.columns), utilities.REPORT_COLUMNS)
        self.assertFalse(utilities.report_passed(report))
        self.assertTrue(utilities.report_passed(report.iloc[:1]))
        self.assertTrue(utilities.report_passed(utilities.report_frame([])))

    def test_reference_column(self):
        report = utilities.report_frame([('a', 'r', '1,0', 1, True), ('z', 'r', '0,1', 1, True)],
                                        references={'a': 'named result'})
        self.assertEqual(list(report.columns), ['identity', 'reference', 'relation', 'mu', 'i', 'passed'])
        self.assertEqual(list(report['reference']), ['named result', ''])

    def test_dump_json(self):
        text = utilities.dump_json({'pi': Fraction(2, 9), 'n': np.int64(3), 'ok': np.bool_(True)})
        self.assertEqual(json.loads(text), {'pi': '2/9', 'n': 3, 'ok': True})
        with pytest.raises(TypeError):
            utilities.dump_json({'bad': object()})


class TestFiles(TestCase):
    def test_write_and_load(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'nested', 'config.yml')
            utilities.write_output("defaults:\n    't': '1/3'", path)
            self.assertEqual(utilities.load_config(path), {'defaults': {'t': '1/3'}})

    def test_package_config(self):
        config = utilities.package_config(os.path.join('mlqueues', 'qt_ring.py'), 'config_mlq.yml')
        self.assertEqual(config['constant']['trunc_margin'], 2)
