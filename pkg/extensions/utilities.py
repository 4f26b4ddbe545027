# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
import json
import os
import sys
from fractions import Fraction
import pandas as pd
import yaml


REPORT_COLUMNS = ['identity', 'relation', 'mu', 'i', 'passed']


def load_config(path):
	"""
	Loads a yml configuration file

	Args
	path: <string> path to the yml file, relative paths resolved against the working directory

	Returns:
	config <dict> parsed configuration (empty dict for an empty file)
	"""
	with open(path) as file:
		config = yaml.safe_load(file)
	return config or {}

def package_config(module_file, name):
	"""
	Loads a yml file that sits next to a module

	Args
	module_file: <string> the module's __file__
	name: <string> file name of the yml file

	Returns:
	config <dict>
	"""
	return load_config(os.path.join(os.path.dirname(os.path.abspath(module_file)), name))

def parse_composition(text):
	"""
	Parses a comma separated list of nonnegative integers

	Args
	text: <string> e.g. "0,1,2,2"

	Returns:
	parts <tuple> of int
	"""
	if not isinstance(text, str) or not text.strip():
		raise ValueError('composition must be a non-empty comma separated list of integers')
	parts = []
	for item in text.split(','):
		item = item.strip()
		if not item.isdigit():
			raise ValueError('composition parts must be nonnegative integers, got {!r}'.format(item))
		parts.append(int(item))
	return tuple(parts)

def parse_rational(text):
	"""
	Parses an exact rational written as p/q, an integer, or a terminating decimal

	Args
	text: <string> or <int> or <Fraction>

	Returns:
	value <Fraction>
	"""
	if isinstance(text, Fraction):
		return text
	if isinstance(text, bool):
		raise TypeError('rational must be given as text or an integer')
	if isinstance(text, int):
		return Fraction(text)
	try:
		return Fraction(str(text).strip())
	except (ValueError, ZeroDivisionError):
		raise ValueError('cannot read {!r} as an exact rational'.format(text))

def format_rational(value):
	"""
	Renders a Fraction as "p" or "p/q"

	Args
	value: <Fraction>

	Returns:
	text <string>
	"""
	value = Fraction(value)
	if value.denominator == 1:
		return str(value.numerator)
	return '{}/{}'.format(value.numerator, value.denominator)

def format_composition(parts):
	"""Renders a composition the way it is typed on the command line"""
	return ','.join(str(p) for p in parts)

def report_frame(rows, columns=None, references=None):
	"""
	Builds a verification report

	Args
	rows: <list> of dicts or tuples in column order
	columns: <list> column names, defaults to REPORT_COLUMNS
	references: <dict> identity -> named result, adds a reference column after identity

	Returns:
	report <dataframe> one row per checked identity
	"""
	columns = columns or REPORT_COLUMNS
	report = pd.DataFrame(list(rows), columns=columns)
	if 'passed' in report.columns:
		report['passed'] = report['passed'].astype(bool)
	if references is not None and 'identity' in report.columns:
		report.insert(report.columns.get_loc('identity') + 1, 'reference',
			[references.get(name, '') for name in report['identity']])
	return report

def report_passed(report):
	"""True when every row of a report passed (an empty report passes)"""
	return bool(report['passed'].all()) if len(report) else True

def _json_default(value):
	if isinstance(value, Fraction):
		return format_rational(value)
	if hasattr(value, 'item'):
		# numpy scalars coming out of report frames
		return value.item()
	raise TypeError('{!r} is not JSON serializable'.format(value))

def dump_json(obj):
	"""Serializes to stable, indented JSON"""
	return json.dumps(obj, indent=2, sort_keys=False, default=_json_default)

def write_output(text, out=None):
	"""
	Writes text to a file, or to stdout when no path is given

	Args
	text: <string>
	out: <None> or <string> output path
	"""
	if out is None:
		sys.stdout.write(text)
		if not text.endswith('\n'):
			sys.stdout.write('\n')
		return
	directory = os.path.dirname(out)
	if directory:
		os.makedirs(directory, exist_ok=True)
	with open(out, 'w') as file:
		file.write(text if text.endswith('\n') else text + '\n')
