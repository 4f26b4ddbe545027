import unittest
import pytest
from unittest import TestCase
import itertools
from fractions import Fraction
from mlqueues.exceptions import IndexOutOfRange
from mlqueues.macdonald_ops import (E_nonsymmetric, F, QKZFamily, Z, check_nonsymmetric, check_qkz,
                                    check_recursion, check_symmetric, check_two_line_lemmas,
                                    cherednik_Y, cherednik_eigenvalue, hecke_T, hecke_T_inverse,
                                    is_symmetric, schur_oracle, semistandard_tableaux, shift_omega,
                                    two_line_F)
from mlqueues.qt_ring import ONE, QTRational, XPolynomial
from extensions.utilities import report_passed

q = QTRational.monomial(1, 0)
t = QTRational.monomial(0, 1)
u = ONE - t


def inverse(a, b):
    return QTRational(1, [(a, b)])


def poly(n, terms):
    return XPolynomial(n, terms)


def partitions_within(bound):
    '''Nonzero partitions of length len(bound) lying under bound part by part.'''
    return [lam for lam in itertools.product(*(range(b + 1) for b in bound))
            if any(lam) and all(lam[k] >= lam[k + 1] for k in range(len(lam) - 1))]


def generic(n):
    # a polynomial with no symmetry, used to test operator identities
    if n == 2:
        return poly(2, {(2, 1): 1, (0, 3): q, (1, 0): Fraction(3, 2)})
    return poly(3, {(2, 1, 0): 1, (0, 1, 2): t, (1, 0, 1): Fraction(-2), (0, 0, 1): q})


class TestWeightGeneratingFunctions(unittest.TestCase):
    def test_two_variables(self):
        self.assertEqual(F((2, 0)), poly(2, {(2, 0): 1, (1, 1): q * u * inverse(1, 1)}))
        self.assertEqual(F((0, 2)), poly(2, {(0, 2): 1, (1, 1): u * inverse(1, 1)}))
        self.assertEqual(F((2, 1)), poly(2, {(2, 1): 1}))

    def test_three_variables(self):
        self.assertEqual(F((1, 0, 2)), poly(3, {(1, 0, 2): 1, (1, 1, 1): u * inverse(1, 2)}))
        self.assertEqual(F((2, 1, 0)), poly(3, {(2, 1, 0): 1, (1, 1, 1): q * u * inverse(1, 2)}))
        self.assertEqual(F((0, 1, 2)), poly(3, {(0, 1, 2): 1, (1, 1, 1): t * u * inverse(1, 2)}))
        self.assertEqual(F((1, 2, 0)), poly(3, {(1, 2, 0): 1, (1, 1, 1): q * t * u * inverse(1, 2)}))
        coefficient = q * u * inverse(1, 1)
        self.assertEqual(F((2, 0, 0)), poly(3, {(2, 0, 0): 1, (1, 1, 0): coefficient, (1, 0, 1): coefficient}))

    def test_four_variables(self):
        expected = poly(4, {(0, 1, 2, 2): 1,
                            (1, 1, 2, 1): t * u * inverse(1, 2),
                            (1, 1, 1, 2): t * u * inverse(1, 2)})
        self.assertEqual(F((0, 1, 2, 2)), expected)
        self.assertEqual(F((0, 1, 2, 2)).evaluate([1, 1, 1, 1], 1, Fraction(1, 2)), Fraction(5, 3))

    def test_parts_at_most_one(self):
        self.assertEqual(F((1, 0, 1)), poly(3, {(1, 0, 1): 1}))
        self.assertEqual(F((0, 0, 0)), XPolynomial.one(3))

    def test_symmetric_sum(self):
        self.assertEqual(Z((1, 0)), poly(2, {(1, 0): 1, (0, 1): 1}))
        self.assertEqual(Z((1, 1, 0)), poly(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}))
        with pytest.raises(ValueError):
            Z((1, 2))


class TestOperators(TestCase):
    def test_hecke_exchanges_two_variables(self):
        self.assertEqual(hecke_T(1, F((2, 0))), F((0, 2)))
        self.assertEqual(hecke_T(1, F((2, 1, 0))), F((1, 2, 0)))

    def test_hecke_quadratic_relation(self):
        f = generic(3)
        for i in (1, 2):
            g = hecke_T(i, f) + f
            self.assertEqual(hecke_T(i, g), g.scale(t))

    def test_braid_relation(self):
        f = generic(3)
        self.assertEqual(hecke_T(1, hecke_T(2, hecke_T(1, f))), hecke_T(2, hecke_T(1, hecke_T(2, f))))

    def test_inverse(self):
        f = generic(3)
        self.assertEqual(hecke_T_inverse(2, hecke_T(2, f)), f)
        self.assertEqual(hecke_T(1, hecke_T_inverse(1, f)), f)

    def test_operator_index(self):
        with pytest.raises(IndexOutOfRange):
            hecke_T(2, generic(2))
        with pytest.raises(IndexOutOfRange):
            cherednik_Y(0, generic(2))

    def test_shift_omega(self):
        self.assertEqual(shift_omega(XPolynomial.variable(2, 1)), poly(2, {(0, 1): q}))

    def test_cherednik_eigenfunction(self):
        f = F((2, 0))
        self.assertEqual(cherednik_Y(1, f), f.scale(q * q))
        self.assertEqual(cherednik_Y(2, f), f)

    def test_cherednik_on_constants(self):
        one = XPolynomial.one(3)
        for i in (1, 2, 3):
            self.assertEqual(cherednik_Y(i, one), one.scale(QTRational.monomial(0, (i - 1) - (3 - i))))

    def test_cherednik_operators_commute(self):
        f = generic(2)
        self.assertEqual(cherednik_Y(1, cherednik_Y(2, f)), cherednik_Y(2, cherednik_Y(1, f)))

    def test_eigenvalue(self):
        self.assertEqual(cherednik_eigenvalue((2, 1, 1, 0), 2), (2, 1, -1))
        self.assertEqual(cherednik_eigenvalue((2, 1, 1, 0), 3).value(), QTRational.monomial(1, 1))

    def test_is_symmetric(self):
        self.assertTrue(is_symmetric(Z((2, 1, 0))))
        self.assertFalse(is_symmetric(F((2, 1, 0)), 1))


class TestCharacterization(TestCase):
    def test_qkz_two_one_zero(self):
        report = check_qkz((2, 1, 0))
        self.assertTrue(report_passed(report))
        self.assertEqual(set(report['identity']),
                         {'hecke_descent', 'exchange_descent', 'symmetric_weighted', 'symmetric_sum', 'cyclic_shift'})

    def test_qkz_with_repeated_parts(self):
        self.assertTrue(report_passed(check_qkz((1, 1, 0))))
        self.assertTrue(report_passed(check_qkz((2, 2, 0))))

    def test_qkz_reports_a_wrong_family(self):
        lam = (1, 0)
        members = {(1, 0): XPolynomial.variable(2, 1), (0, 1): XPolynomial.variable(2, 1)}
        report = check_qkz(lam, QKZFamily(lam, members))
        self.assertFalse(report_passed(report))

    def test_family_validation(self):
        with pytest.raises(ValueError):
            QKZFamily((1, 0), {(1, 0): XPolynomial.variable(2, 1)})

    def test_nonsymmetric(self):
        self.assertEqual(E_nonsymmetric((1, 0, 0)), XPolynomial.variable(3, 1))
        self.assertEqual(E_nonsymmetric((2, 1, 0)), F((2, 1, 0)))
        self.assertTrue(report_passed(check_nonsymmetric((2, 0))))

    def test_symmetric(self):
        self.assertTrue(report_passed(check_symmetric((2, 1, 0))))
        self.assertTrue(report_passed(check_symmetric((2, 0))))


class TestSmallPartitionSweep(TestCase):
    def test_qkz_separates_the_free_count_rule(self):
        report = check_qkz((3, 2, 1, 0))
        self.assertEqual(len(report), 204)
        self.assertTrue(report_passed(report))
        for identity in ('hecke_descent', 'exchange_descent', 'symmetric_sum', 'symmetric_weighted'):
            self.assertTrue(report_passed(report[report['identity'] == identity]))
            self.assertGreater(int((report['identity'] == identity).sum()), 0)

    def test_qkz_under_three_two_one(self):
        for lam in partitions_within((3, 2, 1, 0)):
            self.assertTrue(report_passed(check_qkz(lam)), lam)

    def test_qkz_with_more_holes(self):
        self.assertTrue(report_passed(check_qkz((3, 2, 1, 0, 0))))
        self.assertTrue(report_passed(check_qkz((2, 2, 1, 1, 0, 0))))

    def test_nonsymmetric_under_three_two_one(self):
        for lam in partitions_within((3, 2, 1, 0)):
            self.assertTrue(report_passed(check_nonsymmetric(lam)), lam)
        self.assertTrue(report_passed(check_nonsymmetric((3, 2, 1, 0, 0))))
        self.assertTrue(report_passed(check_nonsymmetric((2, 2, 1, 1, 0, 0))))

    def test_symmetric_under_three_two_one(self):
        for lam in partitions_within((3, 2, 1, 0)):
            self.assertTrue(report_passed(check_symmetric(lam)), lam)

    def test_recursion_under_three_two_one(self):
        self.assertTrue(report_passed(check_recursion((3, 2, 1, 0))))


class TestTwoLineQueues(TestCase):
    def test_recursion(self):
        self.assertTrue(report_passed(check_recursion((2, 2, 1, 0))))
        self.assertTrue(report_passed(check_recursion((3, 1, 0))))

    def test_two_line_values(self):
        self.assertEqual(two_line_F((2, 0), (0, 2)), poly(2, {(1, 0): q * u * inverse(1, 1)}))
        self.assertEqual(two_line_F((2, 0, 2), (2, 2, 0)), poly(3, {(1, 0, 1): u * inverse(1, 1)}))

    def test_zero_between_parts(self):
        x1, x2 = XPolynomial.variable(3, 1), XPolynomial.variable(3, 2)
        lhs = x1 * two_line_F((0, 2, 3), (3, 2, 0))
        rhs = (x2 * two_line_F((2, 0, 3), (2, 3, 0))).scale(t)
        self.assertEqual(lhs, rhs)
        self.assertEqual(lhs, poly(3, {(1, 1, 1): t * u * inverse(2, 2)}))

    def test_two_line_lemmas(self):
        report = check_two_line_lemmas((2, 0))
        self.assertTrue(report_passed(report))
        self.assertIn('two_line_zero_meet', set(report['identity']))

    def test_mismatched_rows(self):
        with pytest.raises(ValueError):
            two_line_F((2, 0), (2, 0, 0))


class TestSchur(TestCase):
    def test_tableaux_count(self):
        self.assertEqual(len(semistandard_tableaux((2, 1, 0), 3)), 8)

    def test_schur_polynomial(self):
        s = schur_oracle((2, 1, 0), 3)
        self.assertEqual(len(s.terms), 7)
        self.assertEqual(s.coefficient((1, 1, 1)), QTRational(2))
        self.assertEqual(s.coefficient((0, 1, 2)), ONE)
