# -*- coding: utf-8 -*-
''' Weight-generating polynomials of multiline queues and the operators that
characterize them: Hecke generators T_i, the shift omega and the Cherednik
operators Y_i. Verification routines return pandas reports.'''

import functools
import logging
from fractions import Fraction
from typing import NamedTuple
import extensions.utilities as utilities
from mlqueues.exceptions import CharacterizationFailed, IndexOutOfRange
from mlqueues.mlq_core import (Composition, as_partition, enumerate_mlq, queue_weight,
                               top_labelings, two_line_queues)
from mlqueues.qt_ring import ONE, ZERO, QTRational, XPolynomial, qt_equals

config_mlq = utilities.package_config(__file__, 'config_mlq.yml')
# defining constant
SPECIALIZATION_POINTS = [utilities.parse_rational(c)
                         for c in config_mlq['constant']['specialization_points']]
REPORT_COLUMNS = config_mlq['results']['report_columns']
REFERENCES = config_mlq['results']['references']

T = QTRational.monomial(0, 1)
ONE_MINUS_T = ONE - T
T_INVERSE = QTRational.monomial(0, -1)


@functools.lru_cache(maxsize=None)
def _F(mu):
    return XPolynomial.sum(mu.n, (queue_weight(Q) for Q in enumerate_mlq(mu)))


def F(mu):
    '''Sum of wt_x(Q) wt_qt(Q) over the multiline queues of type mu.'''
    return _F(Composition(mu))


@functools.lru_cache(maxsize=None)
def _Z(lam):
    return XPolynomial.sum(lam.n, (F(mu) for mu in lam.rearrangements()))


def Z(lam):
    '''Sum of F over the distinct rearrangements of the partition lam.'''
    return _Z(as_partition(lam))


def _check_operator_index(i, upper):
    if not isinstance(i, int) or isinstance(i, bool):
        raise TypeError('operator index must be an integer')
    if i < 1 or i > upper:
        raise IndexOutOfRange('operator index {} outside 1..{}'.format(i, upper))


def _hecke_factor(n, i):
    # t x_i - x_{i+1}
    return XPolynomial.variable(n, i).scale(T) - XPolynomial.variable(n, i + 1)


def hecke_T(i, f):
    '''T_i f = t f - (t x_i - x_{i+1}) (f - s_i f) / (x_i - x_{i+1})'''
    _check_operator_index(i, f.n - 1)
    quotient = (f - f.swap_vars(i)).divide_by_xdiff(i)
    return f.scale(T) - _hecke_factor(f.n, i) * quotient


def hecke_T_inverse(i, f):
    '''T_i^{-1} f = (T_i f + (1 - t) f) / t'''
    return (hecke_T(i, f) + f.scale(ONE_MINUS_T)).scale(T_INVERSE)


def shift_omega(f):
    '''(omega f)(x_1, .., x_n) = f(q x_n, x_1, .., x_{n-1})'''
    return f.rotate_vars(twist=True)


def cherednik_Y(i, f):
    '''Y_i = T_i^{-1} .. T_{n-1}^{-1} omega T_1 .. T_{i-1}, rightmost factor applied first.'''
    n = f.n
    _check_operator_index(i, n)
    g = f
    for j in range(i - 1, 0, -1):
        g = hecke_T(j, g)
    g = shift_omega(g)
    for j in range(n - 1, i - 1, -1):
        g = hecke_T_inverse(j, g)
    return g


class CherednikEigenvalue(NamedTuple):
    i: int
    q_power: int
    t_power: int

    def value(self):
        return QTRational.monomial(self.q_power, self.t_power)


def cherednik_eigenvalue(lam, i):
    '''y_i(lam) = q^{lam_i} t^{#{j<i: lam_j = lam_i} - #{j>i: lam_j = lam_i}}'''
    lam = Composition(lam)
    _check_operator_index(i, lam.n)
    part = lam[i - 1]
    before = sum(1 for j in range(i - 1) if lam[j] == part)
    after = sum(1 for j in range(i, lam.n) if lam[j] == part)
    return CherednikEigenvalue(i, part, before - after)


def is_symmetric(f, i=None):
    '''Invariance under s_i, or under every s_i when i is None.'''
    indices = [i] if i is not None else range(1, f.n)
    return all(f.swap_vars(k) == f for k in indices)


class QKZFamily(object):
    '''Polynomials indexed by the rearrangements of a partition.'''

    def __init__(self, lam, members):
        self.lam = as_partition(lam)
        self.members = {Composition(mu): f for mu, f in members.items()}
        if set(self.members) != set(self.lam.rearrangements()):
            raise ValueError('family must have one member per rearrangement of {}'.format(tuple(self.lam)))
        for mu, f in self.members.items():
            if f.n != self.lam.n:
                raise ValueError('member {} has {} variables'.format(tuple(mu), f.n))
            if not f.is_homogeneous() or (not f.is_zero() and f.degree() != self.lam.size):
                raise ValueError('member {} is not homogeneous of degree {}'.format(tuple(mu), self.lam.size))

    @classmethod
    def from_mlq(cls, lam):
        lam = as_partition(lam)
        return cls(lam, {mu: F(mu) for mu in lam.rearrangements()})

    def __getitem__(self, mu):
        return self.members[Composition(mu)]

    def __iter__(self):
        return iter(sorted(self.members))


def check_qkz(lam, family=None, name='F'):
    '''Check the exchange relations, the cyclic relation and the two symmetry
    identities for every rearrangement of lam and every i.

    Failures are reported in the returned frame, never raised.'''
    lam = as_partition(lam)
    family = family or QKZFamily.from_mlq(lam)
    n = lam.n
    rows = []
    for mu in family:
        f = family[mu]
        label = utilities.format_composition(mu)
        for i in range(1, n):
            x_i, x_next = XPolynomial.variable(n, i), XPolynomial.variable(n, i + 1)
            swapped = f.swap_vars(i)
            if mu[i - 1] > mu[i]:
                other = family[mu.swap(i)]
                rows.append(('hecke_descent', 'T_i {0}_mu = {0}_(s_i mu)'.format(name), label, i,
                             hecke_T(i, f) == other))
                lhs = (x_next * f).scale(ONE_MINUS_T) + _hecke_factor(n, i) * swapped
                rows.append(('exchange_descent',
                             '(1-t) x_(i+1) {0}_mu + (t x_i - x_(i+1)) s_i {0}_mu = (x_i - x_(i+1)) {0}_(s_i mu)'.format(name),
                             label, i, lhs == (x_i - x_next) * other))
                weighted = (x_next * f).scale(T) + x_i * other
                rows.append(('symmetric_weighted', '(1 - s_i)(t x_(i+1) {0}_mu + x_i {0}_(s_i mu)) = 0'.format(name),
                             label, i, is_symmetric(weighted, i)))
            elif mu[i - 1] == mu[i]:
                rows.append(('hecke_equal', 'T_i {0}_mu = t {0}_mu'.format(name), label, i,
                             hecke_T(i, f) == f.scale(T)))
                rows.append(('exchange_equal', 's_i {0}_mu = {0}_mu'.format(name), label, i, swapped == f))
            rows.append(('symmetric_sum', '(1 - s_i)({0}_mu + {0}_(s_i mu)) = 0'.format(name), label, i,
                         is_symmetric(f + family[mu.swap(i)], i)))
        shifted = shift_omega(family[mu.rotate()])
        rows.append(('cyclic_shift', 'q^(mu_n) {0}_mu = omega {0}_(mu_n, mu_1, .., mu_(n-1))'.format(name),
                     label, 0, f.scale(QTRational.monomial(mu[-1], 0)) == shifted))
    report = utilities.report_frame(rows, REPORT_COLUMNS, REFERENCES)
    logging.info('qKZ check of {} for {}: {} of {} identities hold'.format(
        name, tuple(lam), int(report['passed'].sum()), len(report)))
    return report


@functools.lru_cache(maxsize=None)
def _two_line_F(mu, lam):
    total = ZERO
    for _, events in two_line_queues(mu, lam):
        weight = ONE
        for event in events:
            if not event.trivial:
                weight = weight * event.weight()
        total = total + weight
    return XPolynomial.monomial(mu.x_exponents(), total)


def two_line_F(mu, lam):
    '''Generating function of the generalized two-line queues with bottom row mu and top row lam.'''
    mu, lam = Composition(mu), Composition(lam)
    if mu.n != lam.n:
        raise ValueError('mu and lam must have the same length')
    return _two_line_F(mu, lam)


def recursion_expansion(mu):
    '''sum over top rows lam of F^lam_mu * F_{lam^-}'''
    mu = Composition(mu)
    return XPolynomial.sum(mu.n, (two_line_F(mu, lam) * F(lam.lowered()) for lam in top_labelings(mu)))


def check_recursion(mu_type):
    '''F_mu against its two-line expansion for every rearrangement of mu_type.'''
    lam = Composition(mu_type).partition
    rows = [('two_line_recursion', 'F_mu = sum_lam F^lam_mu F_(lam^-)', utilities.format_composition(mu), 0,
             F(mu) == recursion_expansion(mu)) for mu in lam.rearrangements()]
    return utilities.report_frame(rows, REPORT_COLUMNS, REFERENCES)


def _all_equal(polys):
    return all(p == polys[0] for p in polys[1:])


def _all_zero(polys):
    return all(p.is_zero() for p in polys)


def check_two_line_lemmas(mu_type, lam_type=None):
    '''Case identities between two-line generating functions under s_i and the cyclic shift.

    lam_type defaults to the parts of mu_type that are at least 2, padded with zeros.'''
    mu_part = Composition(mu_type).partition
    if lam_type is None:
        lam_type = top_labelings(mu_part)[0]
    lam_part = Composition(lam_type).partition
    n = mu_part.n
    rows = []
    for mu in mu_part.rearrangements():
        for lam in lam_part.rearrangements():
            G = two_line_F(mu, lam)
            case = '{} | {}'.format(utilities.format_composition(mu), utilities.format_composition(lam))
            for i in range(1, n):
                rows.extend(_two_line_cases(mu, lam, i, case))
            rotated = two_line_F(mu.rotate(), lam.rotate()).rotate_vars(twist=False)
            lhs = rotated.scale(QTRational.monomial(max(lam[-1] - 1, 0), 0))
            rhs = G.scale(QTRational.monomial(max(mu[-1] - 1, 0), 0))
            rows.append(('two_line_cyclic', 'q^max(lam_n-1,0) F^(w lam)_(w mu)(x_n,x_1,..) = q^max(mu_n-1,0) F^lam_mu',
                         case, 0, lhs == rhs))
    return utilities.report_frame(rows, REPORT_COLUMNS, REFERENCES)


def _two_line_cases(mu, lam, i, case):
    a, b = mu[i - 1], mu[i]
    la, lb = lam[i - 1], lam[i]
    smu, slam = mu.swap(i), lam.swap(i)
    G = two_line_F(mu, lam)
    G_smu = two_line_F(smu, lam)
    G_slam = two_line_F(mu, slam)
    G_both = two_line_F(smu, slam)
    n = mu.n
    rows = []
    if a == b:
        rows.append(('two_line_equal', 'F^lam_mu = F^(s_i lam)_mu', case, i, G == G_slam))
        return rows
    if la < lb or a < b:
        return rows
    if b > 0 and la > lb:
        if b > la:
            rows.append(('two_line_descent_above', 't F^lam_mu = F^lam_(s_i mu) = t F^(s_i lam)_mu = F^(s_i lam)_(s_i mu)',
                         case, i, _all_equal([G.scale(T), G_smu, G_slam.scale(T), G_both])))
        elif b == la:
            rows.append(('two_line_descent_meet', 'F^lam_mu + F^lam_(s_i mu) = F^(s_i lam)_mu + F^(s_i lam)_(s_i mu)',
                         case, i, G + G_smu == G_slam + G_both))
        else:
            rows.append(('two_line_descent_below', 'F^lam_mu = F^(s_i lam)_(s_i mu), F^lam_(s_i mu) = F^(s_i lam)_mu = 0',
                         case, i, G == G_both and _all_zero([G_smu, G_slam])))
        return rows
    if b == 0:
        x_i, x_next = XPolynomial.variable(n, i), XPolynomial.variable(n, i + 1)
        if la == lb or a > la:
            rows.append(('two_line_zero_free', 'x_(i+1) F^lam_mu = x_i F^lam_(s_i mu) = x_(i+1) F^(s_i lam)_mu = x_i F^(s_i lam)_(s_i mu)',
                         case, i, _all_equal([x_next * G, x_i * G_smu, x_next * G_slam, x_i * G_both])))
        elif a == la:
            ok = ((x_next * G).scale(T) + x_i * G_smu == (x_next * G_slam).scale(T) + x_i * G_both
                  and x_next * G == x_i * G_both
                  and (x_next * G_slam).scale(T) + (x_next * G).scale(ONE_MINUS_T) == x_i * G_smu)
            rows.append(('two_line_zero_meet', 'x_(i+1) F^lam_mu = x_i F^(s_i lam)_(s_i mu) and the t-weighted exchanges',
                         case, i, ok))
        elif a >= lb:
            rows.append(('two_line_zero_between', 'x_i F^lam_(s_i mu) = t x_(i+1) F^(s_i lam)_mu, F^lam_mu = F^(s_i lam)_(s_i mu) = 0',
                         case, i, x_i * G_smu == (x_next * G_slam).scale(T) and _all_zero([G, G_both])))
        else:
            rows.append(('two_line_zero_below', 'all four two-line functions vanish',
                         case, i, _all_zero([G, G_smu, G_slam, G_both])))
        rows.append(('two_line_t_identity', 't x_(i+1) F^lam_mu + x_i F^lam_(s_i mu) = t x_(i+1) F^(s_i lam)_mu + x_i F^(s_i lam)_(s_i mu)',
                     case, i, (x_next * G).scale(T) + x_i * G_smu == (x_next * G_slam).scale(T) + x_i * G_both))
    return rows


def E_nonsymmetric(lam):
    '''F_lam for a partition lam, after checking it is monic in x^lam and an
    eigenfunction of every Cherednik operator.'''
    lam = as_partition(lam)
    f = F(lam)
    if not qt_equals(f.coefficient(tuple(lam)), ONE):
        raise CharacterizationFailed('coefficient of x^{} in F is {}'.format(tuple(lam), f.coefficient(tuple(lam))))
    for i in range(1, lam.n + 1):
        eigen = cherednik_eigenvalue(lam, i)
        if cherednik_Y(i, f) != f.scale(eigen.value()):
            raise CharacterizationFailed('Y_{} does not act on F_{} by q^{} t^{}'.format(
                i, tuple(lam), eigen.q_power, eigen.t_power))
    logging.info('F{} is monic and a Cherednik eigenfunction'.format(tuple(lam)))
    return f


def check_nonsymmetric(lam):
    '''Report form of the checks made by E_nonsymmetric.'''
    lam = as_partition(lam)
    f = F(lam)
    label = utilities.format_composition(lam)
    rows = [('monic', '[x^lam] F_lam = 1', label, 0, qt_equals(f.coefficient(tuple(lam)), ONE))]
    for i in range(1, lam.n + 1):
        eigen = cherednik_eigenvalue(lam, i)
        rows.append(('cherednik_eigenvalue', 'Y_i F_lam = q^{} t^{} F_lam'.format(eigen.q_power, eigen.t_power),
                     label, i, cherednik_Y(i, f) == f.scale(eigen.value())))
    return utilities.report_frame(rows, REPORT_COLUMNS, REFERENCES)


def check_symmetric(lam):
    '''Z_lam is symmetric, monic in x^lam and specializes to the Schur polynomial.'''
    lam = as_partition(lam)
    z = Z(lam)
    label = utilities.format_composition(lam)
    schur = schur_oracle(lam, lam.n)
    rows = [('monic', '[x^lam] Z_lam = 1', label, 0, qt_equals(z.coefficient(tuple(lam)), ONE))]
    rows.extend(('symmetric', 's_i Z_lam = Z_lam', label, i, is_symmetric(z, i)) for i in range(1, lam.n))
    rows.append(('schur_at_zero', 'Z_lam(x; 0, 0) = s_lam(x)', label, 0, z.specialize(0, 0) == schur))
    for c in SPECIALIZATION_POINTS:
        rows.append(('schur_at_q_equals_t', 'Z_lam(x; {0}, {0}) = s_lam(x)'.format(utilities.format_rational(c)),
                     label, 0, z.specialize(c, c) == schur))
    return utilities.report_frame(rows, REPORT_COLUMNS, REFERENCES)


def semistandard_tableaux(lam, n):
    '''Fillings of the Young diagram of lam with 1..n, rows weakly increasing and columns strictly increasing.'''
    shape = [part for part in lam if part > 0]
    boxes = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling = {}
    found = []

    def place(k):
        if k == len(boxes):
            found.append(dict(filling))
            return
        r, c = boxes[k]
        low = 1
        if c > 0:
            low = max(low, filling[(r, c - 1)])
        if r > 0:
            low = max(low, filling[(r - 1, c)] + 1)
        for value in range(low, n + 1):
            filling[(r, c)] = value
            place(k + 1)
        filling.pop((r, c), None)

    place(0)
    return found


def schur_oracle(lam, n):
    '''s_lam(x_1..x_n) as a sum over semistandard tableaux.'''
    terms = {}
    for tableau in semistandard_tableaux(lam, n):
        exps = [0] * n
        for value in tableau.values():
            exps[value - 1] += 1
        exps = tuple(exps)
        terms[exps] = terms.get(exps, 0) + 1
    return XPolynomial(n, {e: Fraction(c) for e, c in terms.items()})
