# -*- coding: utf-8 -*-
''' Matrix product formula for F_mu: traces of tensor products of the
semi-infinite operators I, A, delta, epsilon twisted by D(q).

A position with part mu_i > 0 carries species J = L + 1 - mu_i and a hole
carries species 0. Every factor of level l and slot p (p = 1..l-1) is twisted
by D(q^(l-p)). The exact trace sums each factor as a geometric series; the
truncated traces at d, d+1 and d+2 certify it modulo q^(d-n), and for small
tensor spaces the factored trace is checked against the dense one.'''

import functools
import logging
from typing import NamedTuple
import numpy as np
import pandas as pd
import extensions.utilities as utilities
from mlqueues.exceptions import TruncationUnstable
from mlqueues.macdonald_ops import F, QKZFamily, REFERENCES, REPORT_COLUMNS, check_qkz
from mlqueues.mlq_core import Composition, as_partition
from mlqueues.qt_ring import QTPoly, QTRational, XPolynomial

config_mlq = utilities.package_config(__file__, 'config_mlq.yml')
# defining constant
TRUNC_MARGIN = config_mlq['constant']['trunc_margin']
DENSE_MAX_DIMENSION = config_mlq['constant']['dense_max_dimension']

SHIFT = {'I': 0, 'A': 0, 'd': 1, 'e': -1}


class TensorWord(NamedTuple):
    '''a^(L)_JM as a word in I, A, d (delta) and e (epsilon), one letter per slot of level L.'''
    J: int
    M: int
    L: int
    letters: tuple


def species(part, L):
    return L + 1 - part if part > 0 else 0


def tensor_word(J, M, L):
    '''The word of a^(L)_JM, or None where a^(L)_JM = 0.'''
    if not 0 <= J <= L or not 0 <= M < L:
        raise ValueError('need 0 <= J <= L and 0 <= M < L, got J={}, M={}, L={}'.format(J, M, L))
    if J == L:
        letters = ('A',) * (L - 1) if M == 0 else None
    elif J == 0:
        letters = ('I',) * (L - 1) if M == 0 else ('I',) * (M - 1) + ('e',) + ('I',) * (L - M - 1)
    elif M == 0:
        letters = ('A',) * (J - 1) + ('d',) + ('I',) * (L - J - 1)
    elif M < J:
        letters = None
    elif M == J:
        letters = ('A',) * (J - 1) + ('I',) * (L - J)
    else:
        letters = ('A',) * (J - 1) + ('d',) + ('I',) * (M - J - 1) + ('e',) + ('I',) * (L - M - 1)
    return None if letters is None else TensorWord(J, M, L, letters)


def twist_exponents(L):
    '''q-exponent of D for every slot of S^(L), level L slots first.'''
    return tuple(level - p for level in range(L, 1, -1) for p in range(1, level))


@functools.lru_cache(maxsize=None)
def expand_X(J, L):
    '''X^(L)_J(x) as a tuple of (power of x, letters over all slots).'''
    if L == 1:
        if J not in (0, 1):
            raise ValueError('level 1 has species 0 and 1 only')
        return ((J, ()),)
    terms = []
    for M in range(L):
        word = tensor_word(J, M, L)
        if word is None:
            continue
        for power, letters in expand_X(M, L - 1):
            terms.append((power + (1 if J > 0 else 0), word.letters + letters))
    return tuple(terms)


def _letter_matrix(letter, d):
    out = np.full((d, d), QTPoly(), dtype=object)
    for k in range(d):
        if letter == 'I':
            out[k, k] = QTPoly.constant(1)
        elif letter == 'A':
            out[k, k] = QTPoly.monomial(0, k)
        elif letter == 'e' and k + 1 < d:
            out[k, k + 1] = QTPoly.constant(1)
        elif letter == 'd' and k >= 1:
            out[k, k - 1] = QTPoly.one_minus(0, k)
    return out


def twist_matrix(m, d, q=None):
    '''D(q^m) truncated to d x d; q=None keeps q formal.'''
    out = np.full((d, d), QTPoly(), dtype=object)
    for k in range(d):
        out[k, k] = QTPoly.monomial(m * k, 0) if q is None else QTPoly.constant(utilities.parse_rational(q) ** (m * k))
    return out


def _kron_all(mats):
    return functools.reduce(np.kron, mats) if mats else np.full((1, 1), QTPoly.constant(1), dtype=object)


def build_X(J, L, d):
    '''X^(L)_J truncated to dimension d per slot, as {power of x: matrix}; used by dense_trace.'''
    operator = {}
    for power, letters in expand_X(J, L):
        mat = _kron_all([_letter_matrix(letter, d) for letter in letters])
        operator[power] = operator[power] + mat if power in operator else mat
    return operator


def build_S(L, d, q=None):
    '''S^(L) truncated to dimension d per slot.'''
    return _kron_all([twist_matrix(m, d, q) for m in twist_exponents(L)])


@functools.lru_cache(maxsize=None)
def _exact_factor_trace(letters, m):
    '''Tr(M_1 .. M_k D(q^m)) for single-slot letters, summed over all basis states.'''
    offsets, o = [], 0
    for letter in reversed(letters):
        offsets.append(o)
        o += SHIFT[letter]
    if o:
        return QTRational()
    base = max([0] + [1 - off for letter, off in zip(reversed(letters), offsets) if letter == 'e'])
    # coefficients of T = t^j over j >= 0, the basis index being base + j
    series = {0: QTPoly.constant(1)}
    for letter, off in zip(reversed(letters), offsets):
        index = base + off
        if letter == 'A':
            series = {k + 1: c.shift(0, index) for k, c in series.items()}
        elif letter == 'd':
            step = {}
            for k, c in series.items():
                step[k] = step.get(k, QTPoly()) + c
                step[k + 1] = step.get(k + 1, QTPoly()) - c.shift(0, index + 1)
            series = step
    total = QTRational()
    for k, c in series.items():
        if not c.is_zero():
            total = total + QTRational(c.shift(m * base, 0), [(m, k)])
    return total


def _truncated_factor_trace(letters, m, d):
    mats = [_letter_matrix(letter, d) for letter in letters] + [twist_matrix(m, d)]
    return np.trace(functools.reduce(np.dot, mats))


def _choices(mu, L):
    '''(x exponents, letters per slot) for every product of expansion terms with balanced slots.'''
    terms = [expand_X(species(part, L), L) for part in mu]
    slots = len(twist_exponents(L))
    n = len(mu)
    found = []

    def place(i, exps, columns, offsets):
        if i == n:
            if not any(offsets):
                found.append((tuple(exps), tuple(tuple(col) for col in columns)))
            return
        remaining = n - i
        for power, letters in terms[i]:
            moved = [off + SHIFT[letter] for off, letter in zip(offsets, letters)]
            if any(abs(off) > remaining - 1 for off in moved):
                continue
            place(i + 1, exps + [power], [col + [letter] for col, letter in zip(columns, letters)], moved)

    place(0, [], [[] for _ in range(slots)], [0] * slots)
    return found


def _max_part(mu):
    return max(max(mu), 1)


def Y(mu, L=None):
    '''Exact twisted trace Tr(X_mu_1(x_1) .. X_mu_n(x_n) S) with L = max(mu) by default.'''
    mu = Composition(mu)
    L = L or _max_part(mu)
    exponents = twist_exponents(L)
    polys = []
    for exps, columns in _choices(mu, L):
        value = QTRational(1)
        for letters, m in zip(columns, exponents):
            value = value * _exact_factor_trace(letters, m)
            if value.is_zero():
                break
        polys.append(XPolynomial.monomial(exps, value))
    return XPolynomial.sum(mu.n, polys)


def Y_truncated(mu, d, L=None):
    '''The same trace with every slot truncated to dimension d; coefficients are polynomials.'''
    mu = Composition(mu)
    L = L or _max_part(mu)
    exponents = twist_exponents(L)
    terms = {}
    for exps, columns in _choices(mu, L):
        value = QTPoly.constant(1)
        for letters, m in zip(columns, exponents):
            value = value * _truncated_factor_trace(letters, m, d)
        if not value.is_zero():
            terms[exps] = terms.get(exps, QTPoly()) + value
    return {exps: c for exps, c in terms.items() if not c.is_zero()}


def dense_trace(mu, d, L=None):
    '''Tr(X_mu_1(x_1) .. X_mu_n(x_n) S) multiplied out on the full tensor space, d per slot.

    Agrees with Y_truncated, which factors the trace slot by slot.'''
    mu = Composition(mu)
    L = L or _max_part(mu)
    slots = len(twist_exponents(L))
    products = {(): _kron_all([_letter_matrix('I', d)] * slots)}
    for part in mu:
        step = {}
        for exps, mat in products.items():
            for power, factor in build_X(species(part, L), L, d).items():
                key = exps + (power,)
                step[key] = step[key] + mat.dot(factor) if key in step else mat.dot(factor)
        products = step
    S = build_S(L, d)
    terms = {exps: np.trace(mat.dot(S)) for exps, mat in products.items()}
    return {exps: c for exps, c in terms.items() if not c.is_zero()}


def _q_expansion(poly, order):
    series = {exps: c.series_in_q(order) for exps, c in poly.terms.items()}
    return {exps: s for exps, s in series.items() if not s.is_zero()}


def certify(mu, d=None, L=None):
    '''Y(mu) after checking the truncations at d, d+1 and d+2 against it modulo q^(d-n).'''
    mu = Composition(mu)
    d = d or mu.n + TRUNC_MARGIN
    order = d - mu.n
    if order < 1:
        raise ValueError('truncation {} must exceed the number of positions {}'.format(d, mu.n))
    exact = Y(mu, L)
    expected = _q_expansion(exact, order)
    for size in (d, d + 1, d + 2):
        truncated = {exps: c.truncate_q(order) for exps, c in Y_truncated(mu, size, L).items()}
        truncated = {exps: c for exps, c in truncated.items() if not c.is_zero()}
        if truncated != expected:
            raise TruncationUnstable('trace of {} at dimension {} disagrees below q^{}'.format(tuple(mu), size, order))
    dimension = d ** len(twist_exponents(L or _max_part(mu)))
    if dimension <= DENSE_MAX_DIMENSION and dense_trace(mu, d, L) != Y_truncated(mu, d, L):
        raise TruncationUnstable('factored and dense traces of {} differ at dimension {}'.format(tuple(mu), d))
    logging.info('trace of {} certified at dimensions {}..{}'.format(tuple(mu), d, d + 2))
    return exact


def ansatz_family(lam, d=None):
    lam = as_partition(lam)
    L = _max_part(lam)
    return QKZFamily(lam, {mu: certify(mu, d, L) for mu in lam.rearrangements()})


def proportionality_constant(lam, family=None):
    '''Y_lam / F_lam read off at x^lam, where F_lam is monic.'''
    lam = as_partition(lam)
    family = family or ansatz_family(lam)
    return family[lam].coefficient(tuple(lam))


def check_ansatz(lam, d=None):
    '''Y_mu = c F_mu with one c for all rearrangements, plus the exchange relations for Y.'''
    lam = as_partition(lam)
    family = ansatz_family(lam, d)
    c = proportionality_constant(lam, family)
    rows = [('ansatz_proportional', 'Y_mu = ({}) F_mu'.format(c), utilities.format_composition(mu), 0,
             family[mu] == F(mu).scale(c)) for mu in family]
    report = utilities.report_frame(rows, REPORT_COLUMNS, REFERENCES)
    exchange = check_qkz(lam, family, name='Y')
    return pd.concat([report, exchange], ignore_index=True)
