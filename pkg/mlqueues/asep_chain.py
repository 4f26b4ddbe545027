# -*- coding: utf-8 -*-
''' The multispecies ASEP on a ring: exact transition matrix, exact stationary
distribution, a symbolic-in-t solve for small chains, the comparison with
F_mu(1, .., 1; 1, t) and a Monte-Carlo simulation.'''

import logging
from fractions import Fraction
import numpy as np
import pandas as pd
import sympy
import extensions.utilities as utilities
from mlqueues.exceptions import NotIrreducible
from mlqueues.macdonald_ops import F, REFERENCES, REPORT_COLUMNS
from mlqueues.mlq_core import as_partition

config_mlq = utilities.package_config(__file__, 'config_mlq.yml')
# defining constant
SYMBOLIC_MAX_STATES = config_mlq['constant']['symbolic_max_states']
SEED = config_mlq['constant']['seed']


class StateSpace(object):
    '''Distinct rearrangements of a partition in lexicographic order.'''

    def __init__(self, lam):
        self.lam = as_partition(lam)
        self.states = self.lam.rearrangements()
        self.index = {mu: k for k, mu in enumerate(self.states)}

    def __len__(self):
        return len(self.states)

    def labels(self):
        return [utilities.format_composition(mu) for mu in self.states]

    def neighbours(self, mu):
        '''(position k, swapped state, hops left) for every cyclic adjacent pair with distinct values.'''
        n = len(mu)
        out = []
        for k in range(n):
            right = (k + 1) % n
            if mu[k] == mu[right]:
                continue
            parts = list(mu)
            parts[k], parts[right] = parts[right], parts[k]
            out.append((k + 1, type(mu)(parts), mu[k] < mu[right]))
        return out


class TransitionMatrix(object):
    '''Row-stochastic matrix of Fractions, rows indexed by the from-state.'''

    def __init__(self, space, t, matrix):
        self.space, self.t, self.matrix = space, t, matrix

    def is_stochastic(self):
        return all(sum(row) == 1 for row in self.matrix) and all(v >= 0 for v in self.matrix.flat)

    def to_frame(self):
        labels = self.space.labels()
        return pd.DataFrame(self.matrix, index=labels, columns=labels)


def build_chain(lam, t):
    '''P[mu, nu] = 1/n when nu moves a larger value one step left, t/n when it moves one right.'''
    space = StateSpace(lam)
    t = Fraction(t)
    if t < 0 or t > 1:
        logging.warning('t = {} lies outside [0, 1]; the matrix is not stochastic'.format(t))
    n = space.lam.n
    size = len(space)
    matrix = np.empty((size, size), dtype=object)
    matrix.fill(Fraction(0))
    for a, mu in enumerate(space.states):
        for _, nu, leftward in space.neighbours(mu):
            matrix[a, space.index[nu]] += Fraction(1, n) if leftward else t / n
        matrix[a, a] = 1 - sum(matrix[a, b] for b in range(size) if b != a)
    return TransitionMatrix(space, t, matrix)


def stationary(lam, t):
    '''Exact stationary distribution as a Series of Fractions indexed by state.

    The null space of P^T - I is taken with sympy over the rationals; an
    irreducible chain has exactly one basis vector.'''
    chain = build_chain(lam, t)
    size = len(chain.space)
    P = sympy.Matrix(size, size, lambda a, b: sympy.Rational(chain.matrix[a, b].numerator,
                                                             chain.matrix[a, b].denominator))
    basis = (P.T - sympy.eye(size)).nullspace()
    if len(basis) != 1:
        raise NotIrreducible('the chain for {} at t = {} has {} stationary directions'.format(
            tuple(chain.space.lam), chain.t, len(basis)))
    vector = [Fraction(int(v.p), int(v.q)) for v in basis[0]]
    total = sum(vector)
    pi = pd.Series([v / total for v in vector], index=chain.space.labels(), name='pi', dtype=object)
    logging.info('solved the {}-state chain for {} at t = {}'.format(size, tuple(chain.space.lam), chain.t))
    return pi


def symbolic_stationary(lam):
    '''Stationary distribution as sympy rational functions of t, for at most SYMBOLIC_MAX_STATES states.'''
    space = StateSpace(lam)
    size = len(space)
    if size > SYMBOLIC_MAX_STATES:
        raise ValueError('symbolic solve is limited to {} states, {} has {}'.format(
            SYMBOLIC_MAX_STATES, tuple(space.lam), size))
    t = sympy.Symbol('t')
    n = space.lam.n
    P = sympy.zeros(size, size)
    for a, mu in enumerate(space.states):
        for _, nu, leftward in space.neighbours(mu):
            P[a, space.index[nu]] += sympy.Rational(1, n) if leftward else t / n
        P[a, a] = 1 - sum(P[a, b] for b in range(size) if b != a)
    basis = (P.T - sympy.eye(size)).nullspace()
    if len(basis) != 1:
        raise NotIrreducible('the symbolic chain for {} has {} stationary directions'.format(tuple(space.lam), len(basis)))
    vector = basis[0]
    total = sum(vector)
    return pd.Series([sympy.cancel(v / total) for v in vector], index=space.labels(), name='pi', dtype=object)


def mlq_weights(lam, t):
    '''F_mu(1, .., 1; 1, t) for every state mu.'''
    space = StateSpace(lam)
    ones = [1] * space.lam.n
    return pd.Series([F(mu).evaluate(ones, 1, t) for mu in space.states], index=space.labels(), name='F', dtype=object)


def martin_check(lam, t):
    '''Compare the stationary distribution with the normalized F_mu(1, .., 1; 1, t).

    The largest absolute difference is kept in report.attrs['max_discrepancy'].'''
    t = Fraction(t)
    pi = stationary(lam, t)
    weights = mlq_weights(lam, t)
    expected = weights / sum(weights)
    rows = [('stationary_ratio', 'pi_mu = F_mu(1..1; 1, t) / sum_nu F_nu(1..1; 1, t)', label, 0,
             pi[label] == expected[label]) for label in pi.index]
    report = utilities.report_frame(rows, REPORT_COLUMNS, REFERENCES)
    report.attrs['max_discrepancy'] = max(abs(pi[label] - expected[label]) for label in pi.index)
    logging.info('stationary check for {} at t = {}: max discrepancy {}'.format(
        tuple(as_partition(lam)), t, report.attrs['max_discrepancy']))
    return report


def martin_check_symbolic(lam):
    '''The same comparison as martin_check with t kept symbolic.'''
    pi = symbolic_stationary(lam)
    lam = as_partition(lam)
    space = StateSpace(lam)
    q = sympy.Symbol('q')
    values = {}
    for mu, label in zip(space.states, space.labels()):
        f = F(mu).to_sympy()
        values[label] = f.subs({sympy.Symbol('x{}'.format(k)): 1 for k in range(1, lam.n + 1)}).subs(q, 1)
    total = sum(values.values())
    rows = [('stationary_ratio_symbolic', 'pi_mu(t) = F_mu(1..1; 1, t) / sum_nu F_nu(1..1; 1, t)', label, 0,
             sympy.cancel(pi[label] - values[label] / total) == 0) for label in pi.index]
    return utilities.report_frame(rows, REPORT_COLUMNS, REFERENCES)


def simulate(lam, t, steps, seed=SEED):
    '''Fraction of time spent in each state over `steps` moves started from lam.

    Each move picks a uniform cyclic position k; the pair (k, k+1) swaps when
    the right value is larger, and with probability t when it is smaller.'''
    if steps < 1:
        raise ValueError('steps must be at least 1')
    space = StateSpace(lam)
    rng = np.random.default_rng(seed)
    t = float(t)
    n = space.lam.n
    state = list(space.lam)
    counts = np.zeros(len(space), dtype=np.int64)
    for _ in range(steps):
        k = int(rng.integers(n))
        right = (k + 1) % n
        if state[k] < state[right] or (state[k] > state[right] and rng.random() < t):
            state[k], state[right] = state[right], state[k]
        counts[space.index[tuple(state)]] += 1
    return pd.Series(counts / steps, index=space.labels(), name='frequency')


def total_variation(p, r):
    '''Half the L1 distance between two distributions given as Series over state labels.'''
    index = p.index.union(r.index)
    left = p.reindex(index, fill_value=0).astype(float)
    right = r.reindex(index, fill_value=0).astype(float)
    return float((left - right).abs().sum() / 2)
