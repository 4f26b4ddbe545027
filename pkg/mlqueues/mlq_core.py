# -*- coding: utf-8 -*-
''' Multiline queues: ball systems, the pairing procedure that labels balls,
the (q, t) weight of each pairing, and enumeration of all queues of a type.'''

import functools
import itertools
import logging
from typing import NamedTuple
import numpy as np
from sympy.utilities.iterables import multiset_permutations
from mlqueues.exceptions import IndexOutOfRange, InvalidMatching
from mlqueues.qt_ring import ONE, QTPoly, QTRational, XPolynomial


class Composition(tuple):
    '''A vector of nonnegative integers (mu_1, .., mu_n), positions numbered from 1.'''

    def __new__(cls, parts):
        parts = tuple(parts)
        if not parts:
            raise ValueError('composition must have at least one part')
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, (int, np.integer)):
                raise TypeError('composition parts must be integers')
            if part < 0:
                raise ValueError('composition parts must be nonnegative')
        return super(Composition, cls).__new__(cls, (int(p) for p in parts))

    @property
    def n(self):
        return len(self)

    @property
    def L(self):
        return max(self)

    @property
    def size(self):
        return sum(self)

    @property
    def support(self):
        return tuple(i for i, part in enumerate(self, start=1) if part > 0)

    @property
    def partition(self):
        return Composition(sorted(self, reverse=True))

    def is_partition(self):
        return all(self[k] >= self[k + 1] for k in range(len(self) - 1))

    def swap(self, i):
        '''s_i mu: exchange parts i and i+1.'''
        if i < 1 or i > len(self) - 1:
            raise IndexOutOfRange('swap index {} outside 1..{}'.format(i, len(self) - 1))
        parts = list(self)
        parts[i - 1], parts[i] = parts[i], parts[i - 1]
        return Composition(parts)

    def rotate(self):
        '''(mu_n, mu_1, .., mu_{n-1})'''
        return Composition(self[-1:] + self[:-1])

    def lowered(self):
        '''Every positive part decreased by one.'''
        return Composition(max(part - 1, 0) for part in self)

    def rearrangements(self):
        return [Composition(p) for p in multiset_permutations(sorted(self))]

    def x_exponents(self):
        return tuple(1 if part > 0 else 0 for part in self)

    def __repr__(self):
        return 'Composition({})'.format(','.join(str(p) for p in self))


def as_partition(parts):
    '''Composition that must be weakly decreasing.'''
    lam = parts if isinstance(parts, Composition) else Composition(parts)
    if not lam.is_partition():
        raise ValueError('partition parts must be weakly decreasing, got {}'.format(tuple(lam)))
    return lam


class BallSystem(object):
    '''L rows of balls on a ring of n columns.

    Rows are numbered 1..L from the bottom and `rows[r-1]` is the sorted tuple
    of occupied columns of row r. Ball counts weakly increase going down and
    the top row is nonempty; L = 0 is the empty system.'''
    __slots__ = ('L', 'n', 'rows')

    def __init__(self, L, n, rows):
        if not isinstance(L, int) or not isinstance(n, int):
            raise TypeError('L and n must be integers')
        if L < 0 or n < 1:
            raise ValueError('need L >= 0 and n >= 1')
        rows = tuple(tuple(sorted(set(row))) for row in rows)
        if len(rows) != L:
            raise ValueError('expected {} rows, got {}'.format(L, len(rows)))
        for row in rows:
            if any(not isinstance(c, int) or c < 1 or c > n for c in row):
                raise ValueError('ball columns must lie in 1..{}'.format(n))
        if L and not rows[L - 1]:
            raise ValueError('the top row must contain a ball')
        for r in range(1, L):
            if len(rows[r]) > len(rows[r - 1]):
                raise ValueError('row {} has more balls than row {}'.format(r + 1, r))
        self.L, self.n, self.rows = L, n, rows

    def occupied(self, r, c):
        return c in self.rows[r - 1]

    def occupancy(self):
        '''Boolean L x n grid, grid[r-1, c-1] for row r and column c.'''
        grid = np.zeros((self.L, self.n), dtype=bool)
        for r, row in enumerate(self.rows):
            for c in row:
                grid[r, c - 1] = True
        return grid

    def column_counts(self):
        return tuple(int(v) for v in self.occupancy().sum(axis=0))

    def __eq__(self, other):
        return isinstance(other, BallSystem) and (self.L, self.n, self.rows) == (other.L, other.n, other.rows)

    def __hash__(self):
        return hash((self.L, self.n, self.rows))


class PairingEvent(NamedTuple):
    '''One ball of row `row` with label `label` matched from column `from_col` to `to_col` in the row below.'''
    row: int
    label: int
    from_col: int
    to_col: int
    skipped: int
    free: int
    wrapped: bool
    trivial: bool

    @property
    def exponent(self):
        return self.label - self.row + 1

    def weight(self):
        if self.trivial:
            return ONE
        num = QTPoly({(0, self.skipped): 1, (0, self.skipped + 1): -1})
        if self.wrapped:
            num = num.shift(self.exponent, 0)
        return QTRational(num, [(self.exponent, self.free)])

    def to_json(self):
        return dict(self._asdict())


def _strictly_between(start, stop, n, columns):
    span = (stop - start) % n
    return sum(1 for c in columns if 0 < (c - start) % n < span)


def label_and_audit(system, matching):
    '''Label every ball and list the pairing events in reading order.

    `matching` maps (row, column) of each ball in rows 2..L to the column of its
    partner in the row below. For each row boundary, labels are processed from L
    down; within a label, balls with an unmatched ball directly beneath pair
    straight down first, then the rest pair right to left. Returns the dict of
    labels keyed by (row, column) and the list of PairingEvent.'''
    L, n = system.L, system.n
    expected = {(r, c) for r in range(2, L + 1) for c in system.rows[r - 1]}
    if set(matching) != expected:
        raise InvalidMatching('matching must cover exactly the balls of rows 2..{}'.format(L))
    for r in range(2, L + 1):
        targets = [matching[(r, c)] for c in system.rows[r - 1]]
        if len(set(targets)) != len(targets):
            raise InvalidMatching('two balls of row {} share a partner'.format(r))
        missing = set(targets) - set(system.rows[r - 2])
        if missing:
            raise InvalidMatching('row {} has no ball at column(s) {}'.format(r - 1, sorted(missing)))

    labels = {(L, c): L for c in system.rows[L - 1]} if L else {}
    events = []
    for r in range(L, 1, -1):
        upper = system.rows[r - 1]
        lower = system.rows[r - 2]
        trivial_cols = {c for c in upper if matching[(r, c)] == c}
        matched = set()
        for label in range(L, r - 1, -1):
            group = [c for c in upper if labels[(r, c)] == label]
            for c in group:
                if c in lower and c not in matched and matching[(r, c)] != c:
                    raise InvalidMatching('ball at row {} column {} must pair straight down'.format(r, c))
            straight = sorted((c for c in group if c in trivial_cols), reverse=True)
            for c in straight:
                free = sum(1 for b in lower if b not in matched)
                events.append(PairingEvent(r, label, c, c, 0, free, False, True))
                matched.add(c)
            for c in sorted((c for c in group if c not in trivial_cols), reverse=True):
                target = matching[(r, c)]
                free_cols = [b for b in lower if b not in matched]
                skipped = _strictly_between(c, target, n, free_cols)
                events.append(PairingEvent(r, label, c, target, skipped, len(free_cols), target < c, False))
                matched.add(target)
        partner_label = {matching[(r, c)]: labels[(r, c)] for c in upper}
        for c in lower:
            labels[(r - 1, c)] = partner_label.get(c, r - 1)
    return labels, events


class MultilineQueue(object):
    '''A ball system with its matching; labels, events and type are derived on construction.'''

    def __init__(self, system, matching):
        if not isinstance(system, BallSystem):
            raise TypeError('system must be a BallSystem')
        self.system = system
        self.matching = dict(matching)
        self.labels, self.events = label_and_audit(system, self.matching)
        row_one = {c: self.labels[(1, c)] for c in system.rows[0]} if system.L else {}
        self.type_ = Composition(row_one.get(c, 0) for c in range(1, system.n + 1))

    @property
    def L(self):
        return self.system.L

    @property
    def n(self):
        return self.system.n

    def matching_vector(self):
        return tuple(sorted((r, c, p) for (r, c), p in self.matching.items()))

    def sort_key(self):
        return (self.system.rows, self.matching_vector())

    def chain(self, c):
        '''Columns of the linked balls from row 1 column c upward.'''
        below = {(r - 1, p): c2 for (r, c2), p in self.matching.items()}
        cols, r = [c], 1
        while (r, cols[-1]) in below:
            cols.append(below[(r, cols[-1])])
            r += 1
        return cols

    def to_json(self):
        return {
            'L': self.L,
            'n': self.n,
            'balls': [[r, c] for r in range(1, self.L + 1) for c in self.system.rows[r - 1]],
            'matching': [list(item) for item in self.matching_vector()],
            'labels': [[r, c, self.labels[(r, c)]] for r in range(1, self.L + 1) for c in self.system.rows[r - 1]],
            'events': [e.to_json() for e in self.events],
        }

    def render(self):
        '''Fixed-width cylinder picture, top row first; each ball shows its label and partner.'''
        grid = self.system.occupancy()
        lines = []
        for r in range(self.L, 0, -1):
            cells = []
            for c in range(1, self.n + 1):
                if not grid[r - 1, c - 1]:
                    cells.append(' .    ')
                elif r == 1:
                    cells.append(' {:<2}   '.format(self.labels[(r, c)]))
                else:
                    cells.append(' {:<2}>{:<2}'.format(self.labels[(r, c)], self.matching[(r, c)]))
            lines.append('row {:<2}|{}|'.format(r, ''.join(cells)))
        return '\n'.join(lines)

    def __eq__(self, other):
        return isinstance(other, MultilineQueue) and self.sort_key() == other.sort_key() and self.n == other.n

    def __hash__(self):
        return hash((self.n, self.sort_key()))

    def __repr__(self):
        return 'MultilineQueue(type={}, rows={})'.format(tuple(self.type_), self.system.rows)


def wt_x(Q):
    '''Exponent vector of x: number of balls in each column.'''
    return Q.system.column_counts()


def wt_qt(Q):
    weight = ONE
    for event in Q.events:
        if not event.trivial:
            weight = weight * event.weight()
    return weight


def q_degree(Q):
    '''Power of q collected from wrapping strands.'''
    return sum(e.exponent for e in Q.events if e.wrapped)


def queue_weight(Q):
    '''wt_x(Q) * wt_qt(Q) as a polynomial in x.'''
    return XPolynomial.monomial(wt_x(Q), wt_qt(Q))


def cyclic_shift(Q):
    '''Move column n to column 1, keeping every strand.'''
    n = Q.n

    def move(c):
        return c % n + 1

    system = BallSystem(Q.L, n, [[move(c) for c in row] for row in Q.system.rows])
    matching = {(r, move(c)): move(p) for (r, c), p in Q.matching.items()}
    return MultilineQueue(system, matching)


def two_line_matchings(top, bottom):
    '''Partner maps {top column: bottom column} of the generalized two-line queues
    with labelled top row `top` and labelled bottom row `bottom`.

    Top labels are 0 (no ball) or at least 2; a bottom ball with label 1 stays
    unmatched. Labels are processed from the largest down, straight-down
    pairings first.'''
    n = len(top)
    if any(part == 1 for part in top):
        return []
    labels = sorted({part for part in top if part > 0}, reverse=True)
    found = []

    def place(k, matched, pairing):
        if k == len(labels):
            if all(c in matched for c in range(1, n + 1) if bottom[c - 1] >= 2):
                found.append(dict(pairing))
            return
        label = labels[k]
        group = [c for c in range(n, 0, -1) if top[c - 1] == label]
        forced = [c for c in group if bottom[c - 1] > 0 and c not in matched]
        if any(bottom[c - 1] != label for c in forced):
            return
        rest = [c for c in group if c not in forced]
        targets = [c for c in range(1, n + 1)
                   if bottom[c - 1] == label and c not in matched and c not in forced]
        if len(targets) != len(rest):
            return
        base = dict(pairing)
        base.update({c: c for c in forced})
        for choice in itertools.permutations(targets):
            step = dict(base)
            step.update(zip(rest, choice))
            place(k + 1, matched | set(forced) | set(choice), step)

    place(0, frozenset(), {})
    return found


def top_labelings(mu):
    '''Candidate labelled second rows: the parts of mu that are at least 2, placed anywhere.'''
    mu = Composition(mu)
    tall = [part for part in mu if part >= 2]
    return [Composition(p) for p in multiset_permutations(sorted(tall + [0] * (mu.n - len(tall))))]


@functools.lru_cache(maxsize=None)
def _queue_layouts(mu):
    '''Sorted layouts (rows, matching vector) of all queues of type mu.'''
    L, n = max(mu), len(mu)
    if L == 0:
        return ((), ()),
    bottom = tuple(c for c in range(1, n + 1) if mu[c - 1] > 0)
    if L == 1:
        return ((bottom,), ()),
    layouts = []
    for top in top_labelings(mu):
        pairings = two_line_matchings(top, mu)
        if not pairings:
            continue
        upper = _queue_layouts(top.lowered())
        for pairing in pairings:
            boundary = tuple(sorted((2, c, p) for c, p in pairing.items()))
            for rows, match in upper:
                lifted = tuple((r + 1, c, p) for r, c, p in match)
                layouts.append(((bottom,) + rows, tuple(sorted(boundary + lifted))))
    return tuple(sorted(layouts))


def build_queue(n, rows, matching_vector):
    system = BallSystem(len(rows), n, rows)
    return MultilineQueue(system, {(r, c): p for r, c, p in matching_vector})


@functools.lru_cache(maxsize=None)
def _enumerate(mu):
    queues = []
    for rows, match in _queue_layouts(mu):
        Q = build_queue(len(mu), rows, match)
        if Q.type_ != mu:
            raise InvalidMatching('enumerated queue has type {} instead of {}'.format(tuple(Q.type_), tuple(mu)))
        queues.append(Q)
    logging.info('enumerated {} multiline queues of type {}'.format(len(queues), tuple(mu)))
    return tuple(queues)


def enumerate_mlq(mu):
    '''Every multiline queue of type mu, in (occupancy, matching) order.'''
    return list(_enumerate(Composition(mu)))


def count_mlq(mu):
    return len(_queue_layouts(Composition(mu)))


def two_line_queues(mu, lam):
    '''Generalized two-line queues with bottom row mu and top row lam, as
    (pairing, events) where events are the audited pairing events.'''
    mu, lam = Composition(mu), Composition(lam)
    if mu.n != lam.n:
        raise ValueError('top and bottom rows must have the same length')
    out = []
    for pairing in two_line_matchings(lam, mu):
        out.append((pairing, _two_line_events(mu, lam, pairing)))
    return out


def _two_line_events(mu, lam, pairing):
    n = mu.n
    lower = [c for c in range(1, n + 1) if mu[c - 1] > 0]
    trivial_cols = {c for c, p in pairing.items() if c == p}
    matched = set()
    events = []
    for label in sorted({part for part in lam if part > 0}, reverse=True):
        group = [c for c in range(n, 0, -1) if lam[c - 1] == label]
        for c in [c for c in group if c in trivial_cols]:
            events.append(PairingEvent(2, label, c, c, 0, 0, False, True))
            matched.add(c)
        for c in [c for c in group if c not in trivial_cols]:
            target = pairing[c]
            free_cols = [b for b in lower if b not in matched]
            skipped = _strictly_between(c, target, n, free_cols)
            events.append(PairingEvent(2, label, c, target, skipped, len(free_cols), target < c, False))
            matched.add(target)
    return events
