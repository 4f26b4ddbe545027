# -*- coding: utf-8 -*-
''' Queue tableaux: nonattacking fillings of an augmented partition diagram,
their weight statistics and the bijection with multiline queues.

Box (i, j) is column i (from the left) and row j (from the bottom); row 0 is
the basement.'''

import logging
from mlqueues.mlq_core import Composition, enumerate_mlq, wt_qt
from mlqueues.qt_ring import QTPoly, QTRational, XPolynomial


def basement_for(mu):
    '''Basement entries left to right: positions of the parts of mu sorted
    decreasingly, equal parts by increasing position.'''
    mu = Composition(mu)
    return tuple(sorted(range(1, mu.n + 1), key=lambda pos: (-mu[pos - 1], pos)))


class AugmentedDiagram(object):
    '''Diagram of a partition with a basement row below it.'''

    def __init__(self, lam, basement):
        lam = Composition(lam)
        if not lam.is_partition():
            raise ValueError('column heights must be weakly decreasing')
        basement = tuple(basement)
        if sorted(basement) != list(range(1, lam.n + 1)):
            raise ValueError('basement must be a permutation of 1..{}'.format(lam.n))
        for i in range(1, lam.n):
            if lam[i - 1] == lam[i] and basement[i - 1] > basement[i]:
                raise ValueError('basement must increase across columns of equal height')
        self.lam, self.basement = lam, basement

    @classmethod
    def for_composition(cls, mu):
        mu = Composition(mu)
        return cls(mu.partition, basement_for(mu))

    @property
    def n(self):
        return self.lam.n

    def height(self, i):
        return self.lam[i - 1]

    def contains(self, box):
        i, j = box
        return 1 <= i <= self.n and 0 <= j <= self.lam[i - 1]

    def boxes(self):
        '''Boxes above the basement in reading order: row 1 upward, left to right.'''
        return [(i, j) for j in range(1, self.lam.L + 1) for i in range(1, self.n + 1) if self.lam[i - 1] >= j]

    def attacking(self, x, y):
        '''Whether y attacks x or x attacks y.'''
        return _attacks(self.lam, x, y) or _attacks(self.lam, y, x)


def _attacks(lam, x, y):
    (i, j), (k, m) = x, y
    if j == m:
        return i != k and j > 0
    if m != j - 1:
        return False
    return k > i or (k < i and lam[i - 1] == lam[k - 1])


def attacking(lam, x, y):
    '''True when the boxes x and y of the augmented diagram of lam attack each other.'''
    lam = Composition(lam)
    return _attacks(lam, x, y) or _attacks(lam, y, x)


class QueueTableau(object):
    '''A nonattacking augmented filling; `filling` maps every box, basement included, to 1..n.'''

    def __init__(self, diagram, filling):
        self.diagram = diagram
        self.filling = dict(filling)
        expected = {(i, 0) for i in range(1, diagram.n + 1)} | set(diagram.boxes())
        if set(self.filling) != expected:
            raise ValueError('filling must cover the basement and every box of the diagram')
        for i, value in enumerate(diagram.basement, start=1):
            if self.filling[(i, 0)] != value:
                raise ValueError('basement entry of column {} must be {}'.format(i, value))
        boxes = sorted(self.filling)
        for a, x in enumerate(boxes):
            for y in boxes[a + 1:]:
                if self.filling[x] == self.filling[y] and diagram.attacking(x, y):
                    raise ValueError('boxes {} and {} attack each other and share entry {}'.format(
                        x, y, self.filling[x]))

    @property
    def lam(self):
        return self.diagram.lam

    def phi(self, box):
        return self.filling[box]

    def restricted(self, box):
        i, j = box
        return self.filling[(i, j - 1)] == self.filling[box]

    def leg(self, box):
        i, j = box
        return self.lam[i - 1] - j

    def arm(self, box):
        i, j = box
        lam = self.lam
        below = sum(1 for k in range(i + 1, self.diagram.n + 1) if lam[k - 1] < lam[i - 1] and j > 1 and lam[k - 1] >= j - 1)
        left = sum(1 for k in range(1, i) if lam[k - 1] == lam[i - 1] and not self.restricted((k, j)))
        return below + left

    def maj(self):
        return sum(self.leg(x) + 1 for x in self.diagram.boxes() if self.phi((x[0], x[1] - 1)) < self.phi(x))

    def triples(self):
        '''(x, y, kind) for every type A and type B triple; x is the upper box, y sits in the row of d(x).'''
        lam = self.lam
        found = []
        for x in self.diagram.boxes():
            i, j = x
            if j < 2:
                continue
            for k in range(1, self.diagram.n + 1):
                if k == i or lam[k - 1] < j - 1:
                    continue
                y = (k, j - 1)
                if k > i and lam[k - 1] < lam[i - 1]:
                    found.append((x, y, 'B'))
                elif lam[k - 1] == lam[i - 1]:
                    above = (k, j)
                    if not self.restricted(above) and self.phi(x) > self.phi(above):
                        found.append((x, y, 'A'))
        return found

    def coinv(self):
        count = 0
        for x, y, _ in self.triples():
            top, low, side = self.phi(x), self.phi((x[0], x[1] - 1)), self.phi(y)
            if side < low < top or low < top < side or top < side < low:
                count += 1
        return count

    def weight(self):
        '''q^maj t^coinv times (1-t)/(1-q^(leg+1) t^(arm+1)) over the unrestricted boxes.'''
        value = QTRational.monomial(self.maj(), self.coinv())
        for x in self.diagram.boxes():
            if not self.restricted(x):
                num = QTPoly({(0, 0): 1, (0, 1): -1})
                value = value * QTRational(num, [(self.leg(x) + 1, self.arm(x) + 1)])
        return value

    def x_exponents(self):
        exps = [0] * self.diagram.n
        for x in self.diagram.boxes():
            exps[self.phi(x) - 1] += 1
        return tuple(exps)

    def weighted_monomial(self):
        return XPolynomial.monomial(self.x_exponents(), self.weight())

    def key(self):
        return tuple(sorted(self.filling.items()))

    def __eq__(self, other):
        return (isinstance(other, QueueTableau) and self.lam == other.lam
                and self.diagram.basement == other.diagram.basement and self.key() == other.key())

    def __hash__(self):
        return hash((self.lam, self.diagram.basement, self.key()))

    def to_json(self):
        return {
            'lambda': list(self.lam),
            'basement': list(self.diagram.basement),
            'fill': [[i, j, v] for (i, j), v in sorted(self.filling.items()) if j > 0],
        }

    def render(self):
        '''Top row first, basement last, one cell per column.'''
        lines = []
        for j in range(self.lam.L, -1, -1):
            cells = []
            for i in range(1, self.diagram.n + 1):
                cells.append('{:>3}'.format(self.filling[(i, j)]) if (i, j) in self.filling else '   ')
            lines.append(''.join(cells))
            if j == 1:
                lines.append('---' * self.diagram.n)
        if self.lam.L == 0:
            lines = ['---' * self.diagram.n] + lines
        return '\n'.join(line.rstrip() for line in lines)

    def __repr__(self):
        return 'QueueTableau({})'.format(self.to_json()['fill'])


def enumerate_qt(mu):
    '''Every queue tableau whose shape and basement come from mu.

    Row 1 repeats the basement; higher rows are filled in reading order,
    rejecting an entry as soon as it meets an attacking box with the same value.'''
    diagram = AugmentedDiagram.for_composition(mu)
    n = diagram.n
    filling = {(i, 0): b for i, b in enumerate(diagram.basement, start=1)}
    for i in range(1, n + 1):
        if diagram.height(i) >= 1:
            filling[(i, 1)] = diagram.basement[i - 1]
    open_boxes = [x for x in diagram.boxes() if x[1] >= 2]
    found = []

    def place(k):
        if k == len(open_boxes):
            found.append(QueueTableau(diagram, filling))
            return
        x = open_boxes[k]
        i, j = x
        taken = set()
        for y, value in filling.items():
            if y[1] in (j, j - 1) and y != (i, j - 1) and diagram.attacking(x, y):
                taken.add(value)
        for value in range(1, n + 1):
            if value in taken:
                continue
            filling[x] = value
            place(k + 1)
            del filling[x]

    place(0)
    logging.info('enumerated {} queue tableaux for {}'.format(len(found), tuple(Composition(mu))))
    return found


def tab_bijection(Q):
    '''The queue tableau whose column over basement entry c lists the columns of the
    strand that starts at row 1, column c of Q, bottom to top.'''
    diagram = AugmentedDiagram.for_composition(Q.type_)
    filling = {}
    for i, c in enumerate(diagram.basement, start=1):
        filling[(i, 0)] = c
        height = diagram.height(i)
        if height:
            strand = Q.chain(c)
            if len(strand) != height:
                raise ValueError('strand from column {} has length {}, expected {}'.format(c, len(strand), height))
            for j, col in enumerate(strand, start=1):
                filling[(i, j)] = col
    return QueueTableau(diagram, filling)


def tableau_sum(mu):
    '''sum of wt(T) x^T over enumerate_qt(mu)'''
    mu = Composition(mu)
    return XPolynomial.sum(mu.n, (T.weighted_monomial() for T in enumerate_qt(mu)))


def check_bijection(mu):
    '''Whether Tab maps the queues of type mu one-to-one onto the queue tableaux, preserving weights.'''
    queues = enumerate_mlq(mu)
    images = [tab_bijection(Q) for Q in queues]
    if len(set(images)) != len(images) or set(images) != set(enumerate_qt(mu)):
        return False
    return all(T.weighted_monomial() == XPolynomial.monomial(Q.system.column_counts(), wt_qt(Q))
               for Q, T in zip(queues, images))
