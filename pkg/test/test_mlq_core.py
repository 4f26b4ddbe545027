import unittest
import pytest
from unittest import TestCase
from mlqueues.exceptions import InvalidMatching
from mlqueues.mlq_core import (BallSystem, Composition, MultilineQueue, count_mlq, cyclic_shift,
                               enumerate_mlq, q_degree, two_line_matchings, wt_qt, wt_x)
from mlqueues.qt_ring import ONE, QTRational, qt_equals

q = QTRational.monomial(1, 0)
t = QTRational.monomial(0, 1)


def inverse(a, b):
    return QTRational(1, [(a, b)])


def worked_queue():
    system = BallSystem(3, 8, [[1, 2, 6, 7, 8], [2, 4, 5, 6], [3]])
    matching = {(3, 3): 5, (2, 5): 6, (2, 6): 1, (2, 4): 7, (2, 2): 2}
    return MultilineQueue(system, matching)


class TestComposition(unittest.TestCase):
    def test_validation(self):
        with pytest.raises(ValueError):
            Composition([1, -1])
        with pytest.raises(TypeError):
            Composition([True, 0])
        with pytest.raises(ValueError):
            Composition([])

    def test_operations(self):
        mu = Composition([0, 1, 2, 2])
        self.assertEqual(mu.swap(1), (1, 0, 2, 2))
        self.assertEqual(mu.rotate(), (2, 0, 1, 2))
        self.assertEqual(mu.lowered(), (0, 0, 1, 1))
        self.assertEqual(mu.partition, (2, 2, 1, 0))
        self.assertEqual(len(mu.rearrangements()), 12)


class TestBallSystem(unittest.TestCase):
    def test_rows_must_not_grow_upward(self):
        with pytest.raises(ValueError):
            BallSystem(2, 3, [[1], [1, 2]])

    def test_column_counts(self):
        self.assertEqual(worked_queue().system.column_counts(), (1, 2, 1, 1, 1, 2, 1, 1))

    def test_occupancy(self):
        grid = BallSystem(2, 3, [[1, 3], [2]]).occupancy()
        self.assertEqual(grid.shape, (2, 3))
        self.assertEqual(grid.tolist(), [[True, False, True], [False, True, False]])
        self.assertEqual(BallSystem(0, 3, []).column_counts(), (0, 0, 0))


class TestMultilineQueue(TestCase):
    def test_worked_queue_type(self):
        self.assertEqual(worked_queue().type_, (2, 2, 0, 0, 0, 3, 2, 1))

    def test_worked_queue_weight(self):
        Q = worked_queue()
        expected = ((ONE - t) * t * inverse(1, 4)
                    * (ONE - t) * inverse(2, 5)
                    * (ONE - t) * t * t * q * inverse(1, 3)
                    * (ONE - t) * inverse(1, 2))
        self.assertTrue(qt_equals(wt_qt(Q), expected))
        self.assertEqual(wt_x(Q), (1, 2, 1, 1, 1, 2, 1, 1))
        self.assertEqual(q_degree(Q), 1)

    def test_two_by_two_weight(self):
        Q = MultilineQueue(BallSystem(2, 2, [[2], [1]]), {(2, 1): 2})
        self.assertEqual(Q.type_, (0, 2))
        self.assertEqual(wt_qt(Q), (ONE - t) * inverse(1, 1))

    def test_straight_down_is_forced(self):
        with pytest.raises(InvalidMatching):
            MultilineQueue(BallSystem(2, 2, [[1, 2], [1]]), {(2, 1): 2})

    def test_matching_must_cover_upper_balls(self):
        with pytest.raises(InvalidMatching):
            MultilineQueue(BallSystem(2, 2, [[1, 2], [1]]), {})

    def test_chain_and_render(self):
        Q = worked_queue()
        self.assertEqual(Q.chain(6), [6, 5, 3])
        self.assertEqual(Q.chain(8), [8])
        self.assertEqual(len(Q.render().splitlines()), 3)
        self.assertEqual(Q.render().splitlines()[0].count(' .    '), 7)
        self.assertEqual(len(Q.to_json()['events']), 5)


class TestEnumeration(TestCase):
    def test_term_counts(self):
        for lam, count in [((2, 1, 1, 0, 0), 3), ((2, 2, 1, 1, 0, 0), 7), ((2, 2, 2, 1, 1, 0, 0), 13),
                           ((2, 2, 2, 2, 1, 1, 0, 0), 21), ((3, 2, 2, 1, 1, 0, 0), 105),
                           ((3, 3, 2, 2, 1, 1, 0, 0), 1029)]:
            self.assertEqual(count_mlq(lam), count)

    def test_count_is_rotation_invariant(self):
        self.assertEqual(count_mlq((0, 2, 2, 1, 1, 0)), 7)
        self.assertEqual(count_mlq((0, 0, 3, 2, 2, 1, 1)), 105)

    def test_every_queue_has_the_requested_type(self):
        mu = (0, 1, 2, 2)
        queues = enumerate_mlq(mu)
        self.assertEqual(len(queues), 3)
        self.assertTrue(all(Q.type_ == mu for Q in queues))
        self.assertEqual(len(set(queues)), 3)

    def test_single_row(self):
        queues = enumerate_mlq((1, 0, 1))
        self.assertEqual(len(queues), 1)
        self.assertEqual(wt_x(queues[0]), (1, 0, 1))
        self.assertTrue(wt_qt(queues[0]).is_one())

    def test_cyclic_shift_q_degree(self):
        mu = Composition((0, 1, 2, 2))
        for Q in enumerate_mlq(mu):
            shifted = cyclic_shift(Q)
            self.assertEqual(shifted.type_, mu.rotate())
            self.assertEqual(mu[-1] + q_degree(Q), q_degree(shifted) + wt_x(Q)[-1])

    def test_two_line_matchings(self):
        self.assertEqual(two_line_matchings((1, 0), (1, 0)), [])
        self.assertEqual(two_line_matchings((0, 2), (2, 0)), [{2: 1}])
        self.assertEqual(two_line_matchings((2, 0), (2, 0)), [{1: 1}])
