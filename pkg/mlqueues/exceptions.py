# -*- coding: utf-8 -*-
'''Exceptions raised by the mlqueues package'''


class MismatchedArity(ValueError):
    '''Two polynomials over different numbers of variables were combined.'''


class IndexOutOfRange(IndexError):
    '''A variable or position index fell outside 1..n (or 1..n-1 for adjacent swaps).'''


class NotDivisible(ArithmeticError):
    '''An exact division left a nonzero remainder.'''


class PoleAtEvaluationPoint(ZeroDivisionError):
    '''A denominator factor vanishes at the requested point.'''


class InvalidMatching(ValueError):
    '''A ball system and matching do not form a multiline queue.'''


class CharacterizationFailed(AssertionError):
    '''A computed polynomial failed its defining characterization.'''


class NotIrreducible(ValueError):
    '''The Markov chain has more than one stationary distribution.'''


class TruncationUnstable(ArithmeticError):
    '''Truncated traces did not agree with the exact trace at the requested dimension.'''
