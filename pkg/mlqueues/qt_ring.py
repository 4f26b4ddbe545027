# -*- coding: utf-8 -*-
''' Exact arithmetic over the field of rational functions in q and t.

QTPoly holds sparse polynomials in q and t, QTRational holds quotients whose
denominator is a product of factors (1 - q^a t^b) and a power of t, and
XPolynomial holds polynomials in x_1..x_n with QTRational coefficients.
All values are immutable once built.'''

import functools
import itertools
from collections import Counter, namedtuple
from fractions import Fraction
import sympy
import extensions.utilities as utilities
from mlqueues.exceptions import (IndexOutOfRange, MismatchedArity, NotDivisible,
                                 PoleAtEvaluationPoint)

config_mlq = utilities.package_config(__file__, 'config_mlq.yml')
# defining constant
CHECK_POINTS = [(utilities.parse_rational(q), utilities.parse_rational(t))
                for q, t in config_mlq['constant']['check_points']]

QTFactor = namedtuple('QTFactor', ['a', 'b'])


def make_factor(a, b):
    '''Validated QTFactor standing for (1 - q^a t^b).'''
    if not isinstance(a, int) or not isinstance(b, int):
        raise TypeError('factor exponents must be integers')
    if a < 0 or b < 0:
        raise ValueError('factor exponents must be nonnegative')
    if a == 0 and b == 0:
        raise ValueError('factor (1 - q^0 t^0) is zero')
    return QTFactor(a, b)


def _graded_key(mono):
    return (mono[0] + mono[1], mono[0], mono[1])


def _render_qt_monomial(dq, dt):
    parts = []
    if dq:
        parts.append('q' if dq == 1 else 'q^{}'.format(dq))
    if dt:
        parts.append('t' if dt == 1 else 't^{}'.format(dt))
    return '*'.join(parts)


def _is_exact_number(value):
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


class QTPoly(object):
    '''Sparse polynomial in q and t with Fraction coefficients.

    `terms` maps (deg_q, deg_t) to a nonzero Fraction.'''
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            dq, dt = mono
            if not isinstance(dq, int) or not isinstance(dt, int):
                raise TypeError('q and t exponents must be integers')
            if dq < 0 or dt < 0:
                raise ValueError('q and t exponents must be nonnegative')
            coeff = Fraction(coeff)
            if coeff:
                clean[(dq, dt)] = clean.get((dq, dt), 0) + coeff
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def _wrap(cls, terms):
        poly = cls.__new__(cls)
        poly.terms = terms
        return poly

    @classmethod
    def constant(cls, value):
        value = Fraction(value)
        return cls._wrap({(0, 0): value} if value else {})

    @classmethod
    def monomial(cls, dq=0, dt=0, coeff=1):
        return cls({(dq, dt): coeff})

    @classmethod
    def one_minus(cls, a, b):
        '''The polynomial 1 - q^a t^b.'''
        factor = make_factor(a, b)
        return cls._wrap({(0, 0): Fraction(1), (factor.a, factor.b): Fraction(-1)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(m == (0, 0) for m in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(dq + dt for dq, dt in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _graded_key(item[0]))

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            value = terms.get(mono, 0) + coeff
            if value:
                terms[mono] = value
            else:
                terms.pop(mono, None)
        return QTPoly._wrap(terms)

    __radd__ = __add__

    def __neg__(self):
        return QTPoly._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return QTPoly()
        terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                mono = (a1 + a2, b1 + b2)
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return QTPoly._wrap({m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('exponent must be a nonnegative integer')
        result = QTPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def shift(self, dq, dt):
        '''Multiply by q^dq t^dt.'''
        if dq == 0 and dt == 0:
            return self
        terms = {}
        for (a, b), c in self.terms.items():
            if a + dq < 0 or b + dt < 0:
                raise ValueError('shift would produce a negative exponent')
            terms[(a + dq, b + dt)] = c
        return QTPoly._wrap(terms)

    def divide_by_factor(self, a, b):
        '''Exact quotient by (1 - q^a t^b), or None when the division leaves a remainder.'''
        if not self.terms:
            return QTPoly()
        if self.evaluate(*_vanishing_point(a, b)) != 0:
            return None
        remainder = dict(self.terms)
        quotient = {}
        bound = self.total_degree() - (a + b)
        while remainder:
            low = min(remainder, key=_graded_key)
            if low[0] + low[1] > bound:
                return None
            coeff = remainder.pop(low)
            quotient[low] = coeff
            up = (low[0] + a, low[1] + b)
            value = remainder.get(up, 0) + coeff
            if value:
                remainder[up] = value
            else:
                remainder.pop(up, None)
        return QTPoly._wrap(quotient)

    def divide_by_t(self):
        '''Exact quotient by t, or None.'''
        if any(dt == 0 for _, dt in self.terms):
            return None
        return QTPoly._wrap({(dq, dt - 1): c for (dq, dt), c in self.terms.items()})

    def truncate_q(self, order):
        '''Drop every term of q-degree >= order.'''
        return QTPoly._wrap({m: c for m, c in self.terms.items() if m[0] < order})

    def evaluate(self, q, t):
        q, t = Fraction(q), Fraction(t)
        return sum((c * q ** dq * t ** dt for (dq, dt), c in self.terms.items()), Fraction(0))

    def to_sympy(self, q=None, t=None):
        q = q if q is not None else sympy.Symbol('q')
        t = t if t is not None else sympy.Symbol('t')
        return sum((sympy.Rational(c.numerator, c.denominator) * q ** dq * t ** dt
                    for (dq, dt), c in self.sorted_terms()), sympy.Integer(0))

    def to_json(self):
        return [[dq, dt, utilities.format_rational(c)] for (dq, dt), c in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return '0'
        out = []
        for (dq, dt), coeff in self.sorted_terms():
            mono = _render_qt_monomial(dq, dt)
            size = abs(coeff)
            if mono:
                body = mono if size == 1 else '{}*{}'.format(utilities.format_rational(size), mono)
            else:
                body = utilities.format_rational(size)
            if not out:
                out.append(body if coeff > 0 else '-' + body)
            else:
                out.append(('+ ' if coeff > 0 else '- ') + body)
        return ' '.join(out)

    def __repr__(self):
        return 'QTPoly({})'.format(self)


def _as_poly(value):
    if isinstance(value, QTPoly):
        return value
    if _is_exact_number(value):
        return QTPoly.constant(value)
    return NotImplemented


@functools.lru_cache(maxsize=None)
def _vanishing_point(a, b):
    # a rational point where q^a t^b = 1
    if a == 0:
        return Fraction(2), Fraction(1)
    if b == 0:
        return Fraction(1), Fraction(2)
    return Fraction(2) ** b, Fraction(1, 2) ** a


@functools.lru_cache(maxsize=None)
def _factor_product(factors):
    result = QTPoly.constant(1)
    for factor in factors:
        result = result * QTPoly.one_minus(factor.a, factor.b)
    return result


def _product(counts):
    return _factor_product(tuple(sorted(counts.elements())))


def _canonical(num, counts, tpow):
    if num.is_zero():
        return num, (), 0
    den = []
    for factor in sorted(counts):
        left = counts[factor]
        while left > 0:
            quotient = num.divide_by_factor(factor.a, factor.b)
            if quotient is None:
                break
            num = quotient
            left -= 1
        den.extend([factor] * left)
    while tpow > 0:
        quotient = num.divide_by_t()
        if quotient is None:
            break
        num = quotient
        tpow -= 1
    return num, tuple(den), tpow


class QTRational(object):
    '''An element num / (t^tpow * prod (1 - q^a t^b)) of Q(q, t).

    The denominator factors are kept sorted, with repetition; a factor that
    divides the numerator exactly is cancelled on construction.'''
    __slots__ = ('num', 'den', 'tpow')

    def __init__(self, num=0, den=(), tpow=0):
        num = _as_poly(num)
        if num is NotImplemented:
            raise TypeError('numerator must be a QTPoly or an exact rational')
        if not isinstance(tpow, int) or tpow < 0:
            raise ValueError('tpow must be a nonnegative integer')
        counts = Counter(make_factor(*factor) for factor in den)
        self.num, self.den, self.tpow = _canonical(num, counts, tpow)

    @classmethod
    def _make(cls, num, counts, tpow):
        value = cls.__new__(cls)
        value.num, value.den, value.tpow = _canonical(num, counts, tpow)
        return value

    @classmethod
    def monomial(cls, dq=0, dt=0, coeff=1):
        '''coeff * q^dq * t^dt; a negative dt goes to the t-power of the denominator.'''
        if dq < 0:
            raise ValueError('q exponent must be nonnegative')
        if dt >= 0:
            return cls(QTPoly.monomial(dq, dt, coeff))
        return cls(QTPoly.monomial(dq, 0, coeff), tpow=-dt)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return not self.den and not self.tpow

    def is_one(self):
        return self.is_polynomial() and self.num == 1

    def __add__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den and self.tpow == other.tpow:
            return QTRational._make(self.num + other.num, Counter(self.den), self.tpow)
        mine, theirs = Counter(self.den), Counter(other.den)
        common = mine | theirs
        tpow = max(self.tpow, other.tpow)
        num = ((self.num * _product(common - mine)).shift(0, tpow - self.tpow)
               + (other.num * _product(common - theirs)).shift(0, tpow - other.tpow))
        return QTRational._make(num, common, tpow)

    __radd__ = __add__

    def __neg__(self):
        value = QTRational.__new__(QTRational)
        value.num, value.den, value.tpow = -self.num, self.den, self.tpow
        return value

    def __sub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QTRational()
        return QTRational._make(self.num * other.num,
                                Counter(self.den) + Counter(other.den),
                                self.tpow + other.tpow)

    __rmul__ = __mul__

    def divide_by_t(self, power=1):
        return QTRational._make(self.num, Counter(self.den), self.tpow + power)

    def times_monomial(self, dq, dt):
        '''Multiply by q^dq t^dt, dt of either sign.'''
        return self * QTRational.monomial(dq, dt)

    def __eq__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return qt_equals(self, other)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def evaluate(self, q, t):
        q, t = Fraction(q), Fraction(t)
        denominator = Fraction(1)
        for factor in self.den:
            value = 1 - q ** factor.a * t ** factor.b
            if value == 0:
                raise PoleAtEvaluationPoint(
                    'factor (1 - q^{} t^{}) vanishes at q={}, t={}'.format(factor.a, factor.b, q, t))
            denominator *= value
        if self.tpow:
            if t == 0:
                raise PoleAtEvaluationPoint('t^{} in the denominator vanishes at t=0'.format(self.tpow))
            denominator *= t ** self.tpow
        return self.num.evaluate(q, t) / denominator

    def series_in_q(self, order):
        '''Power series in q truncated below q^order.

        Every denominator factor must carry a positive power of q.'''
        if self.tpow:
            raise NotDivisible('a power of t in the denominator has no q-expansion')
        result = self.num.truncate_q(order)
        for factor in self.den:
            if factor.a == 0:
                raise NotDivisible('factor (1 - t^{}) has no q-expansion'.format(factor.b))
            geometric = QTPoly({(factor.a * k, factor.b * k): 1
                                for k in range((order - 1) // factor.a + 1)})
            result = (result * geometric).truncate_q(order)
        return result

    def to_sympy(self, q=None, t=None):
        q = q if q is not None else sympy.Symbol('q')
        t = t if t is not None else sympy.Symbol('t')
        denominator = t ** self.tpow
        for factor in self.den:
            denominator *= 1 - q ** factor.a * t ** factor.b
        return self.num.to_sympy(q, t) / denominator

    def denominator_text(self):
        parts = []
        if self.tpow:
            parts.append('t' if self.tpow == 1 else 't^{}'.format(self.tpow))
        parts.extend('(1 - {})'.format(_render_qt_monomial(f.a, f.b)) for f in self.den)
        return '*'.join(parts)

    def to_json(self):
        out = {'num': self.num.to_json(), 'den': [[f.a, f.b] for f in self.den]}
        if self.tpow:
            out['tpow'] = self.tpow
        return out

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = '({})'.format(num)
        den = self.denominator_text()
        if len(self.den) + (1 if self.tpow else 0) > 1:
            den = '({})'.format(den)
        return '{}/{}'.format(num, den)

    def __repr__(self):
        return 'QTRational({})'.format(self)


def _as_rational(value):
    if isinstance(value, QTRational):
        return value
    if isinstance(value, QTPoly) or _is_exact_number(value):
        return QTRational(value)
    return NotImplemented


def as_rational(value):
    '''Coerce a QTPoly, int or Fraction to QTRational.'''
    result = _as_rational(value)
    if result is NotImplemented:
        raise TypeError('cannot use {!r} as a coefficient'.format(value))
    return result


def qt_add(a, b):
    return as_rational(a) + as_rational(b)


def qt_mul(a, b):
    return as_rational(a) * as_rational(b)


def qt_neg(a):
    return -as_rational(a)


def qt_equals(a, b):
    '''Field equality: a cheap evaluation screen, then an exact comparison.'''
    a, b = as_rational(a), as_rational(b)
    if a.den == b.den and a.tpow == b.tpow:
        return a.num == b.num
    for q, t in CHECK_POINTS:
        try:
            if a.evaluate(q, t) != b.evaluate(q, t):
                return False
        except PoleAtEvaluationPoint:
            continue
    return (a - b).is_zero()


ZERO = QTRational()
ONE = QTRational(1)


def _render_x_monomial(exps):
    parts = []
    for index, e in enumerate(exps, start=1):
        if e == 1:
            parts.append('x{}'.format(index))
        elif e > 1:
            parts.append('x{}^{}'.format(index, e))
    return '*'.join(parts)


class XPolynomial(object):
    '''Polynomial in x_1..x_n with QTRational coefficients.

    `terms` maps an exponent tuple of length n to a nonzero coefficient.'''
    __slots__ = ('n', 'terms')

    def __init__(self, n, terms=None, homogeneous=False):
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError('n must be an integer')
        if n < 1:
            raise ValueError('n must be at least 1')
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise MismatchedArity('monomial {} does not have {} exponents'.format(exps, n))
            if any(not isinstance(e, int) or e < 0 for e in exps):
                raise ValueError('x exponents must be nonnegative integers')
            coeff = as_rational(coeff)
            if not coeff.is_zero():
                clean[exps] = coeff
        self.n, self.terms = n, clean
        if homogeneous and not self.is_homogeneous():
            raise ValueError('polynomial is not homogeneous')

    @classmethod
    def _wrap(cls, n, terms):
        poly = cls.__new__(cls)
        poly.n, poly.terms = n, terms
        return poly

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def variable(cls, n, i):
        _check_index(i, n, 'variable index')
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): 1})

    @classmethod
    def sum(cls, n, polys):
        '''Sum many polynomials, collecting coefficients per monomial first.'''
        buckets = {}
        for poly in polys:
            _check_arity(n, poly.n)
            for exps, coeff in poly.terms.items():
                buckets.setdefault(exps, []).append(coeff)
        terms = {}
        for exps, coeffs in buckets.items():
            total = _sum_coefficients(coeffs)
            if not total.is_zero():
                terms[exps] = total
        return cls._wrap(n, terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def is_homogeneous(self):
        return len({sum(exps) for exps in self.terms}) <= 1

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def __add__(self, other):
        if not isinstance(other, XPolynomial):
            return NotImplemented
        _check_arity(self.n, other.n)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            value = terms[exps] + coeff if exps in terms else coeff
            if value.is_zero():
                terms.pop(exps, None)
            else:
                terms[exps] = value
        return XPolynomial._wrap(self.n, terms)

    def __neg__(self):
        return XPolynomial._wrap(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, XPolynomial):
            _check_arity(self.n, other.n)
            buckets = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    exps = tuple(a + b for a, b in zip(e1, e2))
                    buckets.setdefault(exps, []).append(c1 * c2)
            terms = {}
            for exps, coeffs in buckets.items():
                total = _sum_coefficients(coeffs)
                if not total.is_zero():
                    terms[exps] = total
            return XPolynomial._wrap(self.n, terms)
        scalar = _as_rational(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def __rmul__(self, other):
        scalar = _as_rational(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def scale(self, scalar):
        scalar = as_rational(scalar)
        if scalar.is_zero():
            return XPolynomial._wrap(self.n, {})
        if scalar.is_one():
            return self
        return XPolynomial._wrap(self.n, {e: c * scalar for e, c in self.terms.items()})

    def times_monomial(self, exps):
        exps = tuple(exps)
        _check_arity(self.n, len(exps))
        return XPolynomial._wrap(self.n, {tuple(a + b for a, b in zip(e, exps)): c
                                          for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, XPolynomial):
            return NotImplemented
        if self.n != other.n or set(self.terms) != set(other.terms):
            return False
        return all(qt_equals(c, other.terms[e]) for e, c in self.terms.items())

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def swap_vars(self, i):
        _check_index(i, self.n - 1, 'swap index')
        terms = {}
        for exps, coeff in self.terms.items():
            exps = list(exps)
            exps[i - 1], exps[i] = exps[i], exps[i - 1]
            terms[tuple(exps)] = coeff
        return XPolynomial._wrap(self.n, terms)

    def divide_by_xdiff(self, i):
        '''Exact quotient by (x_i - x_{i+1}); NotDivisible if a remainder is left.'''
        _check_index(i, self.n - 1, 'swap index')
        a, b = i - 1, i
        remainder = dict(self.terms)
        quotient = {}
        while remainder:
            top = max(remainder, key=lambda exps: (exps[a], exps))
            if top[a] == 0:
                raise NotDivisible('polynomial is not divisible by x{} - x{}'.format(i, i + 1))
            coeff = remainder.pop(top)
            lowered = list(top)
            lowered[a] -= 1
            lowered = tuple(lowered)
            quotient[lowered] = quotient[lowered] + coeff if lowered in quotient else coeff
            moved = list(lowered)
            moved[b] += 1
            moved = tuple(moved)
            value = remainder[moved] + coeff if moved in remainder else coeff
            if value.is_zero():
                remainder.pop(moved, None)
            else:
                remainder[moved] = value
        return XPolynomial._wrap(self.n, {e: c for e, c in quotient.items() if not c.is_zero()})

    def rotate_vars(self, twist=True):
        '''f(x_1..x_n) -> f(q x_n, x_1, .., x_{n-1}); without twist the q is omitted.'''
        terms = {}
        for exps, coeff in self.terms.items():
            moved = exps[1:] + exps[:1]
            terms[moved] = coeff.times_monomial(exps[0], 0) if twist and exps[0] else coeff
        return XPolynomial._wrap(self.n, terms)

    def specialize(self, q, t):
        '''Substitute exact values for q and t, keeping x symbolic.'''
        terms = {}
        for exps, coeff in self.terms.items():
            value = coeff.evaluate(q, t)
            if value:
                terms[exps] = QTRational(value)
        return XPolynomial._wrap(self.n, terms)

    def evaluate(self, x, q, t):
        x = [Fraction(v) for v in x]
        _check_arity(self.n, len(x))
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff.evaluate(q, t)
            for base, e in zip(x, exps):
                value *= base ** e
            total += value
        return total

    def to_sympy(self):
        xs = sympy.symbols('x1:{}'.format(self.n + 1))
        total = sympy.Integer(0)
        for exps, coeff in self.sorted_terms():
            mono = sympy.Integer(1)
            for var, e in zip(xs, exps):
                mono *= var ** e
            total += coeff.to_sympy() * mono
        return total

    def to_json(self):
        out = []
        for exps, coeff in self.sorted_terms():
            item = {'x': list(exps)}
            item.update(coeff.to_json())
            out.append(item)
        return {'n': self.n, 'terms': out}

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for exps, coeff in self.sorted_terms():
            mono = _render_x_monomial(exps)
            if not mono:
                pieces.append(str(coeff))
            elif coeff.is_one():
                pieces.append(mono)
            elif coeff.is_polynomial() and len(coeff.num.terms) == 1:
                pieces.append('{}*{}'.format(coeff, mono))
            else:
                pieces.append('({})*{}'.format(coeff, mono))
        return ' + '.join(pieces)

    def __repr__(self):
        return 'XPolynomial(n={}, {})'.format(self.n, self)


def _check_arity(n, other):
    if n != other:
        raise MismatchedArity('polynomials over {} and {} variables cannot be combined'.format(n, other))


def _check_index(i, upper, what):
    if not isinstance(i, int) or isinstance(i, bool):
        raise TypeError('{} must be an integer'.format(what))
    if i < 1 or i > upper:
        raise IndexOutOfRange('{} {} outside 1..{}'.format(what, i, upper))


def _sum_coefficients(coeffs):
    # group by denominator so most additions skip the common-denominator step
    by_den = {}
    for coeff in coeffs:
        key = (coeff.den, coeff.tpow)
        by_den[key] = by_den[key] + coeff.num if key in by_den else coeff.num
    total = ZERO
    for (den, tpow), num in sorted(by_den.items(), key=lambda item: (len(item[0][0]), item[0])):
        total = total + QTRational._make(num, Counter(den), tpow)
    return total


def xpoly_add(f, g):
    return f + g


def xpoly_mul(f, g):
    return f * g


def xpoly_scalar_mul(c, f):
    return f.scale(c)


def swap_vars(f, i):
    return f.swap_vars(i)


def divide_by_xdiff(f, i):
    return f.divide_by_xdiff(i)


def evaluate(f, x, q, t):
    return f.evaluate(x, q, t)


def exponent_vectors(n, degree):
    '''All exponent tuples of length n summing to degree, in decreasing lex order.'''
    out = []
    for cut in itertools.combinations(range(degree + n - 1), n - 1):
        bounds = (-1,) + cut + (degree + n - 1,)
        out.append(tuple(bounds[k + 1] - bounds[k] - 1 for k in range(n)))
    return sorted(out, reverse=True)
