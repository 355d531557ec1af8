#!/usr/bin/env python
# -*- coding: utf-8 -*-

# sums - the counting sum S0, its smoothed version S1, the gcd-window value k* and the starred sum
# available under the ISC license, see LICENSE

import collections
import math
from fractions import Fraction
from math import gcd

import numpy

from zsindex.approx import FourierSmoother
from zsindex.arith import Modulus, NotCoprimeError, ramanujan_table
from zsindex.audit.abstract import AuditInputError

# Rows of the coefficient outer product evaluated at once
PAIR_BLOCK = 256

TSumBound = collections.namedtuple('TSumBound', ['exact', 'closed_form', 'coefficient_sum'])


class UniquenessError(RuntimeError):
    pass


def _modulus(m):
    return m if isinstance(m, Modulus) else Modulus(int(m))


def _smoother(s):
    return s if isinstance(s, FourierSmoother) else FourierSmoother(int(s))


def _require_units(n, *values):
    for v in values:
        if gcd(v, n) != 1:
            raise NotCoprimeError("{} is not coprime to {}".format(v, n))


def _twice_chi(r, n):
    # 2 * chi(r/n) for a least residue r
    if r == 0 or 2 * r == n:
        return 1
    return 2 if 2 * r < n else 0


# @brief S0 = sum over units g of chi(g/n) chi(ag/n) chi(bg/n), as an exact fraction
def compute_S0(m, a, b):
    m = _modulus(m)
    n = m.n
    _require_units(n, a, b)
    total = 0
    for g in m.unit_values():
        total += _twice_chi(g, n) * _twice_chi((a * g) % n, n) * _twice_chi((b * g) % n, n)
    return Fraction(total, 8)


# @brief number of units g with g, ag, bg all in the open half (0, n/2), n odd
def count_triple_in_I(m, a, b):
    m = _modulus(m)
    n = m.n
    if n % 2 == 0:
        raise AuditInputError("Triple count needs odd n, got {}".format(n))
    _require_units(n, a, b)
    half = [False] * n
    for r in range(1, n):
        half[r] = 2 * r < n
    return sum(1 for g in m.unit_values() if half[g] and half[(a * g) % n] and half[(b * g) % n])


# @brief S1 by direct evaluation of f at the rational points g/n
def compute_S1_direct(m, a, b, s):
    m = _modulus(m)
    s = _smoother(s)
    n = m.n
    _require_units(n, a, b)
    units = numpy.array(m.unit_values(), dtype=numpy.int64)
    values = numpy.zeros(n)
    values[units] = s.grid_values(n, units)
    products = values[units] * values[(a * units) % n] * values[(b * units) % n]
    return math.fsum(products.tolist())


def _pair_sum(table, indices, imag, u, v, n):
    # sum over odd h, h' of f_hat(h) f_hat(h') c_n(u h + v h'), the coefficients being purely imaginary
    partial = []
    for start in range(0, len(indices), PAIR_BLOCK):
        rows = indices[start:start + PAIR_BLOCK]
        args = (u * rows[:, None] + v * indices[None, :]) % n
        terms = numpy.outer(imag[start:start + PAIR_BLOCK], imag) * table[args]
        partial.append(math.fsum(terms.ravel().tolist()))
    return -math.fsum(partial)


def _full_triple_sum(table, indices, imag, a, b, n):
    # every (h1, h2, h3) with each h odd or zero; f_hat(0) = 1/2
    coeffs = numpy.concatenate(([0.5 + 0j], 1j * imag))
    keys = numpy.concatenate(([0], indices))
    inner = numpy.outer(coeffs, coeffs)
    real_parts, imag_parts = [], []
    for c1, h1 in zip(coeffs, keys):
        args = (a * h1 + b * keys[:, None] + keys[None, :]) % n
        block = c1 * inner * table[args]
        real_parts.append(math.fsum(block.real.ravel().tolist()))
        imag_parts.append(math.fsum(block.imag.ravel().tolist()))
    return math.fsum(real_parts), math.fsum(imag_parts)


# @brief S1 via fourier expansion and ramanujan sums
# @param exhaustive evaluate the full triple sum instead of the zero-shell decomposition
def compute_S1_spectral(m, a, b, s, exhaustive=False):
    m = _modulus(m)
    s = _smoother(s)
    n = m.n
    _require_units(n, a, b)
    table = numpy.array(ramanujan_table(m), dtype=float)
    indices, imag = s.odd_spectrum()
    if exhaustive:
        return _full_triple_sum(table, indices, imag, a, b, n)[0]
    # f_hat is odd off zero and c_n is even, so the shells with one or three odd indices cancel
    shells = (_pair_sum(table, indices, imag, b, 1, n) + _pair_sum(table, indices, imag, a, 1, n) +
              _pair_sum(table, indices, imag, a, b, n))
    return m.phi / 8.0 + 0.5 * shells


# @brief y in [-G, G] with gcd(xA + y, n)^2 > 2Gn, by full scan
def gcd_window_qualifiers(x, A, n, G):
    bound = 2 * G * n
    return [y for y in range(-G, G + 1) if gcd(x * A + y, n) ** 2 > bound]


# @brief x in [-G, G] with gcd(xA + y, n)^2 > 2Gn, by full scan
def gcd_window_qualifiers_x(y, A, n, G):
    bound = 2 * G * n
    return [x for x in range(-G, G + 1) if gcd(x * A + y, n) ** 2 > bound]


class KStarFinder:
    # @brief locate k* for a fixed (A, n, H), reusing the large divisors of n
    def __init__(self, A, m, H):
        self.m = _modulus(m)
        self.A = int(A)
        self.H = int(H)
        _require_units(self.m.n, self.A)
        self.G = self.H * self.H
        self.bound = 2 * self.G * self.m.n
        self.large = [d for d in self.m.divisors() if d * d > self.bound]

    def candidates(self, k):
        n, G, Ak = self.m.n, self.G, self.A * k
        found = set()
        for d in self.large:
            start = -G + ((-Ak + G) % d)
            for y in range(start, G + 1, d):
                if gcd(Ak + y, n) ** 2 > self.bound:
                    found.add(y)
        return sorted(found)

    def find(self, k, scan=False):
        if abs(k) > self.H:
            raise ValueError("k={} outside [-{}, {}]".format(k, self.H, self.H))
        if scan:
            found = gcd_window_qualifiers(k, self.A, self.m.n, self.G)
        else:
            found = self.candidates(k)
        if len(found) > 1:
            raise UniquenessError("Several k* for k={}, A={}, n={}: {}".format(k, self.A, self.m.n, found))
        return found[0] if found else None


# @brief the unique y in [-H^2, H^2] with gcd(Ak + y, n)^2 > 2H^2 n, or None
# @param scan check every y instead of walking the divisors of n
def kstar(A, m, s, k, scan=False):
    H = s.H if isinstance(s, FourierSmoother) else int(s)
    return KStarFinder(A, m, H).find(int(k), scan)


# @brief sum over odd k, |k| <= H, of f_hat(k) f_hat(k*) c_n(Ak + k*), k* odd with |k*| <= H
def star_sum(A, m, s):
    m = _modulus(m)
    s = _smoother(s)
    finder = KStarFinder(A, m, s.H)
    n = m.n
    real, imag = [], []
    if not finder.large:
        return complex(0.0, 0.0)
    table = ramanujan_table(m)
    for k in range(-s.H, s.H + 1):
        if k % 2 == 0:
            continue
        y = finder.find(k)
        if y is None or y % 2 == 0 or abs(y) > s.H:
            continue
        term = s.f_hat(k) * s.f_hat(y) * table[(A * k + y) % n]
        real.append(term.real)
        imag.append(term.imag)
    return complex(math.fsum(real), math.fsum(imag))


# @brief bound on the remaining off-diagonal sum
# @return TSumBound with the exact coefficient sum and the closed-form (2 log H / pi)^2 version
def t_sum_bound(s, m):
    s = _smoother(s)
    m = _modulus(m)
    if s.H < 2:
        raise AuditInputError("T-sum bound needs H >= 2, got {}".format(s.H))
    window = math.sqrt(2.0 * s.H * s.H * m.n)
    coefficient_sum = s.abs_coefficient_sum()
    closed_form = (2.0 * math.log(s.H) / math.pi) ** 2 * window
    return TSumBound(coefficient_sum ** 2 * window, closed_form, coefficient_sum)
