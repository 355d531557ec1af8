#!/usr/bin/env python
# -*- coding: utf-8 -*-

# arith - residues, factorization, totient, moebius, units and ramanujan sums
# available under the ISC license, see LICENSE

from functools import lru_cache
from math import gcd

from sympy import factorint


class NotCoprimeError(ValueError):
    pass


# @brief least non-negative representative of x modulo n
def least_residue(x, n):
    if n < 1:
        raise ValueError("Modulus must be positive, got {}".format(n))
    return x % n


# @brief prime factorization as a list of (prime, exponent), primes ascending
def factorize(n):
    if n < 1:
        raise ValueError("Cannot factorize {}".format(n))
    return sorted(factorint(n).items())


def _phi_from_factors(factors):
    phi = 1
    for p, e in factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def _moebius_from_factors(factors):
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(n):
    return _phi_from_factors(factorize(n))


def moebius(n):
    return _moebius_from_factors(factorize(n))


# @brief multiplicative inverse of a modulo n
# @return the inverse in [1, n-1] (0 for the trivial modulus 1)
def inverse_mod(a, n):
    if gcd(a, n) != 1:
        raise NotCoprimeError("{} is not invertible modulo {} (gcd {})".format(a, n, gcd(a, n)))
    return pow(a, -1, n)


# @brief the modulus n together with its factorization and derived data; immutable
class Modulus:
    __slots__ = ('n', 'factors', 'phi', 'mu', 'is_coprime_six')

    def __init__(self, n):
        if n < 2:
            raise ValueError("Modulus must be at least 2, got {}".format(n))
        factors = tuple(factorize(n))
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'factors', factors)
        object.__setattr__(self, 'phi', _phi_from_factors(factors))
        object.__setattr__(self, 'mu', _moebius_from_factors(factors))
        object.__setattr__(self, 'is_coprime_six', gcd(n, 6) == 1)

    def __setattr__(self, name, value):
        raise AttributeError("Modulus is immutable")

    def __eq__(self, other):
        return isinstance(other, Modulus) and other.n == self.n

    def __hash__(self):
        return hash(self.n)

    def __repr__(self):
        return "Modulus({})".format(self.n)

    def __reduce__(self):
        return Modulus, (self.n,)

    # @brief all units as plain integers, ascending
    def unit_values(self):
        return [g for g in range(1, self.n) if gcd(g, self.n) == 1]

    def units(self):
        for g in range(1, self.n):
            if gcd(g, self.n) == 1:
                yield Unit(g, self)

    def is_unit(self, x):
        return gcd(x, self.n) == 1

    def divisors(self):
        return divisors(self)


class Unit:
    __slots__ = ('value', 'modulus')

    def __init__(self, value, modulus):
        value = value % modulus.n
        if gcd(value, modulus.n) != 1:
            raise NotCoprimeError("{} is not a unit modulo {}".format(value, modulus.n))
        self.value = value
        self.modulus = modulus

    def inverse(self):
        return Unit(inverse_mod(self.value, self.modulus.n), self.modulus)

    def __mul__(self, other):
        if isinstance(other, Unit):
            other = other.value
        return (self.value * other) % self.modulus.n

    __rmul__ = __mul__

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Unit):
            return self.value == other.value and self.modulus == other.modulus
        return self.value == other

    def __hash__(self):
        return hash((self.value, self.modulus.n))

    def __repr__(self):
        return "Unit({} mod {})".format(self.value, self.modulus.n)


def units(m):
    return m.units()


# @brief all positive divisors of the modulus, ascending
def divisors(m):
    result = [1]
    for p, e in m.factors:
        result = [d * p ** k for d in result for k in range(e + 1)]
    return sorted(result)


@lru_cache(maxsize=4096)
def _ramanujan_by_gcd(n, d):
    # c_n(k) only depends on d = gcd(n, k)
    q = n // d
    qf = factorize(q)
    mu = _moebius_from_factors(qf)
    if mu == 0:
        return 0
    return mu * euler_phi(n) // _phi_from_factors(qf)


# @brief exact ramanujan sum c_n(k) = sum over units g of e_n(kg)
def ramanujan_sum(m, k):
    n = m.n if isinstance(m, Modulus) else m
    d = gcd(n, k % n) if k % n else n
    return _ramanujan_by_gcd(n, d)


# @brief c_n(k) for k = 0..n-1 as a list (index by residue)
@lru_cache(maxsize=64)
def _ramanujan_row(n):
    return tuple(_ramanujan_by_gcd(n, gcd(n, k) if k else n) for k in range(n))


def ramanujan_table(m):
    return _ramanujan_row(m.n if isinstance(m, Modulus) else m)
