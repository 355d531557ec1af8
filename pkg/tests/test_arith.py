import cmath
import math
import pickle

import pytest
from sympy import factorint, totient

from zsindex.arith import (Modulus, NotCoprimeError, Unit, divisors, euler_phi, factorize, inverse_mod,
                           least_residue, moebius, ramanujan_sum, ramanujan_table, units)


def direct_ramanujan(n, k):
    return sum(cmath.exp(2j * math.pi * k * g / n) for g in range(1, n + 1) if math.gcd(g, n) == 1)


def sympy_moebius(n):
    f = factorint(n)
    if any(e > 1 for e in f.values()):
        return 0
    return (-1) ** len(f)


@pytest.mark.parametrize("x, n, expected", [(7, 5, 2), (-3, 7, 4), (10, 5, 0)])
def test_least_residue(x, n, expected):
    assert least_residue(x, n) == expected


def test_least_residue_rejects_zero_modulus():
    with pytest.raises(ValueError):
        least_residue(3, 0)


@pytest.mark.parametrize("n, expected", [(91, [(7, 1), (13, 1)]), (1, []), (720, [(2, 4), (3, 2), (5, 1)])])
def test_factorize(n, expected):
    assert factorize(n) == expected


def test_factorize_reconstructs():
    for n in range(1, 2000):
        f = factorize(n)
        assert [p for p, _ in f] == sorted(p for p, _ in f)
        assert math.prod(p ** e for p, e in f) == n


@pytest.mark.parametrize("n, expected", [(1, 1), (5, 4), (1000, 400)])
def test_euler_phi(n, expected):
    assert euler_phi(n) == expected


def test_euler_phi_matches_sympy():
    for n in range(1, 1000):
        assert euler_phi(n) == totient(n)


def test_euler_phi_multiplicative():
    for a in range(1, 101):
        for b in range(1, 101):
            if math.gcd(a, b) == 1:
                assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)


@pytest.mark.parametrize("n, expected", [(1, 1), (4, 0), (6, 1), (30, -1)])
def test_moebius(n, expected):
    assert moebius(n) == expected


def test_moebius_divisor_sum():
    for n in range(1, 501):
        assert moebius(n) == sympy_moebius(n)
        total = sum(moebius(d) for d in range(1, n + 1) if n % d == 0)
        assert total == (1 if n == 1 else 0)


@pytest.mark.parametrize("a, n, expected", [(3, 7, 5), (1, 9, 1), (2, 9, 5)])
def test_inverse_mod(a, n, expected):
    assert inverse_mod(a, n) == expected


def test_inverse_mod_all_pairs():
    for n in range(2, 301):
        for a in range(1, n):
            if math.gcd(a, n) == 1:
                assert inverse_mod(a, n) * a % n == 1


def test_inverse_mod_not_coprime():
    with pytest.raises(NotCoprimeError):
        inverse_mod(3, 9)


def test_modulus_fields():
    m = Modulus(720)
    assert m.factors == ((2, 4), (3, 2), (5, 1))
    assert m.phi == 192
    assert m.mu == 0
    assert not m.is_coprime_six
    assert Modulus(35).is_coprime_six
    with pytest.raises(AttributeError):
        m.n = 5
    with pytest.raises(ValueError):
        Modulus(1)


def test_modulus_pickles():
    m = Modulus(1001)
    assert pickle.loads(pickle.dumps(m)) == m


@pytest.mark.parametrize("n, expected", [(9, [1, 2, 4, 5, 7, 8]), (2, [1]), (7, [1, 2, 3, 4, 5, 6])])
def test_units(n, expected):
    values = [u.value for u in units(Modulus(n))]
    assert values == expected
    assert len(values) == euler_phi(n)


def test_unit_arithmetic():
    m = Modulus(9)
    u = Unit(2, m)
    assert u.inverse() == 5
    assert u * u.inverse() == 1
    with pytest.raises(NotCoprimeError):
        Unit(3, m)


def test_divisors():
    for n in range(2, 400):
        assert divisors(Modulus(n)) == [d for d in range(1, n + 1) if n % d == 0]


@pytest.mark.parametrize("n, k, expected", [(5, 0, 4), (6, 2, -1), (5, 1, -1)])
def test_ramanujan_sum_examples(n, k, expected):
    assert ramanujan_sum(Modulus(n), k) == expected


def test_ramanujan_sum_matches_exponential_sum():
    for n in range(2, 201):
        m = Modulus(n)
        row = ramanujan_table(m)
        for k in range(n):
            direct = direct_ramanujan(n, k)
            assert abs(direct.imag) < 1e-6
            assert abs(direct.real - round(direct.real)) < 1e-6
            assert ramanujan_sum(m, k) == int(round(direct.real)) == row[k]
            assert abs(row[k]) <= (math.gcd(n, k) if k else n)


def test_ramanujan_sum_negative_arguments():
    m = Modulus(15)
    for k in range(-40, 0):
        assert ramanujan_sum(m, k) == ramanujan_sum(m, k % 15)
    assert ramanujan_sum(m, -15) == euler_phi(15)
