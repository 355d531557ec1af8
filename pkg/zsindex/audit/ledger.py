#!/usr/bin/env python
# -*- coding: utf-8 -*-

# ledger - recomputation of the named constants of the lower-bound chain
# available under the ISC license, see LICENSE

import collections

import mpmath

from zsindex.approx import FourierSmoother

LEDGER_DPS = 40
# Inequality entries must clear their claim by more than this
LEDGER_MIN_MARGIN = mpmath.mpf('1e-6')

STAR_ENVELOPE = 0.07926
H_CHOICE = 13020
C1 = 0.001
PHI_THRESHOLD = 1.1e9
N_CHOICE = 10 ** 20

LedgerEntry = collections.namedtuple(
    'LedgerEntry', ['key', 'symbol', 'value', 'claim', 'relation', 'satisfied', 'margin'])


def _entry(key, symbol, value, claim, relation):
    value = mpmath.mpf(value)
    claim = mpmath.mpf(claim)
    if relation == '<':
        margin = claim - value
        satisfied = margin > LEDGER_MIN_MARGIN
    elif relation == '>':
        margin = value - claim
        satisfied = margin > LEDGER_MIN_MARGIN
    else:
        margin = -abs(value - claim)
        satisfied = abs(value - claim) <= mpmath.mpf(10) ** (10 - LEDGER_DPS) * max(1, abs(claim))
    return LedgerEntry(key, symbol, value, claim, relation, bool(satisfied), margin)


class ConstantsLedger:
    def __init__(self, entries):
        self.entries = list(entries)
        self._by_key = {e.key: e for e in self.entries}

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, key):
        return self._by_key[key]

    @property
    def satisfied(self):
        return all(e.satisfied for e in self.entries)

    def to_records(self):
        return [{"name": e.key, "symbol": e.symbol, "value": float(e.value), "claim": float(e.claim),
                 "relation": e.relation, "margin": float(e.margin), "pass": e.satisfied,
                 "value_digits": mpmath.nstr(e.value, 20)} for e in self.entries]


# @brief the starred-sum bound when no relation is present and A is not small
def case1_bound():
    pi2 = mpmath.pi ** 2
    return 2 / pi2 * (pi2 / 8 - 1)


def subcase1_bound():
    pi2 = mpmath.pi ** 2
    return 2 / pi2 * (pi2 / 8) / 5


def subcase2_bound():
    pi2 = mpmath.pi ** 2
    return (1 / (2 * pi2) + 1 / (18 * pi2) + 1 / (162 * pi2) +
            2 / pi2 * (pi2 / 8 - 1 - mpmath.mpf(1) / 9 - mpmath.mpf(1) / 81))


def third_relation_bound():
    pi2 = mpmath.pi ** 2
    return 2 * (1 / pi2) * (mpmath.mpf(1) / 3) * (pi2 / 8)


def c0_value():
    return mpmath.mpf(1) / 8 - (mpmath.mpf(STAR_ENVELOPE) + mpmath.mpf(2) / 12) / 2


def c1_value(H=H_CHOICE):
    return c0_value() - mpmath.mpf('13.02') / H


# @brief smallest t such that phi(n)/sqrt(n) > t makes the lower bound positive
# c1 t >= A + B + C/sqrt(n), with sqrt(n) >= phi(n)/sqrt(n) > t
def threshold_t(H=H_CHOICE, c1=C1):
    H = mpmath.mpf(H)
    c1 = mpmath.mpf(c1)
    A = mpmath.mpf(3) / 2 * (2 * mpmath.log(H) / mpmath.pi) ** 2 * mpmath.sqrt(2) * H
    B = mpmath.mpf('20.02') * mpmath.sqrt(2 * H)
    C = 7 * H
    return ((A + B) + mpmath.sqrt((A + B) ** 2 + 4 * c1 * C)) / (2 * c1)


# @brief explicit lower bound sqrt(n) / (e^gamma ln ln n + 3 / ln ln n) for phi(n)/sqrt(n)
def phi_sqrt_lower_bound(n):
    with mpmath.workdps(LEDGER_DPS):
        n = mpmath.mpf(n)
        lln = mpmath.log(mpmath.log(n))
        return mpmath.sqrt(n) / (mpmath.exp(mpmath.euler) * lln + 3 / lln)


def phi_threshold_check(n):
    if n < 3:
        raise ValueError("The totient bound needs n >= 3, got {}".format(n))
    bound = phi_sqrt_lower_bound(n)
    return bool(bound > PHI_THRESHOLD), float(bound)


def constants_ledger():
    with mpmath.workdps(LEDGER_DPS):
        coefficient_sum = mpmath.mpf(FourierSmoother(H_CHOICE).abs_coefficient_sum())
        return ConstantsLedger([
            _entry('case1', '(2/pi^2)(pi^2/8 - 1)', case1_bound(), STAR_ENVELOPE, '<'),
            _entry('subcase1', '(2/pi^2)(pi^2/8)(1/5)', subcase1_bound(), STAR_ENVELOPE, '<'),
            _entry('subcase2', 'subcase-2 chain', subcase2_bound(), STAR_ENVELOPE, '<'),
            _entry('third_relation', '2(1/pi^2)(1/3)(pi^2/8)', third_relation_bound(), mpmath.mpf(1) / 12, '='),
            _entry('c0', '1/8 - (0.07926 + 2/12)/2', c0_value(), '0.002', '>'),
            _entry('H', 'H', H_CHOICE, 1000, '>'),
            _entry('c1', 'c0 - 13.02/H', c1_value(), C1, '>'),
            _entry('tsum_coefficient', '(sum |f_hat|)^2 vs (2 log H/pi)^2', coefficient_sum ** 2,
                   (2 * mpmath.log(H_CHOICE) / mpmath.pi) ** 2, '<'),
            _entry('threshold', 'minimal phi(n)/sqrt(n)', threshold_t(), PHI_THRESHOLD, '<'),
            _entry('N', 'phi(n)/sqrt(n) bound at n = 10^20', phi_sqrt_lower_bound(N_CHOICE), PHI_THRESHOLD, '>'),
        ])
