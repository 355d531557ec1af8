#!/usr/bin/env python
# -*- coding: utf-8 -*-

# theorem - hypotheses and explicit lower bound for the triple count S0
# available under the ISC license, see LICENSE

import math
from math import gcd

from zsindex.approx import FourierSmoother
from zsindex.arith import Modulus, NotCoprimeError, inverse_mod
from zsindex.audit import ledger
from zsindex.audit.abstract import AbstractAuditHandler, AuditInputError, AuditReport
from zsindex.audit.s0s1 import MIN_H
from zsindex.audit.starsum import audit_star_sum
from zsindex.audit.sums import compute_S0, compute_S1_spectral, star_sum, t_sum_bound


class HypothesisError(ValueError):
    pass


def _pairs(a, b):
    return ((1, a), (1, b), (a, b))


# @brief names of the relations x+-y, x+-3y, 3x+-y that hold for (x, y) modulo n
def pair_relations(x, y, n):
    forms = {
        'x+y': x + y, 'x-y': x - y,
        'x+3y': x + 3 * y, 'x-3y': x - 3 * y,
        '3x+y': 3 * x + y, '3x-y': 3 * x - y,
    }
    return sorted(name for name, value in forms.items() if value % n == 0)


def theorem_hypotheses(m, a, b):
    n = m.n
    if gcd(a * b, n) != 1:
        raise NotCoprimeError("a={} and b={} must be coprime to n={}".format(a, b, n))
    relations = [pair_relations(x, y, n) for x, y in _pairs(a, b)]
    if any(r in ('x+y', 'x-y') for rel in relations for r in rel):
        return False
    return any(not rel for rel in relations)


def lower_bound(m, H, c0=None):
    if c0 is None:
        c0 = float(ledger.c0_value())
    return ((c0 - 13.02 / H) * m.phi
            - 1.5 * (2.0 * math.log(H) / math.pi) ** 2 * math.sqrt(2.0 * H * H * m.n)
            - 20.02 * math.sqrt(2.0 * H * m.n) - 7.0 * H)


def theorem_lower_bound(m, a, b, s):
    if not theorem_hypotheses(m, a, b):
        raise HypothesisError("(1, {}, {}) mod {} violates the relation hypotheses".format(a, b, m.n))
    if s.H <= MIN_H:
        raise AuditInputError("The lower bound needs H > {}, got H={}".format(MIN_H, s.H))
    bound = lower_bound(m, s.H)
    s0 = compute_S0(m, a, b)
    notes = ["S0/phi(n)={:.6f}".format(float(s0) / m.phi)]
    if bound < 0:
        notes.append("vacuous at this n (bound < 0; needs phi(n)/sqrt(n) > {:.2g}, have {:.4g})".format(
            ledger.PHI_THRESHOLD, m.phi / math.sqrt(m.n)))
    return AuditReport("theorem", {"n": m.n, "a": a, "b": b, "H": s.H}, bound, s0, notes="; ".join(notes))


# @brief the starred sums for A in {b, a, a/b} and S1 >= phi(n)/8 - (sum |S_A*| + 3 T)/2
# @return the starred-sum envelope reports (gcd(n, 6) = 1 only) followed by the S1 floor report
def decomposition_reports(m, a, b, s):
    n = m.n
    if gcd(a * b, n) != 1:
        raise NotCoprimeError("a={} and b={} must be coprime to n={}".format(a, b, n))
    reports = []
    star_total = 0.0
    for A in (b % n, a % n, a * inverse_mod(b, n) % n):
        if m.is_coprime_six:
            report = audit_star_sum(A, m, s)
            reports.append(report)
            star_total += report.lhs
        else:
            star_total += abs(star_sum(A, m, s))
    t_bound = t_sum_bound(s, m).exact
    floor = m.phi / 8.0 - 0.5 * (star_total + 3.0 * t_bound)
    s1 = compute_S1_spectral(m, a, b, s)
    reports.append(AuditReport("s1-decomposition", {"n": n, "a": a, "b": b, "H": s.H}, floor, s1,
                               notes="sum|S*|={:.9g} T<={:.9g} S1={:.9f}".format(star_total, t_bound, s1)))
    return reports


class AuditHandler(AbstractAuditHandler):
    @staticmethod
    def get_audit_name():
        return "theorem"

    def parse_instance(self):
        return Modulus(self.require('n')), self.require('a'), self.require('b'), self.require('H')

    def random_instance(self, rng):
        while True:
            m = self.random_modulus(rng, 5, self.config.get('n_max') or 5000)
            a, b = self.random_unit(rng, m), self.random_unit(rng, m)
            if theorem_hypotheses(m, a, b):
                break
        H = rng.randint((self.config.get('H_min') or MIN_H) + 1, self.config.get('H_max') or 4000)
        return m, a, b, H

    def audit(self, instance):
        m, a, b, H = instance
        s = FourierSmoother(H)
        return [theorem_lower_bound(m, a, b, s)] + decomposition_reports(m, a, b, s)
