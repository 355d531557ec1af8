#!/usr/bin/env python
# -*- coding: utf-8 -*-

# s0s1 - audit of |S0 - S1| against its explicit envelope
# available under the ISC license, see LICENSE

import math

from zsindex.approx import FourierSmoother
from zsindex.arith import Modulus, NotCoprimeError
from zsindex.audit.abstract import AbstractAuditHandler, AuditInputError, AuditReport
from zsindex.audit.sums import compute_S0, compute_S1_direct

# Smallest H for which the envelope is claimed
MIN_H = 1000


def s0_s1_envelope(m, H):
    return (13.02 / H) * m.phi + 20.02 * math.sqrt(2.0 * H * m.n) + 7.0 * H


def audit_s0_s1(m, a, b, s):
    if s.H <= MIN_H:
        raise AuditInputError("The S0/S1 envelope needs H > {}, got H={}".format(MIN_H, s.H))
    if math.gcd(a * b, m.n) != 1:
        raise NotCoprimeError("a={} and b={} must be coprime to n={}".format(a, b, m.n))
    s0 = compute_S0(m, a, b)
    s1 = compute_S1_direct(m, a, b, s)
    return AuditReport("s0s1", {"n": m.n, "a": a, "b": b, "H": s.H},
                       abs(float(s0) - s1), s0_s1_envelope(m, s.H),
                       notes="S0={} S1={:.9f}".format(s0, s1))


class AuditHandler(AbstractAuditHandler):
    @staticmethod
    def get_audit_name():
        return "s0s1"

    def parse_instance(self):
        return Modulus(self.require('n')), self.require('a'), self.require('b'), self.require('H')

    def random_instance(self, rng):
        m = self.random_modulus(rng, 5, self.config.get('n_max') or 5000, coprime_six=False)
        H = rng.randint((self.config.get('H_min') or MIN_H) + 1, self.config.get('H_max') or 4000)
        return m, self.random_unit(rng, m), self.random_unit(rng, m), H

    def audit(self, instance):
        m, a, b, H = instance
        return audit_s0_s1(m, a, b, FourierSmoother(H))
