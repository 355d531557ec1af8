#!/usr/bin/env python
# -*- coding: utf-8 -*-

# starsum - audit of the starred sum against its two envelopes
# available under the ISC license, see LICENSE

from math import gcd

from zsindex.approx import FourierSmoother
from zsindex.arith import Modulus, inverse_mod
from zsindex.audit.abstract import AbstractAuditHandler, AuditInputError, AuditReport
from zsindex.audit.ledger import STAR_ENVELOPE
from zsindex.audit.sums import KStarFinder, star_sum

THIRD_ENVELOPE = 1.0 / 12.0


# @brief which relations A satisfies modulo n
# @return 'unit' (A +- 1 = 0), 'three' (3A +- 1 or A +- 3 = 0) or 'plain'
def relation_class(A, n):
    if (A + 1) % n == 0 or (A - 1) % n == 0:
        return 'unit'
    if any(x % n == 0 for x in (3 * A + 1, 3 * A - 1, A + 3, A - 3)):
        return 'three'
    return 'plain'


def audit_star_sum(A, m, s):
    if not m.is_coprime_six:
        raise AuditInputError("Starred-sum envelopes need gcd(n, 6) = 1, got n={}".format(m.n))
    if gcd(A, m.n) != 1:
        raise AuditInputError("A={} is not coprime to n={}".format(A, m.n))
    relation = relation_class(A, m.n)
    if relation == 'unit':
        raise AuditInputError("A={} satisfies A +- 1 = 0 mod {}; no envelope applies".format(A, m.n))
    envelope = STAR_ENVELOPE if relation == 'plain' else THIRD_ENVELOPE
    value = star_sum(A, m, s)
    notes = "relation={} value={:.9g}{:+.3g}i".format(relation, value.real, value.imag)
    if not KStarFinder(A, m, s.H).large:
        notes += "; vacuous: no divisor d of n with d^2 > 2H^2 n"
    return AuditReport("starsum", {"n": m.n, "A": A, "H": s.H}, abs(value), envelope * m.phi, notes=notes)


class AuditHandler(AbstractAuditHandler):
    @staticmethod
    def get_audit_name():
        return "starsum"

    def parse_instance(self):
        return self.require('A'), Modulus(self.require('n')), self.require('H')

    def random_instance(self, rng):
        while True:
            m = self.random_modulus(rng, 5, self.config.get('n_max') or 10000)
            if rng.random() < 0.5:
                # relation instances are rare under uniform A; draw them on purpose
                inv3 = inverse_mod(3, m.n)
                A = rng.choice([3, m.n - 3, inv3, m.n - inv3]) % m.n
            else:
                A = self.random_unit(rng, m)
            if relation_class(A, m.n) != 'unit':
                break
        H = rng.randint((self.config.get('H_min') or 1000) + 1, self.config.get('H_max') or 3000)
        return A, m, H

    def audit(self, instance):
        A, m, H = instance
        return audit_star_sum(A, m, FourierSmoother(H))
