#!/usr/bin/env python
# -*- coding: utf-8 -*-

# kstar - audit that at most one shift in the gcd window shares a large divisor with n
# available under the ISC license, see LICENSE

from math import gcd

from zsindex.arith import Modulus
from zsindex.audit.abstract import AbstractAuditHandler, AuditReport
from zsindex.audit.sums import KStarFinder, gcd_window_qualifiers, gcd_window_qualifiers_x


# @brief scan [-G, G] for the y (and, for coprime A, the x) forms of the window condition
# @param x fixed multiplier of A in the y-scan; the x-scan uses y = x
def audit_kstar_uniqueness(A, m, G, x):
    ys = gcd_window_qualifiers(x, A, m.n, G)
    counts = [len(ys)]
    notes = "y-scan {}".format(ys)
    if gcd(A, m.n) == 1:
        xs = gcd_window_qualifiers_x(x, A, m.n, G)
        counts.append(len(xs))
        notes += " x-scan {}".format(xs)
    return AuditReport("kstar", {"n": m.n, "A": A, "G": G, "x": x}, max(counts), 1, notes=notes)


class AuditHandler(AbstractAuditHandler):
    @staticmethod
    def get_audit_name():
        return "kstar"

    def parse_instance(self):
        H = self.require('H')
        k = self.config.get('k')
        return self.require('A'), Modulus(self.require('n')), H * H, 1 if k is None else int(k)

    def random_instance(self, rng):
        m = self.random_modulus(rng, 5, self.config.get('n_max') or 10000, coprime_six=False)
        G = rng.randint(1, 100)
        return self.random_unit(rng, m), m, G, rng.randint(-G, G)

    def audit(self, instance):
        A, m, G, x = instance
        report = audit_kstar_uniqueness(A, m, G, x)
        H = int(round(G ** 0.5))
        if H * H == G and abs(x) <= H and gcd(A, m.n) == 1 and report.passed:
            found = KStarFinder(A, m, H).find(x)
            report.notes += " k*={}".format(found)
            report.inputs["kstar"] = found
        return report
