#!/usr/bin/env python
# -*- coding: utf-8 -*-

# relations - elimination of a and b from three linear congruences on (1, a), (1, b), (a, b)
# available under the ISC license, see LICENSE

import itertools

from sympy import Matrix

from zsindex.audit.abstract import AbstractAuditHandler, AuditReport

# form -> (coefficient of x, coefficient of y) in "cx*x + cy*y = 0 mod n"
FORMS = {
    'x+3y': (1, 3),
    'x-3y': (1, -3),
    '3x+y': (3, 1),
    '3x-y': (3, -1),
}
PAIRS = (('1', 'a'), ('1', 'b'), ('a', 'b'))
DEGENERATE_FORMS = ('x-3y', '3x-y')


def _term(coefficient, variable):
    if variable == '1':
        return str(abs(coefficient))
    return variable if abs(coefficient) == 1 else "{}{}".format(abs(coefficient), variable)


class RelationCombo:
    __slots__ = ('forms',)

    # @param forms one form name per pair (1,a), (1,b), (a,b)
    def __init__(self, forms):
        forms = tuple(forms)
        if len(forms) != 3 or any(f not in FORMS for f in forms):
            raise ValueError("A relation combo needs three of {}, got {}".format(sorted(FORMS), forms))
        self.forms = forms

    @staticmethod
    def all():
        return [RelationCombo(c) for c in itertools.product(sorted(FORMS), repeat=3)]

    # @brief integer rows over the unknowns (a, b, 1)
    def rows(self):
        result = []
        for (x, y), form in zip(PAIRS, self.forms):
            cx, cy = FORMS[form]
            row = {'a': 0, 'b': 0, '1': 0}
            row[x] += cx
            row[y] += cy
            result.append([row['a'], row['b'], row['1']])
        return result

    def is_degenerate(self):
        return any(f in DEGENERATE_FORMS for f in self.forms)

    # @brief the congruences in the variables, e.g. "3+a=0, 1+3b=0, 3a+b=0"
    def describe(self):
        parts = []
        for (x, y), form in zip(PAIRS, self.forms):
            cx, cy = FORMS[form]
            parts.append("{}{}{}=0".format(_term(cx, x), '+' if cy > 0 else '-', _term(cy, y)))
        return ", ".join(parts)

    def __eq__(self, other):
        return isinstance(other, RelationCombo) and other.forms == self.forms

    def __hash__(self):
        return hash(self.forms)

    def __repr__(self):
        return "RelationCombo({})".format(self.describe())


# @brief eliminate a and b; n must divide D whenever the three congruences hold modulo n
# @return (D, feasible)
def relation_eliminator(c):
    D = abs(int(Matrix(c.rows()).det()))
    return D, not c.is_degenerate()


# @brief the part of D left after removing the factors 2 and 3
def coprime_six_part(D):
    if D == 0:
        return 0
    for p in (2, 3):
        while D % p == 0:
            D //= p
    return D


# @brief solve the first two congruences modulo q and check the third
# @return (a, b) residues modulo q, or None when the system is inconsistent
def back_substitute(c, q):
    if q == 1:
        return 0, 0
    rows = c.rows()
    # rows 0 and 1 read cy*a + cx = 0 and cy*b + cx = 0
    a = (-rows[0][2] * pow(rows[0][0], -1, q)) % q
    b = (-rows[1][2] * pow(rows[1][1], -1, q)) % q
    if (rows[2][0] * a + rows[2][1] * b + rows[2][2]) % q != 0:
        return None
    return a, b


def audit_relation_combo(c):
    D, feasible = relation_eliminator(c)
    inputs = {"combo": list(c.forms), "relations": c.describe(), "D": D, "feasible": feasible}
    if not feasible:
        return AuditReport("relations", inputs, 0, 0,
                           notes="excluded: forces the family (1)(3)(n-2)(n-2), which has index 1")
    q = coprime_six_part(D)
    inputs["D_coprime_six"] = q
    solution = back_substitute(c, q) if q else None
    notes = "n | {}".format(D)
    if q == 1:
        notes += "; back-substitution vacuous: D has no prime factor above 3"
    elif solution is not None:
        notes += "; mod {}: a={} b={}".format(q, solution[0], solution[1])
    return AuditReport("relations", inputs, 1, D, notes=notes, valid=D != 0 and solution is not None)


class AuditHandler(AbstractAuditHandler):
    @staticmethod
    def get_audit_name():
        return "relations"

    def instances(self):
        return RelationCombo.all()

    def audit(self, instance):
        return audit_relation_combo(instance)
