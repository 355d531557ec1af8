#!/usr/bin/env python
# -*- coding: utf-8 -*-

# abstract - audit reports and the base class for audit handlers
# available under the ISC license, see LICENSE

import random
from math import gcd

from zsindex.arith import Modulus
from zsindex.tools import log

# Relative slack on the right-hand side before an inequality counts as violated
AUDIT_EPSILON = 1e-9


class AuditInputError(ValueError):
    pass


class AuditReport:
    # @brief one checked inequality lhs <= rhs
    # @param name inequality identifier
    # @param inputs dict of the instance parameters
    # @param valid False forces a failed report regardless of the margin
    def __init__(self, name, inputs, lhs, rhs, notes="", valid=True):
        self.name = name
        self.inputs = inputs
        self.lhs = float(lhs)
        self.rhs = float(rhs)
        self.notes = notes
        self.valid = valid

    @property
    def margin(self):
        return self.rhs - self.lhs

    @property
    def passed(self):
        return self.valid and self.margin >= -AUDIT_EPSILON * max(1.0, abs(self.rhs))

    def to_record(self):
        return {"name": self.name, "inputs": self.inputs, "lhs": self.lhs, "rhs": self.rhs,
                "margin": self.margin, "pass": self.passed, "notes": self.notes}

    def __repr__(self):
        return "AuditReport({})".format(self.to_record())


class AbstractAuditHandler:
    def __init__(self, config):
        self.config = config

    @staticmethod
    def get_audit_name():
        raise NotImplementedError

    # @brief the single instance described by the configuration
    def parse_instance(self):
        raise NotImplementedError

    # @brief draw one admissible instance
    def random_instance(self, rng):
        raise NotImplementedError

    # @brief check one instance
    # @return an AuditReport or a list of them
    def audit(self, instance):
        raise NotImplementedError

    def instances(self):
        count = self.config.get('random')
        if count:
            # batches depend on the seed only
            rng = random.Random(self.config.get('seed') or 0)
            for _ in range(int(count)):
                instance = self.random_instance(rng)
                log("{}: drew {}".format(self.get_audit_name(), instance))
                yield instance
        else:
            yield self.parse_instance()

    # @brief audit one instance, always as a list of reports
    def reports(self, instance):
        result = self.audit(instance)
        if isinstance(result, AuditReport):
            return [result]
        return list(result)

    # @brief fetch a required integer parameter from the configuration
    def require(self, name):
        value = self.config.get(name)
        if value is None:
            raise AuditInputError("Audit '{}' requires --{}".format(self.get_audit_name(), name))
        return int(value)

    @staticmethod
    def random_modulus(rng, n_min, n_max, coprime_six=True):
        candidates = [n for n in range(max(n_min, 5), n_max + 1) if not coprime_six or gcd(n, 6) == 1]
        if not candidates:
            raise AuditInputError("No admissible modulus in [{}, {}]".format(n_min, n_max))
        return Modulus(rng.choice(candidates))

    @staticmethod
    def random_unit(rng, m):
        while True:
            g = rng.randrange(1, m.n)
            if gcd(g, m.n) == 1:
                return g
