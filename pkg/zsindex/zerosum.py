#!/usr/bin/env python
# -*- coding: utf-8 -*-

# zerosum - sequences over Z/n, their index and verification of the index conjecture
# available under the ISC license, see LICENSE

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from functools import lru_cache
from math import gcd

from zsindex import tools
from zsindex.arith import Modulus, inverse_mod
from zsindex.tools import log

G_ORDERS = ('ascending', 'symmetric', 'full')


class InvalidSequenceError(ValueError):
    pass


class NotZeroSumError(ValueError):
    pass


class ZSequence:
    # @brief a sequence (a_1)...(a_k) over Z/n, stored as a sorted tuple
    # @param modulus Modulus or integer n
    # @param entries integers in [1, n-1]
    def __init__(self, modulus, entries):
        if not isinstance(modulus, Modulus):
            modulus = Modulus(modulus)
        entries = tuple(sorted(int(e) for e in entries))
        if len(entries) < 2:
            raise InvalidSequenceError("Sequence needs at least 2 entries, got {}".format(len(entries)))
        for e in entries:
            if not 1 <= e <= modulus.n - 1:
                raise InvalidSequenceError("Entry {} outside [1, {}]".format(e, modulus.n - 1))
        self.modulus = modulus
        self.entries = entries

    @property
    def n(self):
        return self.modulus.n

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, ZSequence) and other.n == self.n and other.entries == self.entries

    def __hash__(self):
        return hash((self.n, self.entries))

    def __repr__(self):
        return "{} mod {}".format(''.join("({})".format(e) for e in self.entries), self.n)


# @brief multiply every entry by the unit g
def scale(s, g):
    g = int(g)
    if gcd(g, s.n) != 1:
        raise InvalidSequenceError("Scaling factor {} is not a unit modulo {}".format(g, s.n))
    return ZSequence(s.modulus, [(g * e) % s.n for e in s.entries])


# @brief sum of the least residues of g*a_j
def unit_sum(s, g):
    n = s.n
    return sum((g * e) % n for e in s.entries)


def is_zero_sum(s):
    return sum(s.entries) % s.n == 0


@lru_cache(maxsize=16)
def _proper_subsets(k):
    return tuple(c for size in range(1, k) for c in itertools.combinations(range(k), size))


def _no_proper_zero_sum(entries, n):
    for subset in _proper_subsets(len(entries)):
        if sum(entries[i] for i in subset) % n == 0:
            return False
    return True


def is_minimal(s):
    if not is_zero_sum(s):
        raise NotZeroSumError("{} is not a zero-sum sequence".format(s))
    return _no_proper_zero_sum(s.entries, s.n)


# @brief index of a zero-sum sequence and the unit attaining it
# @return (index, g) with g the smallest unit attaining the minimum
def index_with_witness(s):
    if not is_zero_sum(s):
        raise NotZeroSumError("Index of {} is undefined: not a zero-sum sequence".format(s))
    best, witness = None, None
    for g in s.modulus.unit_values():
        total = unit_sum(s, g)
        if best is None or total < best:
            best, witness = total, g
            if best == s.n:
                break
    return best // s.n, witness


def index(s):
    return index_with_witness(s)[0]


def _index_one_depth(entries, n, units, symmetric):
    # sum over -g equals k*n minus the sum over g
    top = (len(entries) - 1) * n
    for depth, g in enumerate(units, 1):
        total = 0
        for e in entries:
            total += (g * e) % n
        if total == n or (symmetric and total == top):
            return depth
    return None


def _scan_units(units, n, symmetric):
    if symmetric:
        return [g for g in units if 2 * g <= n]
    return units


# @brief number of units tried before an index-one witness was found (None if there is none)
def index_one_depth(s, g_order='symmetric'):
    units = s.modulus.unit_values()
    return _index_one_depth(s.entries, s.n, _scan_units(units, s.n, g_order == 'symmetric'),
                            g_order == 'symmetric')


# @brief early-exit test for ind(s) == 1
# @param g_order 'ascending' (first g with sum n), 'symmetric' (g and -g together) or 'full'
def has_index_one(s, g_order='ascending'):
    if g_order not in G_ORDERS:
        raise ValueError("Unknown unit order: {}".format(g_order))
    if g_order == 'full':
        return index(s) == 1
    return index_one_depth(s, g_order) is not None


# @brief whether exactly two of the (g a_j)_n lie strictly between 0 and n/2
def exactly_two_in_half(s, g):
    if len(s) != 4:
        raise InvalidSequenceError("Half-interval structure is defined for length 4, got {}".format(len(s)))
    return _count_in_half(s.entries, s.n, int(g)) == 2


def _count_in_half(entries, n, g):
    return sum(1 for e in entries if 0 < 2 * ((g * e) % n) < n)


# @brief multiply by the inverse of a unit entry so that 1 occurs (lexicographically least choice)
def normalize(s):
    candidates = [scale(s, inverse_mod(e, s.n)) for e in set(s.entries) if gcd(e, s.n) == 1]
    if not candidates:
        raise InvalidSequenceError("{} has no unit entry to normalize by".format(s))
    return min(candidates, key=lambda c: c.entries)


def _quadruples(n, coprime_only, normalized):
    allowed = [x for x in range(1, n) if not coprime_only or gcd(x, n) == 1]
    is_allowed = [False] * n
    for x in allowed:
        is_allowed[x] = True
    if normalized:
        for i, a in enumerate(allowed):
            for b in allowed[i:]:
                c = (-1 - a - b) % n
                if c < b or not is_allowed[c]:
                    continue
                entries = (1, a, b, c)
                if _no_proper_zero_sum(entries, n):
                    yield entries
    else:
        for i, a in enumerate(allowed):
            for j in range(i, len(allowed)):
                b = allowed[j]
                for c in allowed[j:]:
                    d = (-a - b - c) % n
                    if d < c or not is_allowed[d]:
                        continue
                    entries = (a, b, c, d)
                    if _no_proper_zero_sum(entries, n):
                        yield entries


# @brief stream the minimal zero-sum sequences of length 4, one per multiset
# @param coprime_only restrict entries to units
# @param normalized only sequences containing the entry 1
def enumerate_minimal_quadruples(m, coprime_only=True, normalized=False):
    if m.n < 5:
        raise ValueError("Enumeration needs n >= 5, got {}".format(m.n))
    for entries in _quadruples(m.n, coprime_only, normalized):
        yield ZSequence(m, entries)


# @brief index-2 structure check: no unit puts 0 or 4 values into (0, n/2)
# @return 'pass', 'fail' or 'vacuous' (no index-2 sequence exists to test)
def check_half_structure(m, coprime_only=True):
    units = m.unit_values()
    tested = 0
    for entries in _quadruples(m.n, coprime_only, False):
        if _index_one_depth(entries, m.n, units, False) is not None:
            continue
        tested += 1
        for g in units:
            if _count_in_half(entries, m.n, g) in (0, 4):
                return 'fail'
    return 'pass' if tested else 'vacuous'


class VerifyReport:
    def __init__(self, n, sequences_checked, witness=None, witness_index=None, elapsed=0.0,
                 g_attempts=None):
        self.n = n
        self.sequences_checked = sequences_checked
        self.witness = witness
        self.witness_index = witness_index
        self.elapsed = elapsed
        self.g_attempts = g_attempts if g_attempts is not None else {}

    @property
    def all_index_one(self):
        return self.witness is None

    def to_record(self):
        witness = None
        if self.witness is not None:
            witness = {"seq": list(self.witness.entries), "index": self.witness_index}
        return {"n": self.n, "checked": self.sequences_checked, "ok": self.all_index_one, "witness": witness}

    # @brief status field of the checkpoint line
    def status(self):
        if self.witness is None:
            return "ok"
        return "fail:{}:{}".format(';'.join(str(e) for e in self.witness.entries), self.witness_index)

    @staticmethod
    def from_checkpoint(n, status, sequences_checked):
        if status == "ok":
            return VerifyReport(n, sequences_checked)
        try:
            tag, seq, ind = status.split(':')
            if tag != "fail":
                raise ValueError(tag)
            witness = ZSequence(n, [int(x) for x in seq.split(';')])
            return VerifyReport(n, sequences_checked, witness, int(ind))
        except ValueError:
            raise tools.CheckpointError("Unknown checkpoint status for n={}: {}".format(n, status))

    def __eq__(self, other):
        return isinstance(other, VerifyReport) and self.to_record() == other.to_record()

    def __hash__(self):
        return hash((self.n, self.sequences_checked, self.status()))

    def __repr__(self):
        return "VerifyReport({})".format(self.to_record())


def _summarize_depths(depths):
    if not depths:
        return {"max": 0, "mean": 0.0, "counts": {}}
    total = sum(depth * count for depth, count in depths.items())
    return {"max": max(depths), "mean": total / float(sum(depths.values())),
            "counts": dict(sorted(depths.items()))}


# @brief check that every minimal zero-sum quadruple over m has index 1
# @param exploratory allow gcd(n, 6) != 1 and non-unit entries
def verify_conjecture(m, exploratory=False):
    if not exploratory and not m.is_coprime_six:
        raise ValueError("Conjecture mode needs gcd(n, 6) = 1, got n={}".format(m.n))
    started = time.time()
    n = m.n
    scan = _scan_units(m.unit_values(), n, True)
    depths = Counter()
    checked = 0
    witness, witness_index = None, None
    for entries in _quadruples(n, not exploratory, not exploratory):
        checked += 1
        depth = _index_one_depth(entries, n, scan, True)
        if depth is not None:
            depths[depth] += 1
        elif witness is None:
            witness = ZSequence(m, entries)
            witness_index = index(witness)
    return VerifyReport(n, checked, witness, witness_index, time.time() - started, _summarize_depths(depths))


def _verify_worker(n, exploratory):
    return verify_conjecture(Modulus(n), exploratory)


def verify_targets(n_min, n_max, exploratory=False):
    return [n for n in range(n_min, n_max + 1) if exploratory or gcd(n, 6) == 1]


# @brief verify a range of moduli, yielding reports in ascending n
# @param workers number of worker processes (results do not depend on it)
# @param checkpoint optional path; completed n are appended and skipped when resuming
def verify_range(n_min, n_max, workers=1, checkpoint=None, exploratory=False):
    if not 5 <= n_min <= n_max:
        raise ValueError("Verification range needs 5 <= n_min <= n_max, got [{}, {}]".format(n_min, n_max))
    targets = verify_targets(n_min, n_max, exploratory)
    done = dict()
    if checkpoint:
        tools.ensure_checkpoint_writable(checkpoint)
        done = tools.read_checkpoint(checkpoint)
    buffered = {n: VerifyReport.from_checkpoint(n, *done[n]) for n in targets if n in done}
    pending = [n for n in targets if n not in done]
    if buffered:
        log("Resuming from {}: {} of {} moduli already verified".format(checkpoint, len(buffered), len(targets)))

    def _complete(report):
        if checkpoint:
            tools.append_checkpoint(checkpoint, report.n, report.status(), report.sequences_checked)
        log("n={} checked {} sequences in {:.2f}s{}".format(
            report.n, report.sequences_checked, report.elapsed,
            "" if report.all_index_one else " (witness {})".format(report.witness)))
        buffered[report.n] = report

    position = [0]

    def _flush():
        while position[0] < len(targets) and targets[position[0]] in buffered:
            yield buffered.pop(targets[position[0]])
            position[0] += 1

    if workers <= 1 or len(pending) <= 1:
        for n in pending:
            _complete(_verify_worker(n, exploratory))
            for report in _flush():
                yield report
    else:
        executor = ProcessPoolExecutor(max_workers=workers)
        try:
            futures = [executor.submit(_verify_worker, n, exploratory) for n in pending]
            for future in as_completed(futures):
                _complete(future.result())
                for report in _flush():
                    yield report
        finally:
            executor.shutdown(wait=True, cancel_futures=True)
    for report in _flush():
        yield report
