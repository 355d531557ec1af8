import math

import mpmath
import pytest
from sympy import totient

from zsindex.audit import ledger


@pytest.fixture(scope="module")
def entries():
    return ledger.constants_ledger()


def test_ledger_is_satisfied(entries):
    assert entries.satisfied
    assert [e.key for e in entries] == ['case1', 'subcase1', 'subcase2', 'third_relation', 'c0', 'H', 'c1',
                                        'tsum_coefficient', 'threshold', 'N']
    for e in entries:
        if e.relation != '=':
            assert e.margin > ledger.LEDGER_MIN_MARGIN


def test_ledger_entry_needs_margin():
    assert not ledger._entry('x', 'x', '0.0799995', '0.08', '<').satisfied
    assert ledger._entry('x', 'x', '0.079998', '0.08', '<').satisfied
    assert not ledger._entry('x', 'x', '1.0000005', 1, '>').satisfied
    assert ledger._entry('x', 'x', mpmath.mpf(1) / 3, mpmath.mpf(1) / 3, '=').satisfied


def test_ledger_values(entries):
    assert float(entries['case1'].value) == pytest.approx(0.25 - 2 / math.pi ** 2, abs=1e-15)
    assert float(entries['subcase1'].value) == pytest.approx(0.05, abs=1e-15)
    assert float(entries['subcase2'].value) == pytest.approx(0.0792551, abs=1e-7)
    assert entries['subcase2'].value < ledger.STAR_ENVELOPE
    assert 0.002 < entries['c0'].value < 0.0021
    assert entries['c1'].value > ledger.C1
    assert entries['threshold'].value < ledger.PHI_THRESHOLD
    assert entries['N'].value > ledger.PHI_THRESHOLD


def test_third_relation_is_exactly_one_twelfth():
    with mpmath.workdps(ledger.LEDGER_DPS):
        assert abs(ledger.third_relation_bound() - mpmath.mpf(1) / 12) < mpmath.mpf(10) ** -35


def test_threshold_grows_with_H():
    assert ledger.threshold_t(1000) < ledger.threshold_t(ledger.H_CHOICE) < ledger.threshold_t(20000)
    assert 1.0e9 < ledger.threshold_t() < 1.02e9


def test_ledger_records(entries):
    records = entries.to_records()
    assert len(records) == len(entries)
    assert all(r['pass'] for r in records)
    assert {"name", "value", "claim", "relation", "margin", "pass", "value_digits"} <= set(records[0])


def test_phi_threshold_check():
    ok, bound = ledger.phi_threshold_check(10 ** 20 + 1)
    assert ok
    assert bound > ledger.PHI_THRESHOLD
    ok, bound = ledger.phi_threshold_check(10 ** 16)
    assert not ok
    assert 1e7 < bound < 2e7
    with pytest.raises(ValueError):
        ledger.phi_threshold_check(2)


def test_phi_sqrt_lower_bound_holds():
    for n in range(3, 10001):
        assert ledger.phi_sqrt_lower_bound(n) <= int(totient(n)) / math.sqrt(n)


def test_phi_sqrt_lower_bound_monotone():
    previous = 0
    for exponent in range(2, 25):
        bound = ledger.phi_sqrt_lower_bound(10 ** exponent)
        assert bound > previous
        previous = bound
