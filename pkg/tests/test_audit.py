import cmath
import math
import random
from fractions import Fraction

import pytest

from zsindex.approx import FourierSmoother
from zsindex.arith import Modulus, NotCoprimeError
from zsindex.audit import audit_handler
from zsindex.audit.abstract import AuditInputError, AuditReport
from zsindex.audit.kstar import audit_kstar_uniqueness
from zsindex.audit.relations import (RelationCombo, audit_relation_combo, back_substitute, coprime_six_part,
                                     relation_eliminator)
from zsindex.audit.s0s1 import audit_s0_s1
from zsindex.audit.starsum import audit_star_sum, relation_class
from zsindex.audit.sums import (compute_S0, compute_S1_direct, compute_S1_spectral, count_triple_in_I,
                                gcd_window_qualifiers, gcd_window_qualifiers_x, kstar, star_sum, t_sum_bound)
from zsindex.audit.theorem import (HypothesisError, decomposition_reports, pair_relations, theorem_hypotheses,
                                   theorem_lower_bound)


def unit_values(n):
    return [g for g in range(1, n) if math.gcd(g, n) == 1]


def direct_star_sum(A, n, H):
    # every pair of odd (k, k') in the box whose shift shares a large divisor with n
    s = FourierSmoother(H)
    total = 0j
    odd = [k for k in range(-H, H + 1) if k % 2]
    for k in odd:
        for k2 in odd:
            if math.gcd(A * k + k2, n) ** 2 > 2 * H * H * n:
                c = sum(cmath.exp(2j * math.pi * (A * k + k2) * g / n) for g in unit_values(n))
                total += s.f_hat(k) * s.f_hat(k2) * round(c.real)
    return total


def test_report_margin_and_tolerance():
    assert AuditReport("x", {}, 1.0, 2.0).passed
    assert AuditReport("x", {}, 2.0 + 1e-10, 2.0).passed
    assert not AuditReport("x", {}, 2.1, 2.0).passed
    assert not AuditReport("x", {}, 1.0, 2.0, valid=False).passed
    record = AuditReport("x", {"n": 5}, 1.0, 3.0).to_record()
    assert record["margin"] == 2.0
    assert set(record) >= {"name", "inputs", "lhs", "rhs", "margin", "pass"}


@pytest.mark.parametrize("n, a, b, expected", [(7, 2, 3, 1), (5, 1, 1, 2)])
def test_compute_S0_examples(n, a, b, expected):
    assert compute_S0(Modulus(n), a, b) == expected


def test_compute_S0_half_boundary():
    # the only unit of Z/2 sits at 1/2 where the indicator is 1/2
    assert compute_S0(Modulus(2), 1, 1) == Fraction(1, 8)


def test_compute_S0_needs_units():
    with pytest.raises(NotCoprimeError):
        compute_S0(Modulus(9), 3, 2)


def test_count_triple_in_I():
    assert count_triple_in_I(Modulus(7), 2, 3) == 1
    for n in (5, 7, 25, 35, 101):
        assert count_triple_in_I(Modulus(n), 1, 1) == Modulus(n).phi // 2
    expected = sum(1 for g in unit_values(25) if 2 * g < 25 and 2 * (7 * g % 25) < 25 and 2 * (11 * g % 25) < 25)
    assert count_triple_in_I(Modulus(25), 7, 11) == expected
    with pytest.raises(AuditInputError):
        count_triple_in_I(Modulus(8), 1, 3)


def test_S0_is_the_triple_count_for_odd_n():
    for n in range(3, 60, 2):
        m = Modulus(n)
        units = unit_values(n)
        for a in units[:6]:
            for b in units[-6:]:
                s0 = compute_S0(m, a, b)
                assert s0.denominator == 1
                assert s0 == count_triple_in_I(m, a, b)


@pytest.mark.parametrize("n, a, b, H", [(7, 2, 3, 101), (11, 3, 5, 101), (7, 2, 3, 1), (97, 5, 11, 51)])
def test_S1_direct_matches_spectral(n, a, b, H):
    m, s = Modulus(n), FourierSmoother(H)
    direct = compute_S1_direct(m, a, b, s)
    assert compute_S1_spectral(m, a, b, s) == pytest.approx(direct, abs=1e-6 * max(1, m.phi))


def test_S1_dual_path_random_moduli():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(3, 500)
        units = unit_values(n)
        a, b = rng.choice(units), rng.choice(units)
        m = Modulus(n)
        for H in (51, 101):
            s = FourierSmoother(H)
            assert compute_S1_spectral(m, a, b, s) == pytest.approx(compute_S1_direct(m, a, b, s),
                                                                    abs=1e-6 * max(1, m.phi))


def test_S1_exhaustive_triple_sum():
    m, s = Modulus(31), FourierSmoother(21)
    assert compute_S1_spectral(m, 4, 9, s, exhaustive=True) == pytest.approx(
        compute_S1_spectral(m, 4, 9, s), abs=1e-9)


def test_S1_tracks_S0():
    for n, a, b, expected in ((7, 2, 3, 1), (5, 1, 1, 2)):
        s1 = compute_S1_direct(Modulus(n), a, b, FourierSmoother(1001))
        assert abs(s1 - expected) <= 13.02 / 1001 * Modulus(n).phi + 20.02 * math.sqrt(2 * 1001 * n) + 7 * 1001


def test_kstar_examples():
    assert kstar(2, Modulus(101), FourierSmoother(3), 1) == -2
    assert kstar(2, Modulus(101), 3, 1, scan=True) == -2
    # 2 + (-2) = 0 shares all of n
    assert kstar(2, Modulus(1000003), 3, 1) == -2
    assert kstar(2, Modulus(1000003), 3, 1, scan=True) == -2
    for k in (-3, -1, 1, 3):
        assert kstar(50, Modulus(101), 3, k) is None
        assert kstar(50, Modulus(101), 3, k, scan=True) is None
    with pytest.raises(ValueError):
        kstar(2, Modulus(101), 3, 4)
    with pytest.raises(NotCoprimeError):
        kstar(3, Modulus(99), 3, 1)


def test_kstar_divisor_walk_matches_scan():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(5, 3000)
        A = rng.choice(unit_values(n))
        H = rng.randint(1, 10)
        m = Modulus(n)
        for k in range(-H, H + 1):
            assert kstar(A, m, H, k) == kstar(A, m, H, k, scan=True)


@pytest.mark.parametrize("count", [100, pytest.param(500, marks=pytest.mark.slow)])
def test_gcd_window_uniqueness(count):
    rng = random.Random(17)
    for _ in range(count):
        n = rng.randint(2, 5000)
        A = rng.randint(1, n)
        G = rng.randint(1, 100)
        x = rng.randint(-G, G)
        assert len(gcd_window_qualifiers(x, A, n, G)) <= 1
        if math.gcd(A, n) == 1:
            assert len(gcd_window_qualifiers_x(x, A, n, G)) <= 1
        assert audit_kstar_uniqueness(A, Modulus(n), G, x).passed


def test_star_sum_relation_instance():
    # A + 3 = 0 mod n puts k* = 3k inside the box for |k| <= 3
    n, H = 1009, 11
    value = star_sum(n - 3, Modulus(n), FourierSmoother(H))
    assert value != 0
    assert value == pytest.approx(direct_star_sum(n - 3, n, H), abs=1e-9)


@pytest.mark.parametrize("A, H", [(2, 3), (37, 3), (1234, 9), (4999, 5)])
def test_star_sum_composite_modulus(A, H):
    n = 5005
    assert star_sum(A, Modulus(n), FourierSmoother(H)) == pytest.approx(direct_star_sum(A, n, H), abs=1e-9)


def test_star_sum_without_large_divisor():
    assert star_sum(12, Modulus(9973), FourierSmoother(1001)) == 0


def test_relation_class():
    assert relation_class(6, 7) == 'unit'
    assert relation_class(1, 7) == 'unit'
    assert relation_class(1006, 1009) == 'three'
    assert relation_class(3, 1009) == 'three'
    assert relation_class(pow(3, -1, 1009), 1009) == 'three'
    assert relation_class(12, 9973) == 'plain'


def test_star_sum_audit_envelopes():
    report = audit_star_sum(12, Modulus(9973), FourierSmoother(1001))
    assert report.passed
    assert report.rhs == pytest.approx(0.07926 * 9972)
    assert "vacuous" in report.notes
    report = audit_star_sum(1006, Modulus(1009), FourierSmoother(11))
    assert report.rhs == pytest.approx(1008 / 12)
    assert report.passed
    assert report.lhs > 0
    assert "vacuous" not in report.notes
    with pytest.raises(AuditInputError):
        audit_star_sum(1008, Modulus(1009), FourierSmoother(11))
    with pytest.raises(AuditInputError):
        audit_star_sum(5, Modulus(1011), FourierSmoother(11))


@pytest.mark.parametrize("count", [6, pytest.param(200, marks=pytest.mark.slow)])
def test_star_sum_random_batch(count):
    handler = audit_handler({"audit": "starsum", "random": count, "seed": 1})
    reports = [r for instance in handler.instances() for r in handler.reports(instance)]
    assert len(reports) == count
    assert all(r.passed for r in reports)
    # n <= 10^4 never has a divisor above sqrt(2H^2 n) once H > 1000
    assert all(r.lhs == 0 and "vacuous" in r.notes for r in reports)


def test_t_sum_bound():
    previous = 0
    for H in (100, 1000, 13020):
        bound = t_sum_bound(FourierSmoother(H), Modulus(1009))
        assert bound.exact <= bound.closed_form
        assert bound.coefficient_sum <= 2 * math.log(H) / math.pi
        assert bound.closed_form > previous
        previous = bound.closed_form
    window = math.sqrt(2 * 13020 ** 2 * 1009)
    bound = t_sum_bound(FourierSmoother(13020), Modulus(1009))
    assert bound.closed_form / window == pytest.approx(36.38, abs=0.01)
    with pytest.raises(AuditInputError):
        t_sum_bound(FourierSmoother(1), Modulus(1009))


@pytest.mark.parametrize("n, a, b, H", [(101, 2, 3, 1001), (1009, 5, 7, 2000)])
def test_audit_s0_s1(n, a, b, H):
    report = audit_s0_s1(Modulus(n), a, b, FourierSmoother(H))
    assert report.passed
    assert report.inputs == {"n": n, "a": a, "b": b, "H": H}


def test_audit_s0_s1_needs_large_H():
    with pytest.raises(AuditInputError):
        audit_s0_s1(Modulus(101), 2, 3, FourierSmoother(1000))


@pytest.mark.parametrize("count", [5, pytest.param(50, marks=pytest.mark.slow)])
def test_audit_s0_s1_random_batch(count):
    handler = audit_handler({"audit": "s0s1", "random": count, "seed": 2})
    reports = [r for instance in handler.instances() for r in handler.reports(instance)]
    assert len(reports) == count
    for report in reports:
        assert report.passed
        assert report.inputs["n"] <= 5000
        assert 1000 < report.inputs["H"] <= 4000


def test_random_batches_repeat():
    settings = {"audit": "s0s1", "random": 3, "seed": 9, "n_max": 200}
    first = [r.to_record() for i in audit_handler(settings).instances() for r in audit_handler(settings).reports(i)]
    second = [r.to_record() for i in audit_handler(settings).instances() for r in audit_handler(settings).reports(i)]
    assert first == second


def test_relation_combos():
    combos = RelationCombo.all()
    assert len(combos) == 64
    assert len(set(combos)) == 64
    feasible = [c for c in combos if relation_eliminator(c)[1]]
    assert len(feasible) == 8
    for combo in feasible:
        D, _ = relation_eliminator(combo)
        assert D in (12, 28)
        q = coprime_six_part(D)
        assert back_substitute(combo, q) is not None
    assert relation_eliminator(RelationCombo(('3x+y', 'x+3y', '3x+y'))) == (28, True)
    assert RelationCombo(('3x+y', 'x+3y', '3x+y')).describe() == "3+a=0, 1+3b=0, 3a+b=0"
    assert relation_eliminator(RelationCombo(('3x-y', 'x+3y', '3x+y')))[1] is False


def test_relation_back_substitution():
    combo = RelationCombo(('3x+y', 'x+3y', '3x+y'))
    assert coprime_six_part(28) == 7
    a, b = back_substitute(combo, 7)
    assert (3 + a) % 7 == 0
    assert (1 + 3 * b) % 7 == 0
    assert (3 * a + b) % 7 == 0


def test_relation_audit_reports():
    reports = [audit_relation_combo(c) for c in RelationCombo.all()]
    assert all(r.passed for r in reports)
    assert any(r.inputs["D"] == 28 and r.inputs["feasible"] for r in reports)
    for r in reports:
        if r.inputs["feasible"]:
            assert ("back-substitution vacuous" in r.notes) is (r.inputs["D_coprime_six"] == 1)
    assert any("mod 7: a=4 b=2" in r.notes for r in reports)
    with pytest.raises(ValueError):
        RelationCombo(('x+y', 'x+3y', '3x+y'))


def test_pair_relations():
    assert pair_relations(1, 2, 7) == ['x+3y']
    assert pair_relations(1, 6, 7) == ['x+y']


@pytest.mark.parametrize("n, a, b, expected", [
    (7, 2, 3, False),
    (101, 1, 5, False),
    (101, 100, 5, False),
    (101, 2, 3, True),
])
def test_theorem_hypotheses(n, a, b, expected):
    assert theorem_hypotheses(Modulus(n), a, b) is expected


def test_theorem_lower_bound():
    report = theorem_lower_bound(Modulus(101), 2, 3, FourierSmoother(1001))
    assert report.passed
    assert report.lhs < 0
    assert "vacuous" in report.notes
    assert report.rhs == compute_S0(Modulus(101), 2, 3)
    with pytest.raises(HypothesisError):
        theorem_lower_bound(Modulus(7), 2, 3, FourierSmoother(1001))
    with pytest.raises(AuditInputError):
        theorem_lower_bound(Modulus(101), 2, 3, FourierSmoother(1000))


def test_theorem_random_batch():
    handler = audit_handler({"audit": "theorem", "random": 5, "seed": 4, "n_max": 2000, "H_max": 1500})
    for instance in handler.instances():
        reports = handler.reports(instance)
        assert [r.name for r in reports] == ["theorem", "starsum", "starsum", "starsum", "s1-decomposition"]
        assert all(r.passed for r in reports)
        assert "S0/phi(n)=" in reports[0].notes


def test_decomposition_reports():
    m, s = Modulus(101), FourierSmoother(1001)
    reports = decomposition_reports(m, 2, 3, s)
    assert [r.inputs["A"] for r in reports[:3]] == [3, 2, 2 * pow(3, -1, 101) % 101]
    floor = reports[-1]
    assert floor.passed
    assert floor.rhs == pytest.approx(compute_S1_direct(m, 2, 3, s), abs=1e-6 * m.phi)
    assert floor.lhs == pytest.approx(m.phi / 8 - 1.5 * t_sum_bound(s, m).exact)


def test_decomposition_with_starred_pairs():
    # b = -3 mod n gives k* = 3k at small H, so the starred sums carry weight
    m, s = Modulus(1009), FourierSmoother(11)
    a, b = 5, 1006
    reports = decomposition_reports(m, a, b, s)
    assert reports[0].lhs > 0
    floor = reports[-1]
    assert floor.passed
    stars = sum(r.lhs for r in reports[:3])
    assert floor.lhs == pytest.approx(m.phi / 8 - 0.5 * (stars + 3 * t_sum_bound(s, m).exact))
    assert floor.rhs == pytest.approx(compute_S1_direct(m, a, b, s), abs=1e-6 * m.phi)


@pytest.mark.slow
def test_theorem_lower_bound_large_modulus():
    report = theorem_lower_bound(Modulus(1000003), 2, 3, FourierSmoother(13020))
    assert report.passed
    assert "vacuous at this n" in report.notes


def test_unknown_audit():
    with pytest.raises(ValueError):
        audit_handler({"audit": "nothing"})
