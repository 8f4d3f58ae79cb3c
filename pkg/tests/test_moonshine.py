from fractions import Fraction

import pytest

from monstrous import moonshine, qseries


def test_trace_theta_head():
    tr = moonshine.trace_theta(4)
    assert tr.coeff(-1) == 1
    assert tr.coeff(0) == -24
    assert tr.coeff(1) == 276
    assert tr.coeff(2) == -2048


def test_twisted_character_head():
    tw = moonshine.twisted_character(4)
    assert tw.coeff(Fraction(1, 2)) == 4096
    assert tw.coeff(1) == 98304


def test_assemble_j_coefficients():
    j = moonshine.assemble_j(6)
    assert j.coeff(-1) == 1
    assert j.coeff(0) == 0
    assert j.coeff(1) == 196884
    assert j.coeff(2) == 21493760
    assert j.coeff(3) == 864299970


def test_triality_components():
    b = moonshine.triality_components(6)
    total = b.v00 + b.v01 + b.v10 + b.v11
    diff = total - b.j
    assert not diff.coeffs
    assert b.v01 == b.v10 == b.v11
    for s in (b.v00, b.v01):
        for c in s.coeffs.values():
            assert c.denominator == 1 and c >= 0
    assert b.v00.coeff(-1) == 1
    assert b.v00.coeff(1) == 49428
    assert b.v01.coeff(1) == 49152


def test_faber_polynomial_defining_property():
    j = moonshine.assemble_j(10)
    for k in (1, 2, 3, 4):
        coeffs = moonshine.faber_polynomial(j, k)
        f = moonshine.evaluate_polynomial(coeffs, j)
        assert f.coeff(-k) == 1
        for e in range(-k + 1, 1):
            assert f.coeff(e) == 0


def test_faber_needs_precision():
    j = moonshine.assemble_j(3)
    with pytest.raises(moonshine.MoonshineError):
        moonshine.faber_polynomial(j, 9)


def test_hecke_sum_trivialities():
    t = qseries.monomial(-1, 1, 10)
    fam = moonshine.ReplicableFamily(order=1, series={1: t})
    assert moonshine.hecke_sum(fam, 1, 10).coeff(-1) == 1
    h2 = moonshine.hecke_sum(fam, 2, 10)
    assert h2.coeff(-2) == 1
    assert all(h2.coeffs.get(e, 0) == 0 for e in range(-1, h2.trunc))


def test_fractional_family_rejected():
    s = qseries.FracQSeries(2, {-2: 1, 1: 3}, 8)
    fam = moonshine.ReplicableFamily(order=1, series={1: s})
    with pytest.raises(moonshine.MoonshineError):
        moonshine.hecke_sum(fam, 2, 8)


def test_j_family_replicable():
    fam = moonshine.ReplicableFamily.identity(moonshine.assemble_j(14))
    report = moonshine.check_completely_replicable(fam, 6, 14)
    assert [r["status"] for r in report] == ["pass"] * 6


def test_fault_detected_and_localized():
    j = moonshine.assemble_j(12)
    bad = moonshine.ReplicableFamily(
        order=2, series={1: j, 2: j + qseries.monomial(1, 1, 12)})
    report = moonshine.check_completely_replicable(bad, 3, 12)
    assert report[0]["status"] == "pass"
    assert report[1]["status"] == "fail"
    assert report[1]["first_discrepancy"] is not None


def test_order_two_family_verdicts():
    # the signed-trace family needs the +24 shift to be replicable
    good = moonshine.check_completely_replicable(
        moonshine.order_two_family(20), 6, 20)
    assert all(r["status"] == "pass" for r in good)
    bad = moonshine.check_completely_replicable(
        moonshine.order_two_family(20, shift=0), 6, 20)
    assert any(r["status"] == "fail" for r in bad)


def test_gcd_fallback():
    j = moonshine.assemble_j(12)
    fam = moonshine.ReplicableFamily(order=2, series={1: j, 2: j})
    # exponent 4 falls back to gcd(4, 2) = 2
    assert fam.series_for(4) is fam.series[2]
    assert fam.series_for(3) is fam.series[1]


def test_supersingular_and_order_bound():
    primes = moonshine.supersingular_primes()
    assert len(primes) == 15
    assert primes[0] == 2 and primes[-1] == 71
    bound = moonshine.check_order_bound()
    assert bound["bound_primes_supersingular"]
    assert bound["primes_missing_from_bound"] == [17, 19]
    assert bound["valuations"] == bound["valuations_expected"]


def test_family_file_round_trip():
    fam = moonshine.order_two_family(8)
    text = moonshine.family_to_text(fam, 6)
    back = moonshine.family_from_text(text)
    assert back.order == 2
    assert back.series[1] == fam.series[1]
    assert back.series[2] == fam.series[2]
