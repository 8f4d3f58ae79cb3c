from fractions import Fraction

import pytest

from monstrous import qseries as qs


def test_coeff_and_truncation():
    s = qs.FracQSeries(1, {-1: 1, 2: 5}, 4)
    assert s.coeff(-1) == 1
    assert s.coeff(0) == 0
    assert s.coeff(2) == 5
    with pytest.raises(qs.PrecisionError):
        s.coeff(4)


def test_add_mul_truncation_propagation():
    a = qs.FracQSeries(1, {0: 1, 1: 2}, 5)
    b = qs.FracQSeries(1, {1: 3}, 3)
    assert (a + b).trunc == 3
    prod = a * b
    # pessimistic truncation: b is only known mod q^3 and a has a constant
    assert prod.coeff(1) == 3 and prod.coeff(2) == 6
    assert prod.trunc == 3


def test_invert_geometric():
    s = qs.FracQSeries(1, {0: 1, 1: -1}, 6)
    inv = s.invert()
    assert all(inv.coeff(k) == 1 for k in range(6))
    assert (s * inv).coeff(0) == 1
    assert all((s * inv).coeff(k) == 0 for k in range(1, 5))


def test_pow_negative_and_rescale():
    s = qs.FracQSeries(1, {1: 1}, 6)  # q
    assert (s ** 3).coeff(3) == 1
    t = qs.FracQSeries(1, {0: 1, 1: 1}, 6) ** -1
    assert t.coeff(1) == -1
    r = s.rescale_q(Fraction(1, 2))
    assert r.coeff(Fraction(1, 2)) == 1
    assert r.denom == 2


def test_denominator_cap():
    s = qs.FracQSeries(1, {1: 1}, 4)
    with pytest.raises(qs.QSeriesError):
        s.rescale_q(Fraction(1, 49))


def test_eta_quotient_delta():
    delta = qs.discriminant_delta(6)
    # tau(n) for n = 1..5
    taus = [1, -24, 252, -1472, 4830]
    for n, t in enumerate(taus, start=1):
        assert delta.coeff(n) == t


def test_eisenstein_e4():
    e4 = qs.eisenstein_e4(4)
    assert e4.coeff(0) == 1
    assert e4.coeff(1) == 240
    assert e4.coeff(2) == 2160
    assert e4.coeff(3) == 6720


def test_weight12_match_is_linear_combination():
    f = qs.weight12_match(1, 48, 4)
    assert f.coeff(0) == 1 and f.coeff(1) == 48 and f.coeff(2) == 195408
    g = qs.weight12_match(1, 0, 4)
    assert g.coeff(2) == 196560


def test_half_integer_eta_quotient():
    tw = 4096 * qs.eta_quotient([(1, 24), (Fraction(1, 2), -24)], 4)
    assert tw.coeff(Fraction(1, 2)) == 4096
    assert tw.coeff(1) == 98304


def test_integral_part_and_normalized():
    tw = qs.eta_quotient([(1, 24), (Fraction(1, 2), -24)], 3)
    ip = tw.integral_part().normalized()
    assert ip.denom == 1
    assert ip.coeff(1) == 24


def test_char_lattice_voa_prefactor():
    theta = qs.FracQSeries(1, {0: 1, 2: 196560}, 4)
    ch = qs.char_lattice_voa(theta, 24)
    assert ch.coeff(-1) == 1
    assert ch.coeff(0) == 24


def test_text_round_trip():
    s = qs.FracQSeries(2, {-2: Fraction(1), 3: Fraction(5, 7)}, 9)
    back = qs.series_from_text(qs.series_to_text(s))
    assert back == s
