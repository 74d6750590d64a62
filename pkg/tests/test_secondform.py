import math
from fractions import Fraction

import pytest

from asymdir.curvemodels import build_family, build_plane_curve, ramification_data, rescale_y, sample_model
from asymdir.errors import (HypothesisViolated, I2MembershipFailed, InvalidParams, PointNotOnCurve)
from asymdir.localexpand import RatFun
from asymdir.numkernel import Poly, UniPoly, parse_polynomial
from asymdir.secondform import (ASYMPTOTIC, INDETERMINATE, NOT_ASYMPTOTIC, TWO_PI_I, QuadricRank4,
                                Value, asymptotic_conditions, classify, cond_eqdg, cond_g, cond_g2,
                                double_split_check, gamma_quadrics, gamma_relation, i2_membership,
                                pencil_quadrics, point_deformation, random_curve_points, schiffer_mu2_test,
                                second_form, split_deformation, higher_schiffer_residue, w_pairing)

X, Y = Poly.var("x"), Poly.var("y")
ONE = Poly.const(1)

MARONI_BASE = {"a": 1, "b": 0, "psi5": [1], "psi7": [1]}


def maroni_base():
    return build_family(6, "maroni", MARONI_BASE)


# values

def test_value_normalization():
    v = Value.from_normalized(3)
    assert v.raw == pytest.approx(6j * math.pi)
    assert v.normalized == pytest.approx(3)
    assert v.to_json()["normalized_by_2pi_i"] == {"re": pytest.approx(3), "im": pytest.approx(0)}


def test_classify_bands():
    assert classify(1e-9, 1e-8) == ASYMPTOTIC
    assert classify(5e-8, 1e-8) == INDETERMINATE
    assert classify(1e-6, 1e-8) == NOT_ASYMPTOTIC


# w-pairing

def test_pairing_of_x_against_inverse():
    zeta = split_deformation(parse_polynomial("y^3 + 1"))
    v = w_pairing(zeta, RatFun(X), RatFun(ONE, X))
    assert v.normalized == pytest.approx(-3)
    assert v.raw == pytest.approx(-3 * TWO_PI_I)


def test_regular_pairs_give_zero():
    zeta = split_deformation(sample_model(6, "maroni", 2, 0))
    assert abs(w_pairing(zeta, RatFun(X + Y), RatFun(Y * Y)).raw) < 1e-12


def test_pole_in_first_slot_rejected():
    zeta = split_deformation(parse_polynomial("y^3 + 1"))
    with pytest.raises(HypothesisViolated):
        w_pairing(zeta, RatFun(ONE, X), RatFun(X))


def test_jet_weighted_pairing():
    # f = a z + b at one point: Res(f z d(f / z)) = -b^2
    P = parse_polynomial("y^3 + 1")
    pt = split_deformation(P).D[0]
    a, b = 2, 3
    zeta = point_deformation(P, [pt], {0: UniPoly([b, a])})
    v = higher_schiffer_residue(zeta, RatFun(X), RatFun(ONE, X))
    assert v.normalized == pytest.approx(-b * b)


# closed forms and the distinguished quadrics

def test_maroni_base_condition_values():
    zeta = split_deformation(maroni_base())
    assert cond_g(zeta) == pytest.approx(-1)
    assert cond_g2(zeta) == pytest.approx(1)
    assert abs(cond_eqdg(zeta)) < 1e-14


def test_maroni_base_report():
    r = asymptotic_conditions(maroni_base())
    assert r.verdict == NOT_ASYMPTOTIC
    assert r.values["II_Gamma2"].raw == pytest.approx(TWO_PI_I)
    assert r.values["II_Gamma3"].raw == pytest.approx(TWO_PI_I)
    assert abs(r.values["II_Gamma1"].raw) < 1e-12
    assert max(r.oracle_agreement.values()) < 1e-10
    obj = r.to_json()
    assert obj["verdict"] == "not_asymptotic"
    assert set(obj["tolerances"]) == {"zero_tol", "verdict"}


@pytest.mark.parametrize("genus", [5, 6, 7])
def test_gamma_values_track_conditions(genus):
    rel = gamma_relation(genus)
    for i in range(5):
        m = sample_model(genus, "maroni", 13, i)
        r = asymptotic_conditions(m)
        for j, (cond, sign) in enumerate(rel, 1):
            expected = sign * r.values[cond].raw
            got = r.values[f"II_Gamma{j}"].normalized
            assert abs(got - expected) <= 1e-8 * (1 + abs(expected))


@pytest.mark.parametrize("genus", [5, 6, 7])
def test_asymptotic_family_vanishes(genus):
    for i in range(5):
        r = asymptotic_conditions(sample_model(genus, "asy", 17, i))
        assert r.verdict == ASYMPTOTIC
        assert r.max_condition <= 1e-8
        assert all(abs(r.values[f"II_Gamma{j}"].raw) / (2 * math.pi) <= 1e-7 for j in (1, 2, 3))


@pytest.mark.parametrize("genus", [5, 6, 7])
def test_all_pencil_quadrics_lie_in_i2(genus):
    m = sample_model(genus, "maroni", 5, 1)
    for q in pencil_quadrics(genus) + gamma_quadrics(genus):
        assert i2_membership(m, q) <= 1e-9


def test_non_quadric_rejected():
    m = sample_model(6, "maroni", 5, 1)
    q = gamma_quadrics(6)[0]
    (c1, ga1, gb2), (c2, ga2, _) = q.pairs
    bad = QuadricRank4("bad", q.tags, ((c1, ga1, gb2), (c2, ga2, ga2)))
    with pytest.raises(I2MembershipFailed):
        second_form(split_deformation(m), bad)


def test_random_points_lie_on_curve():
    m = sample_model(7, "maroni", 5, 0)
    for x, y in random_curve_points(m, 12, seed=4):
        assert abs(complex(m.P(x, y))) < 1e-8 * (1 + abs(y) ** 3)


def test_rescaling_scales_conditions():
    m = sample_model(6, "maroni", 9, 3)
    lam = Fraction(5, 2)
    a, b = asymptotic_conditions(m), asymptotic_conditions(rescale_y(m, lam))
    assert b.values["cond_g"].raw == pytest.approx(a.values["cond_g"].raw / float(lam))
    assert b.values["cond_g2"].raw == pytest.approx(a.values["cond_g2"].raw / float(lam) ** 2)
    assert a.verdict == b.verdict


# double split

@pytest.mark.parametrize("genus, family", [(6, "maroni"), (7, "asy"), (5, "maroni")])
def test_trigonal_double_split_is_three(genus, family):
    r = double_split_check(sample_model(genus, family, 6, 0))
    assert r.value.normalized == pytest.approx(3, abs=1e-8)
    assert len(r.rechoices) == 5
    assert r.invariance_deviation <= 1e-8


@pytest.mark.parametrize("F, degree, expected", [("X^5 + Y^5 + Z^5", 5, 5), ("X^6 + Y^6 + Z^6", 6, 6)])
def test_plane_double_split_is_degree(F, degree, expected):
    c = build_plane_curve(F, degree, ["X + 2*Y - Z", "3*X - Y + 2*Z", "X + Y + 5*Z"])
    r = double_split_check(c)
    assert r.value.normalized == pytest.approx(expected, abs=1e-8)
    assert r.invariance_deviation <= 1e-8


def test_double_split_deterministic():
    m = sample_model(6, "maroni", 6, 0)
    assert double_split_check(m, seed=3).to_json() == double_split_check(m, seed=3).to_json()


# Schiffer

def test_schiffer_vanishes_at_ramification():
    m = sample_model(6, "maroni", 8, 0)
    for bp in ramification_data(m):
        x0, y0 = bp.x_branch, bp.ramified[0][0]
        assert schiffer_mu2_test(m, (x0, y0)).is_asymptotic


def test_schiffer_nonzero_at_generic_points():
    m = sample_model(6, "asy", 8, 0)
    for p in random_curve_points(m, 10, seed=1):
        r = schiffer_mu2_test(m, p)
        assert not r.is_asymptotic
        assert abs(r.w_L) > 1e-6


def test_schiffer_rejects_bad_input():
    m = sample_model(6, "maroni", 8, 0)
    with pytest.raises(PointNotOnCurve):
        schiffer_mu2_test(m, (0.3, 0.7))
    with pytest.raises(InvalidParams):
        schiffer_mu2_test(sample_model(5, "maroni", 8, 0), (0, 1))


def test_schiffer_json_shape():
    m = sample_model(7, "maroni", 8, 0)
    obj = schiffer_mu2_test(m, random_curve_points(m, 1)[0]).to_json()
    assert set(obj) == {"value", "is_asymptotic", "wronskian_L", "wronskian_M", "pencil"}
    assert len(obj["pencil"]) == 2
