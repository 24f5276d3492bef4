import cmath

import pytest

import siegelmult as sm


def test_w_both_conventions():
    assert sm.w("1,0;1,1", "-2,-3;1,1")[0] == -1
    assert sm.w([[1, 0], [1, 1]], [[-2, -3], [1, 1]], "automorphy")[0] == 1
    assert sm.w_exact("-1,0;0,-1", "-1,0;0,-1") == 1
    assert sm.w_exact("-1,0;0,-1", "-1,0;0,-1", "definition") == -1


def test_big_integers_round_trip():
    big = 10**30 + 1
    assert sm.normalize([[big, 10**30], [1, 1]]) == f"{big},{10**30};1,1"
    assert sm.multiply("13,8;8,5", "13,8;8,5") == "233,144;144,89"


def test_errors_are_typed():
    with pytest.raises(sm.NotSymplecticError):
        sm.normalize("1,2;1,1")
    with pytest.raises(sm.PreconditionError):
        sm.theta_multiplier("1,1;0,1")
    assert issubclass(sm.PreconditionError, sm.Error)


def test_kronecker():
    assert sm.kronecker(8, 5) == -1
    assert sm.kronecker(144, 89) == 1
    assert sm.kronecker(-3, -1) == -1


def test_theta():
    z = [[1j]]
    assert abs(sm.theta_value(z) - 1.0864348112133080146) < 1e-14
    assert abs(sm.theta_multiplier("0,-1;1,0") - cmath.exp(-1j * cmath.pi / 4)) < 1e-12
    assert abs(sm.delta_multiplier(1.0, "1,1;0,1") - cmath.exp(2j * cmath.pi / 12)) < 1e-12
    assert sm.rademacher("0,-1;1,0") == -3
    g2 = [[0.3 + 1.2j, 0.2 + 0.1j], [0.2 + 0.1j, -0.4 + 0.9j]]
    assert abs(sm.theta_value(g2, "doubled") - (0.99399428871300016848 - 0.0031030480531413480199j)) < 1e-14


def test_certificates():
    c = sm.deligne(4)
    assert c["pass"] and c["level"] == 4
    assert sm.verify_lemma("ITra", 50, 7) == sm.verify_lemma("ITra", 50, 7)
    assert "ITra" in sm.lemma_tags()
    assert sm.bms()["pass"]
    assert sm.krons(4)["pass"]


def test_mennicke_levels():
    report = sm.mennicke(4, 20, 9, 1)
    assert report["minimal_q"] == 8
