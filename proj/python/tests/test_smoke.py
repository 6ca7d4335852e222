import json

import pytest

import matgor


def test_builtin_and_canonical():
    spec = matgor.builtin("fivevec")
    assert spec["type"] == "matrix"
    c = matgor.canonical("fivevec")
    assert c["type"] == "bases"
    assert len(c["bases"]) == 8
    assert matgor.canonical(c) == c
    assert matgor.canonical(json.dumps(c)) == c


def test_hilbert_vectors():
    assert matgor.hilbert("fivevec") == {"ann": [1, 5, 5, 1], "jm": [1, 5, 6, 1]}
    assert matgor.hilbert({"type": "pg", "q": 2, "n": 2}) == {"ann": [1, 3, 1], "jm": [1, 3, 1]}


def test_polynomials():
    assert matgor.phi("m22") == "1 * x1*x2 + 1 * x1*x3 + 1 * x2*x3"
    assert matgor.normalize_poly("x2*x1 - 2/4*x3") == "-1/2 * x3 + 1 * x1*x2"
    with pytest.raises(ValueError):
        matgor.normalize_poly("x1 +")


def test_checks():
    r = matgor.check("fivevec", "lattice")
    assert r["verdict"] == "pass"
    assert r["modular"] is False
    assert r["paper-expected"]["n_coatoms"] == 6
    lef = matgor.check("m23", "lefschetz", method="hessian")
    assert lef["hessian_values"] == {"1": 98304}


def test_fan():
    f = matgor.fan("fivevec", ideal="ann")
    assert f["ambient"] == "H"
    assert f["counts"] == {"rays": 9, "maximal": 20}
    assert len(f["maximal_cones"]) == 20


def test_report_all():
    r = matgor.report_all("m22")
    assert r["verdict"] == "pass"
    assert r["checks"]["algebra"]["computed"]["hilbert_ann"] == [1, 3, 1]


def test_errors():
    with pytest.raises(matgor.InputError):
        matgor.canonical({"type": "bases", "ground": [1, 2], "bases": []})
    with pytest.raises(matgor.GuardExceeded):
        matgor.fan("m23")
    with pytest.raises(ValueError):
        matgor.builtin("nonsense")
