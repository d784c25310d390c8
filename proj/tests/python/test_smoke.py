import math

import pytest

import bockstein as b


def test_worked_examples():
    assert b.evaluate("norm(Phi(Zp(2),3) [+] Phi(Q,2))") == "4"
    assert b.evaluate("sigma(Zinv(3))") == "Zloc(p) for all p ≠ 3"
    assert b.sigma("Z/2 + Q") == "Q, Zp(2)"


def test_cdtype_operations():
    pi2 = b.CdType("triple(S={2}, D={2}, d={zero:1, default:1, 2:2})")
    pi3 = b.CdType("triple(S={3}, D={3}, d={zero:1, default:1, 3:2})")
    assert (pi2 + pi3).norm() == 3
    assert (pi2 + pi2).norm() == 4
    assert (pi2 + pi2).dim("Zpinf(2)") == 3
    assert pi2.decompose() == "Phi(Zp(2),2) ∨ 1-types"
    assert b.phi_basis("Zp(2)", 3) == b.CdType("Phi(Zp(2),3)")
    assert b.nat(2) <= b.nat(3)
    assert b.nat(math.inf).norm() == math.inf
    assert b.from_json(str(pi2.to_json()).replace("'", '"').replace("True", "true").replace("False", "false")) == pi2


def test_json_and_errors():
    assert b.evaluate_json("inorm(nat(5))") == {"kind": "number", "value": 5}
    assert b.phi_basis("Q", 2).phi()["Q"] == 2
    with pytest.raises(b.BocksteinError):
        b.evaluate("Phi(Z,3)")
    with pytest.raises(ValueError):
        b.CdType("triple(S={2}, D={3}, d={default:1})")


def test_laws_and_homology():
    report = b.check_laws([2], 2, ["norm-sandwich", "bijection"])
    assert report["pass"] is True
    assert [r["law"] for r in report["laws"]] == ["bijection", "norm-sandwich"]
    assert "scaling" in b.law_names()
    assert b.homology("0 1 2 3", "Z")[0] == "Z"
    sphere = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n"
    assert b.homology(sphere, "Z") == ["Z", "0", "Z"]
    assert b.homology(sphere, "Z/2", cohomology=True, reduced=True)[2] == "Z/2"
