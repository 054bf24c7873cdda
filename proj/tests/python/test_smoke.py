"""Smoke tests for the python bindings: a few known exact values per area."""

import pytest

import stratquant as sq


def test_normal_form_semicone_relation():
    assert sq.normal_form("r^2", ["r^2 - x^2 - y^2"], ["r", "x", "y"]) == "x^2 + y^2"
    product = "(x^2 + y^2 - r^2)*(x + 3*y)"
    assert sq.normal_form(product, ["r^2 - x^2 - y^2"], ["r", "x", "y"]) == "0"


def test_semicone_brackets():
    assert sq.bracket("semicone", "x", "y") == "2*r"
    assert sq.bracket("semicone", "x", "x") == "0"
    assert sq.jacobiator("semicone", "x", "y", "r") == "0"
    ok, witness = sq.poisson_ideal_ok("semicone")
    assert ok and witness == ""


def test_adjoint_quotient():
    pt = sq.adjoint_point("1")
    assert (pt["X"], pt["Y"], pt["tau"]) == ("2", "0", "0")
    assert pt["residual"] == "0"
    pt2 = sq.adjoint_point("2")
    assert pt2["X"] == "5/2"
    assert sq.jacobiator("adjoint_quotient", "X", "Y", "tau") == "0"


def test_momentum_maps():
    q = [["1", "0"]]
    p = [["2", "0"]]
    assert sq.mu_o(q, p) == [["0", "0"], ["0", "0"]]
    assert sq.mu_sp(q, p) == [["2", "-1"], ["4", "-2"]]
    image = sq.orbit_image(q, p)
    assert image["W"] == [[("-3", "4")]]  # (1 + 2i)^2
    assert image["rank"] == 1


def test_orbit_image_requires_zero_level():
    with pytest.raises(ValueError):
        sq.orbit_image([["1", "0"]], [["0", "1"]])


def test_dimension_calculus():
    assert sq.section_dim(1, 2, 2) == 5
    assert sq.section_dim(2, 2, 2) == 6
    assert sq.oracle_dim(1, 2, 2) == 5
    assert sq.kernel_dim(2, 2, 2) == 1
    assert sq.weyl_dim([2, 0], 2) == 3
    assert sq.enumerate_monomials(2, 2) == [[2, 0], [0, 1]]


def test_bargmann_and_gram():
    assert sq.bargmann_inner("z1^2", "z1^2", ["z1"]) == ("8", "0")
    assert sq.bargmann_inner("z1", "z2", ["z1", "z2"]) == ("0", "0")
    g = sq.gram(1, 1, 1)
    assert g["gram"] == [["8"]]
    assert g["positive_definite"] is True
    basis = sq.invariant_basis(1, 2, 2)
    assert basis["dim"] == 5


def test_euler_and_restriction():
    assert sq.euler_apply("z1_1^2", 1, 2) == "2*z1_1^2"
    assert sq.costratified_restrict("w1_1*w2_2 - w1_2^2", 2, 1, 2) == "0"


def test_dirac_condition():
    assert sq.dirac_max_residual() == "0"
    assert sq.dirac_max_residual(strip_theta=True) != "0"


def test_steinberg():
    sigma = sq.steinberg([("2", "0"), ("1/2", "0")])
    assert sigma == [("5/2", "0")]


def test_run_checks_poisson():
    records = sq.run_checks("poisson")
    assert records and all(r["passed"] for r in records)
