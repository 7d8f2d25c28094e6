from fractions import Fraction

import pytest
import sympy as sp

import hzhu


def test_delta_coefficients_match_sympy_series():
    x, y = sp.symbols("x y")
    degree = 6
    f = -sp.log((sp.sqrt(1 + x) + sp.sqrt(1 + y)) / 2)
    series = sp.series(sp.series(f, x, 0, degree + 1).removeO(), y, 0, degree + 1).removeO()
    poly = sp.Poly(sp.expand(series), x, y)
    table = hzhu.delta_coefficients(degree)
    for m in range(1, degree):
        for n in range(1, degree - m + 1):
            expected = sp.Rational(poly.coeff_monomial(x**m * y**n))
            assert table[(m, n)] == Fraction(int(expected.p), int(expected.q)), (m, n)
    assert table[(1, 1)] == Fraction(1, 16)


def test_table_entries():
    assert hzhu.evaluate("S(1,1;2,4)", "Tminus", 2) == "[[0,-35/32],[-5/32,0]]"
    assert hzhu.evaluate("Lam(1,2)", "Mlambda", 3) == "l1*l2"
    assert hzhu.evaluate("J(1)", "Tplus", 1) == "3/128"
    assert hzhu.evaluate("omega(1)", "Tplus", 2) == "1/16"


def test_products():
    # 1 * u = u
    assert hzhu.star("one", "h1(-2)h2(-1)") == "h1(-2)h2(-1)"
    # circle products act as zero on every top level
    c = hzhu.circ("omega(1)", "S(1,1;2,1)")
    assert c != "0"
    assert hzhu.is_equiv("h1(-1)h2(-1)", "h1(-1)h2(-1)", rank=2, max_weight=2)


def test_rank_and_reduction():
    names = [f"S(1,1;2,{m})" for m in range(1, 7)]
    assert hzhu.independence_rank(names[:5], 2) == 5
    assert hzhu.independence_rank(names, 2) == 5
    assert hzhu.circle_reduction_coefficients()[-1] == -64


def test_scripts_and_suites():
    report = hzhu.run_script("assert_equiv w1 ~ 0\nassert_eval H1 on Hminus = -9*E(1,1)", rank=2)
    assert not report["passed"]
    assert report["statements"][0]["status"] == "Disproved"
    assert report["statements"][0]["witness"]["family"] == "Hminus"
    assert report["statements"][1]["status"] == "Proved"
    assert "tables" in hzhu.suite_names()
    suite = hzhu.run_suite("tables", rank=3)
    assert suite["passed"]
    assert suite["counts"]["proved"] == 40


def test_tables_text():
    csv = hzhu.tables(2, "csv").splitlines()
    assert csv[0] == "table,element,family,value"
    assert len(csv) == 41


def test_errors():
    with pytest.raises(hzhu.HzhuError):
        hzhu.run_script("assert_equiv w1 * (")
    with pytest.raises(hzhu.HzhuError):
        hzhu.tables(2, "xml")
