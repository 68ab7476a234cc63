from fractions import Fraction

import _gwvir as gw


def test_tau_values():
    assert gw.tau(0, [0, 0, 0]) == "1"
    assert gw.tau(1, [1]) == "1/24"
    assert gw.tau(2, [2, 2, 2]) == "7/240"
    assert Fraction(gw.tau(2, [2, 3])) == Fraction(29, 5760)


def test_gd_poly():
    assert gw.gd_poly(1) == "u"
    assert "u^(4)" in gw.gd_poly(3)


def test_genus_potential():
    terms = gw.genus_potential(2)
    assert len(terms) == 3
    coeffs = {Fraction(c) for c, _, _ in terms}
    assert Fraction(1, 1152) in coeffs
    assert Fraction(29, 5760) in coeffs
    assert Fraction(7, 1440) in coeffs


def test_libgober():
    ok, lhs, rhs = gw.libgober("builtin:P3")
    assert ok and lhs == "5" and rhs == "5"
    assert gw.libgober("builtin:genus2")[0]


def test_model_roundtrip():
    text = gw.emit_builtin("P2")
    assert gw.validate_model(text) == []
    assert gw.validate_model("builtin:P1xP1") == []


def test_symbols():
    assert gw.symbol_commutators_ok("builtin:P1", 3)
    assert Fraction(gw.cocycle_value("builtin:point", 1, -1)) == Fraction(1, 8)
    assert gw.cocycle_value("builtin:P2", 2, 1) == "0"


def test_kdv_cross_check():
    assert gw.kdv_matches(g=2, ks=[4])
    assert gw.kdv_matches(g=2, ks=[2, 3])


def test_tables_and_residuals():
    table = gw.point_table(1, 8)
    assert gw.z_residual(table, "builtin:point", 0, 1) == "0"
    assert gw.z_residual(table, "builtin:point", 2, 1, [(1, 0)]) == "0"
    # outside the declared bounds the residual is indeterminate
    assert gw.z_residual(table, "builtin:point", 5, 3) is None
    ok, checked, _ = gw.identity_check(table, "builtin:point", "puncture")
    assert ok and checked > 0
    line = gw.sample_line_table()
    ok, checked, _ = gw.identity_check(line, "builtin:P1", "divisor", 1)
    assert ok and checked > 0


def test_genus0():
    table = gw.point_table(0, 16)
    ok, checked = gw.genus0_check(table, "builtin:point", "invert", 4, 4)
    assert ok and checked > 0
    ok, _ = gw.genus0_check(table, "builtin:point", "trr", 4, 4)
    assert ok
