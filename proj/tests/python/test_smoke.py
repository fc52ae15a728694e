"""Smoke tests for the Python bindings."""

import pytest

import invoser


def test_rational_arithmetic():
    a = invoser.Rational("3/4")
    b = invoser.Rational("-2/3")
    assert str(a + b) == "1/12"
    assert str(a * b) == "-1/2"
    assert str(-b) == "2/3"
    assert invoser.Rational("2/4") == invoser.Rational("1/2")


def test_bell_table_values():
    assert str(invoser.bell_poly(4, 2)) == "3*X2^2 + 4*X1*X3"
    assert str(invoser.bell_eval(5, 3, ["1"] * 3)) == "25"
    assert invoser.enumerate_partitions(4, 2) == [[0, 2, 0], [1, 0, 1]]


def test_lah_values():
    assert str(invoser.lah_poly(2, 1)) == "2*X1^-2*X2"
    assert str(invoser.lah_eval(4, 1, ["1"] * 4)) == "24"
    assert str(invoser.lah_eval(4, 2, ["1"] * 4)) == "36"


def test_series_operations():
    e = invoser.eval_series("exp(x)-1", 6)
    assert e.coeffs() == ["0"] + ["1"] * 6
    log1p = invoser.series_inverse(e)
    assert invoser.series_compose(e, log1p) == invoser.Series.identity(6)
    assert invoser.is_odd(invoser.eval_series("sin(x)", 9))


def test_exp_sin_sequence():
    s = invoser.eval_series("exp(sin(x))-1", 10)
    assert s.coeffs() == ["0", "1", "1", "0", "-3", "-8", "-3", "56", "217", "64", "-2951"]


def test_symbolic_involution_coefficients():
    cs = invoser.involution_from_even_seeds_symbolic(2, 5)
    assert str(cs[1]) == "-1"
    assert str(cs[3]) == "-3/2*X1^2"
    assert str(cs[5]) == "-15/2*X1*X2 + 15*X1^4"


def test_involution_round_trip():
    f = invoser.involution_from_even_seeds(["1/2", "-3", "7", "0", "2"], 11)
    assert invoser.is_involution(f)
    assert not invoser.involution_check_failures(f)
    g = invoser.conjugator_from_involution(f, ["1", "1/3", "0"])
    assert invoser.involution_from_conjugator(g) == f


def test_conjugacy_classification():
    g = invoser.eval_series("exp(x)-1", 8)
    h = invoser.eval_series("exp(2*x)-1", 8)
    equal, psi = invoser.same_involution_iff_odd_transfer(g, h)
    assert equal
    assert invoser.is_odd(psi)


def test_witness():
    f = invoser.eval_series("-x/(1+x)", 9)
    w = invoser.coefficient_form_check(f)
    assert w is not None
    assert invoser.involution_from_conjugator(w) == f
    assert invoser.coefficient_form_check(invoser.eval_series("exp(x)-1", 6)) is None


def test_errors_are_typed():
    with pytest.raises(invoser.NotInvolutionError):
        invoser.conjugator_from_involution(invoser.eval_series("exp(x)-1", 6), ["1"])
    with pytest.raises(invoser.TrivialInvolutionError):
        invoser.conjugator_from_involution(invoser.Series.identity(6), ["1"])
    with pytest.raises(invoser.ExpressionSyntaxError):
        invoser.eval_series("exp(", 4)
    with pytest.raises(invoser.ZeroAtPoleError):
        invoser.lah_eval(2, 1, ["0", "1"])
    with pytest.raises(invoser.NotInvertibleError):
        invoser.series_inverse(invoser.Series(3, ["1", "0", "0", "0"]))


def test_json_round_trip():
    f = invoser.eval_series("-x/(1+x)", 5)
    assert invoser.Series.from_json(f.to_json()) == f
    p = invoser.lah_poly(4, 1)
    assert invoser.LaurentPoly.from_json(p.to_json()) == p


def test_verify_suite():
    passed, checks, failures = invoser.run_suite("ortho", sym_max_n=5, numeric_max_n=6, trials=2)
    assert passed
    assert checks > 0
    assert failures == []
