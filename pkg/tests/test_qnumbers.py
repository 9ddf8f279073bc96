from fractions import Fraction as F

import pytest

from fusedhecke import (
    ParamPoint,
    ParameterError,
    brace_int,
    format_rational,
    parse_rational,
    q_binomial,
    q_factorial,
    q_int,
    q_pochhammer,
)

QS = [F(2), F(3, 2), F(5, 3)]


def test_q_int_values():
    assert q_int(0, F(2)) == 0
    assert q_int(1, F(7, 3)) == 1
    # oracle: (q^3 - q^-3)/(q - q^-1) at q=2 is (8 - 1/8)/(3/2)
    assert q_int(3, F(2)) == (F(8) - F(1, 8)) / (F(2) - F(1, 2)) == F(21, 4)


def test_q_int_classical_limits():
    assert q_int(4, F(1)) == 4
    assert q_int(4, F(-1)) == -4
    assert q_int(3, F(-1)) == 3


def test_q_int_rejects_zero_q():
    with pytest.raises(ParameterError):
        q_int(2, F(0))


def test_q_factorial():
    assert q_factorial(0, F(5)) == 1
    assert q_factorial(2, F(2)) == q_int(1, F(2)) * q_int(2, F(2)) == F(5, 2)
    assert q_factorial(3, F(1)) == 6


def test_q_binomial_values():
    assert q_binomial(5, 0, F(9, 4)) == 1
    assert q_binomial(2, 1, F(2)) == F(5, 2)
    assert q_binomial(4, 2, F(1)) == 6
    with pytest.raises(ParameterError):
        q_binomial(2, 3, F(2))


@pytest.mark.parametrize("q", QS)
def test_q_binomial_symmetry(q):
    for L in range(9):
        for p in range(L + 1):
            assert q_binomial(L, p, q) == q_binomial(L, L - p, q)


@pytest.mark.parametrize("q", QS)
def test_q_pascal_rule(q):
    for L in range(1, 9):
        for p in range(L + 1):
            lhs = q_binomial(L, p, q)
            rhs = F(0)
            if p <= L - 1:
                rhs += q**p * q_binomial(L - 1, p, q)
            if p >= 1:
                rhs += q ** (p - L) * q_binomial(L - 1, p - 1, q)
            assert lhs == rhs


def test_q_pochhammer():
    assert q_pochhammer(F(7), F(3), 0) == 1
    assert q_pochhammer(F(3), F(7), 1) == -2
    assert q_pochhammer(F(1, 2), F(1, 3), 2) == F(1, 2) * F(5, 6) == F(5, 12)


def test_brace_int():
    assert brace_int(0, F(2)) == 0
    assert brace_int(1, F(7, 5)) == 1
    assert brace_int(3, F(2)) == 1 + 4 + 16 == 21


@pytest.mark.parametrize("q", QS + [F(1), F(-1)])
def test_brace_int_vs_q_int(q):
    for L in range(1, 11):
        assert brace_int(L, q) == q ** (L - 1) * q_int(L, q)


@pytest.mark.parametrize("q", QS)
def test_pochhammer_nonzero_under_point_invariants(q):
    for p in range(4):
        ParamPoint(q, k_bound=p + 1)
        assert q_pochhammer(q**-2, q**-2, p) != 0


def test_param_point_validation():
    ParamPoint(F(2), F(3, 7), F(5, 9), k_bound=3)
    with pytest.raises(ParameterError):
        ParamPoint(F(0))
    with pytest.raises(ParameterError):
        ParamPoint(F(2), u=F(1), k_bound=1)  # u = q^0
    with pytest.raises(ParameterError):
        ParamPoint(F(2), u=F(4), k_bound=2)  # u = q^2
    with pytest.raises(ParameterError):
        ParamPoint(F(2), u=F(1, 4), k_bound=2)  # u = q^-2
    # the same value is fine when the fusion level does not reach it
    ParamPoint(F(2), u=F(4), k_bound=1)


def test_rational_serialization():
    assert parse_rational("-3/7") == F(-3, 7)
    assert parse_rational("12") == 12
    assert format_rational(F(-3, 7)) == "-3/7"
    assert format_rational(F(4)) == "4"
    for bad in ["3.5", "3/-7", "a/b", "1e3", ""]:
        with pytest.raises(ParameterError):
            parse_rational(bad)
    for x in [F(22, 7), F(-1, 3), F(5)]:
        assert parse_rational(format_rational(x)) == x
