import pytest

from vwriggle import CoefficientOverflow, LaurentPolynomial, parse_polynomial as P


def test_arithmetic():
    a, b = P("t1 + t1^-1 - 2"), P("t2 - 1")
    assert a + b == P("t1 + t1^-1 + t2 - 3")
    assert a - a == 0
    assert -(a + b) + a == -b
    assert P("t1") * P("t1^-1") == 1
    assert (P("t1 - 1") * P("t1 + 1")) == P("t1^2 - 1")


def test_no_zero_entries():
    p = LaurentPolynomial([(((1, 0),), 3), (((2, 1), (2, -1)), 2), (((1, 1),), 0)])
    assert p.terms == {(): 5}


def test_invert_variable():
    sym = P("t1 + t1^-1 - 2")
    assert sym.invert_variable(1) == sym
    assert P("2t1 + t1^-2 - 3").invert_variable(1) == P("2t1^-1 + t1^2 - 3")
    assert P("t2^3 - 1").invert_variable(1) == P("t2^3 - 1")


def test_rename():
    p = P("t1 + t2^-1 - 2")
    assert p.rename({1: 2, 2: 1}) == P("t2 + t1^-1 - 2")
    with pytest.raises(ValueError):
        p.rename({1: 2})


def test_eval_ones():
    assert P("t1 + t1^-1 - 2").eval_ones() == 0
    assert P("3t1^4 - 1").eval_ones() == 2


def test_overflow_detected():
    big = LaurentPolynomial.constant(2 ** 62)
    with pytest.raises(CoefficientOverflow):
        big + big
    with pytest.raises(CoefficientOverflow):
        big * LaurentPolynomial.constant(4)
    assert (big + (-big)).is_zero()
