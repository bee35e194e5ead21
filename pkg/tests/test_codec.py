import pytest
from hypothesis import given, strategies as st

from vwriggle import (
    GaussSyntaxError, LaurentPolynomial, SemanticError, TangleDiagram, parse_polynomial,
    parse_tangle, polynomial_from_json, polynomial_to_json, polynomial_to_text,
    random_singular_tangle, serialize_tangle,
)

from conftest import diagrams, seeds


def test_parse_closed():
    d = parse_tangle("tangle\nclosed : O1+ O2+ U1+ U2+\n")
    assert len(d.components) == 1 and d.components[0].is_closed
    assert d.signs == {1: 1, 2: 1}


def test_sign_inconsistency():
    with pytest.raises(SemanticError) as err:
        parse_tangle("tangle\nlong start=T.1 end=B.1 : O1+ U1-\n")
    assert err.value.report.categories() == ["SignInconsistency"]


def test_parse_singular():
    d = parse_tangle("tangle\nclosed : O1+ P2* U1+ Q2*\n")
    assert list(d.crossings) == [1]
    assert list(d.double_points) == [2]


def test_serialize_examples():
    assert serialize_tangle(TangleDiagram()) == "tangle\n"
    d = parse_tangle("tangle\nclosed : O7+ O9- U7+ U9-\n")
    assert serialize_tangle(d) == "tangle\nclosed : O1+ O2- U1+ U2-\n"


def test_lenient_input():
    text = "tangle\n# a comment\nlong\tstart=T.1   end=B.1 :\tO1+  U1+"
    assert serialize_tangle(parse_tangle(text)) == "tangle\nlong start=T.1 end=B.1 : O1+ U1+\n"


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("tangel\n", 1),
    ("tangle\nclosed O1+ U1+\n", 2),
    ("tangle\nclosed : O1 U1+\n", 2),
    ("tangle\nlong start=X.1 end=B.1 :\n", 2),
    ("tangle\nclosed : O0+ U0+\n", 2),
    ("tangle\nclosed : P1+ Q1*\n", 2),
])
def test_syntax_errors(text, line):
    with pytest.raises(GaussSyntaxError) as err:
        parse_tangle(text)
    assert err.value.line == line
    assert 1 <= err.value.column


junk = st.text(alphabet="closedlongstarendOUPQ0123456789+-*:.=TB \t\n#", max_size=60)


@given(st.one_of(junk, junk.map("tangle\n".__add__), junk.map("tangle\nclosed : ".__add__)))
def test_errors_stay_inside_input(text):
    try:
        parse_tangle(text)
    except GaussSyntaxError as err:
        lines = text.split("\n")
        assert 1 <= err.line <= len(lines)
        assert 1 <= err.column <= len(lines[err.line - 1]) + 1
    except SemanticError:
        pass


@given(diagrams())
def test_roundtrip(d):
    text = serialize_tangle(d)
    assert serialize_tangle(parse_tangle(text)) == text
    assert parse_tangle(text) == d


@given(seeds)
def test_singular_roundtrip(seed):
    s = random_singular_tangle(2, 3, 2, seed)
    text = serialize_tangle(s)
    assert serialize_tangle(parse_tangle(text)) == text


def test_polynomial_text():
    p = LaurentPolynomial({((1, 1),): 1, ((1, -1),): 1, (): -2})
    assert polynomial_to_text(p) == "t1 + t1^-1 - 2"
    assert polynomial_to_text(LaurentPolynomial()) == "0"
    q = LaurentPolynomial({((1, 1),): 2, ((1, -2),): 1, (): -3})
    assert polynomial_to_text(q) == "2t1 + t1^-2 - 3"
    assert polynomial_to_text(-q) == "-2t1 - t1^-2 + 3"
    mixed = LaurentPolynomial({((1, 2), (2, 1)): -1, ((2, -1),): 4})
    assert polynomial_to_text(mixed) == "-t1^2t2 + 4t2^-1"
    two = LaurentPolynomial({((1, 1),): -1, ((1, -1),): -1, ((2, 1),): -1, ((2, -1),): -1, (): 4})
    assert polynomial_to_text(two) == "-t1 - t1^-1 - t2 - t2^-1 + 4"


def test_polynomial_json():
    assert polynomial_to_json(LaurentPolynomial()) == "[]"
    p = LaurentPolynomial({((1, 1),): 1, (): -1})
    assert polynomial_to_json(p) == '[{"coeff":1,"exps":{"1":1}},{"coeff":-1,"exps":{}}]'


polys = st.dictionaries(
    st.lists(st.tuples(st.integers(1, 3), st.integers(-4, 4)), max_size=3).map(tuple),
    st.integers(-2 ** 40, 2 ** 40), max_size=6,
).map(lambda d: LaurentPolynomial(list(d.items())))


@given(polys)
def test_polynomial_roundtrips(p):
    assert parse_polynomial(polynomial_to_text(p)) == p
    assert polynomial_from_json(polynomial_to_json(p)) == p


@given(polys, polys)
def test_polynomial_text_injective(p, q):
    assert (polynomial_to_text(p) == polynomial_to_text(q)) == (p == q)
