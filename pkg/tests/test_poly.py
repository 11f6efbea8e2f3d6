import itertools
import json

import pytest
from hypothesis import given, strategies as st

from knotbound.poly import (
    HomflyValue,
    LaurentPoly,
    PolySyntaxError,
    divide_exact,
    parse_laurent,
    sqrt_exact,
)

P = LaurentPoly.parse

laurent = st.dictionaries(
    st.integers(-12, 12), st.integers(-10**30, 10**30), max_size=6
).map(LaurentPoly)
small_laurent = st.dictionaries(st.integers(-5, 5), st.integers(-9, 9), max_size=5).map(LaurentPoly)
nonzero = small_laurent.filter(lambda p: not p.is_zero())


def test_add_inverse_is_empty():
    assert (P("v^2") + P("-v^2")).terms == {}


def test_mul_examples():
    assert P("1 - v^2") * P("v^2") == P("v^2 - v^4")
    d = P("v^-1 - v^1")
    assert d * d == P("v^-2 - 2 + v^2")


def test_no_zero_coefficients_stored():
    p = LaurentPoly({0: 0, 3: 5, 4: -5}) + LaurentPoly({3: -5})
    assert p.terms == {4: -5}


@pytest.mark.parametrize(
    "src, k, want",
    [("1", 4, "v^4"), ("v^-2 - 1 + v^2", 2, "1 - v^2 + v^4"), ("v^3", -3, "1")],
)
def test_shift(src, k, want):
    assert P(src).shift(k) == P(want)


def test_eval_and_derivative_at_one():
    p = P("2v^2 - v^4")
    assert p.eval_one() == 1
    assert p.deriv_one() == 0
    assert LaurentPoly().eval_one() == 0


@pytest.mark.parametrize(
    "src, want",
    [
        ("3v^6 - v^8 - v^10", (6, 10, 3, -1)),
        ("v^-2 - 1 + v^2", (-2, 2, 1, 1)),
        ("v^5", (5, 5, 1, 1)),
    ],
)
def test_bounds(src, want):
    assert P(src).bounds() == want


def test_bounds_of_zero_rejected():
    with pytest.raises(ValueError, match="no support"):
        LaurentPoly().bounds()


def test_divide_exact_examples():
    den = P("1 - v^2")
    assert divide_exact(P("v^2 - v^4"), den) == P("v^2")
    num = P("2v^2 - v^4") - P("v^2")
    q = divide_exact(num, den)
    assert q * den == num  # oracle: multiply back
    assert q == P("v^2")
    assert divide_exact(P("v^3"), den) is None


def test_divide_needs_integral_quotient():
    assert divide_exact(P("1"), P("2")) is None
    assert divide_exact(P("4v^2 + 2"), P("2")) == P("2v^2 + 1")


def test_sqrt_examples():
    assert sqrt_exact(P("v^4 + 2v^2 + 1")) == P("v^2 + 1")
    assert sqrt_exact(P("1")) == P("1")
    assert sqrt_exact(P("v^4 + v^2 - 1")) is None


def test_sqrt_rejection_against_exhaustive_candidates():
    target = P("v^4 + v^2 - 1")
    # any root has degree-2 support in v^0..v^2 with |coefficients| small
    for a, b, c in itertools.product(range(-4, 5), repeat=3):
        f = LaurentPoly({2: a, 1: b, 0: c})
        assert f * f != target


def test_sqrt_sign_normalised():
    assert sqrt_exact(P("1 - 2v^2 + v^4")) == P("-1 + v^2")


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()


@given(small_laurent, nonzero)
def test_divide_inverts_mul(a, b):
    assert divide_exact(a * b, b) == a


@given(nonzero)
def test_sqrt_inverts_square(a):
    root = sqrt_exact(a * a)
    assert root in (a, -a)
    assert root.bounds()[3] > 0


@given(small_laurent, small_laurent)
def test_product_rule_at_one(a, b):
    assert (a * b).deriv_one() == a.deriv_one() * b.eval_one() + a.eval_one() * b.deriv_one()


@given(laurent)
def test_text_round_trip(a):
    assert parse_laurent(a.format()) == a


@given(laurent)
def test_json_round_trip(a):
    data = json.loads(json.dumps(a.to_json()))
    assert data == sorted(data)
    assert LaurentPoly.from_json(data) == a


@pytest.mark.parametrize(
    "text, want",
    [
        ("2v^2 - v^4", {2: 2, 4: -1}),
        ("v^-2 - 1 + v^2", {-2: 1, 0: -1, 2: 1}),
        ("  3 * v ^ 5 ", {5: 3}),
        ("-v^2 + 2*v^2", {2: 1}),
        ("0", {}),
    ],
)
def test_parse(text, want):
    assert parse_laurent(text).terms == want


@pytest.mark.parametrize("text", ["v^2 + + 3", "", "v2", "2v^", "v^2 3", "3*", "x^2"])
def test_parse_errors(text):
    with pytest.raises(PolySyntaxError) as e:
        parse_laurent(text)
    assert e.value.pos >= 0


def test_parse_error_position():
    with pytest.raises(PolySyntaxError) as e:
        parse_laurent("v^2 + + 3")
    assert e.value.pos == 6


def test_format():
    assert P("v^-2 - 1 + v^2").format() == "v^-2 - 1 + v^2"
    assert str(LaurentPoly()) == "0"
    assert LaurentPoly({1: -3}).format("z") == "-3z^1"


def test_no_overflow():
    big = LaurentPoly({0: 2**200, 3: -(3**150)})
    assert divide_exact(big * big * big, big) == big * big


# --- two variables


def test_homfly_mul_delta():
    delta = HomflyValue({(-1, -1): 1, (1, -1): -1})
    assert delta * delta == HomflyValue({(-2, -2): 1, (0, -2): -2, (2, -2): 1})


def test_homfly_scale_and_add():
    one = HomflyValue.constant(1)
    assert one.scale_monomial(2, 0) == HomflyValue.monomial(2, 0)
    v2 = HomflyValue.monomial(2, 0)
    assert (v2 + v2.scale_monomial(0, 0, -1)).is_zero()


def test_homfly_text_and_json():
    h = HomflyValue({(2, 0): 2, (4, 0): -1, (2, 2): 1})
    assert h.format() == "(2v^2 - v^4) + (v^2) z^2"
    rows = h.to_json()
    assert rows == sorted(rows)
    assert HomflyValue.from_json(json.dumps(rows)) == h


def test_homfly_at_v_one():
    h = HomflyValue({(2, 0): 2, (4, 0): -1, (2, 2): 1})
    assert h.at_v_one() == LaurentPoly({0: 1, 2: 1})
