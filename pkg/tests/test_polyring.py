import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIELDS, tpolys, xpolys
from sqfsparse.polyring import (
    NEG_INF,
    CoefPoly,
    PolyError,
    TPoly,
    XPoly,
    content_and_primitive,
    gcd_t,
    poly_gcd,
    pth_power_split,
)
from sqfsparse.polytext import PolyParseError, format_tpoly, parse_tpoly, parse_xpoly

F5, F9, F4 = FIELDS[5], FIELDS[9], FIELDS[4]


# --- F_q[t] -------------------------------------------------------------------

def test_tpoly_basics():
    u = TPoly(F5, [1, 0, 3, 0, 0])           # trailing zeros are dropped
    assert u.coeffs == (1, 0, 3)
    assert u.degree == 2 and u.lc == 3
    assert TPoly(F5).degree == NEG_INF
    assert not TPoly(F5)
    assert u(2) == (1 + 3 * 4) % 5


def test_tpoly_integer_coercion_is_reduction_mod_p():
    t = TPoly.t(F5)
    assert t + 7 == t + 2
    assert 5 * t == TPoly(F5)


def test_tpoly_division():
    t = TPoly.t(F5)
    u = t**3 + 2 * t + 1
    v = t + 4
    qt, r = divmod(u, v)
    assert qt * v + r == u
    assert r.degree < v.degree
    assert (u * v).exquo(v) == u
    with pytest.raises(ArithmeticError):
        u.exquo(v)
    with pytest.raises(ZeroDivisionError):
        divmod(u, TPoly(F5))


def test_gcd_t():
    t = TPoly.t(F5)
    a = (t + 1) ** 2 * (t + 2)
    b = (t + 1) * (t + 3)
    assert gcd_t(a, b) == t + 1
    assert gcd_t(a, TPoly(F5)) == a.monic()
    with pytest.raises(ValueError):
        gcd_t(TPoly(F5), TPoly(F5))


def test_derivative_in_characteristic_p():
    t = TPoly.t(F5)
    assert (t**5 + t).derivative() == TPoly.constant(F5, 1)
    assert (t**10).derivative() == TPoly(F5)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_tpoly_ring_laws(data):
    F = data.draw(st.sampled_from([F5, F9, F4]))
    a, b, c = (data.draw(tpolys(F)) for _ in range(3))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == TPoly(F)
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()
    if b:
        qt, r = divmod(a, b)
        assert qt * b + r == a and r.degree < b.degree


# --- F_q[t][x_1..x_D] ---------------------------------------------------------

def test_xpoly_degrees():
    f = parse_xpoly("t^2*x1 + x1^3*x2 + t", F5)
    assert f.nvars == 2
    assert f.deg_t == 2
    assert f.deg_x(1) == 3 and f.deg_x(2) == 1
    assert f.total_degree == 4
    assert f.deg_xvec == 4
    assert XPoly.zero(F5, 2).total_degree == NEG_INF


def test_xpoly_coefficient_views():
    f = parse_xpoly("t^2*x + 3*x + t + 1", F5)
    delta = f.t_coefficients()
    assert [str(c) for c in delta] == ["3*x + 1", "1", "x"]
    assert all(isinstance(c, CoefPoly) for c in delta)
    xc = f.x_coefficients()
    assert xc[(1,)] == parse_tpoly("t^2 + 3", F5)
    assert xc[(0,)] == parse_tpoly("t + 1", F5)


def test_exquo_and_divides():
    f = parse_xpoly("(x1 + t)*(x2 - x1)", F5)
    g = parse_xpoly("x1 + t", F5, nvars=2)
    assert f.exquo(g) == parse_xpoly("x2 - x1", F5)
    assert g.divides(f)
    assert not parse_xpoly("x1 + 1", F5, nvars=2).divides(f)


def test_coefpoly_rejects_t():
    with pytest.raises(PolyError):
        CoefPoly(F5, 1, {(1, 0): 1})


def test_evaluate_x_example():
    # f = x^2 - t at x = t + 1 is t^2 + t + 1
    f = parse_xpoly("x^2 - t", F5)
    assert f.evaluate_x([parse_tpoly("t + 1", F5)]) == parse_tpoly("t^2 + t + 1", F5)


def test_prefix_evaluator_matches_direct_evaluation():
    P = parse_xpoly("x1*x2^3 + 3*x2^2 + x1 + 2", F5, nvars=3).as_coef()
    at = P.evaluator()
    for x in itertools.product(range(5), repeat=3):
        assert at(x) == P.evaluate(x)
    # jumping around (no shared prefixes) also works
    for x in [(4, 4, 4), (0, 1, 2), (4, 0, 0), (0, 1, 3)]:
        assert at(x) == P.evaluate(x)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_substitution_is_a_ring_homomorphism(data):
    F = data.draw(st.sampled_from([F5, F4, F9]))
    f, g = data.draw(xpolys(F, 2)), data.draw(xpolys(F, 2))
    images = [data.draw(xpolys(F, 3, 1, 1, 3)) for _ in range(2)]
    assert (f * g).substitute_x(images) == f.substitute_x(images) * g.substitute_x(images)
    assert (f + g).substitute_x(images) == f.substitute_x(images) + g.substitute_x(images)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_substitute_then_evaluate_equals_evaluate_images(data):
    F = data.draw(st.sampled_from([F5, F4]))
    f = data.draw(xpolys(F, 2))
    images = [data.draw(xpolys(F, 2, 1, 1, 3)) for _ in range(2)]
    beta = [data.draw(st.integers(0, F.q - 1)) for _ in range(2)]
    lhs = f.substitute_x(images).evaluate_scalars(beta)
    rhs = f.evaluate_x([img.evaluate_scalars(beta) for img in images])
    assert lhs == rhs


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_chain_rule_for_t_derivative(data):
    # d/dt f(t, u(t)) = f_t(t, u) + f_x(t, u) u'
    F = data.draw(st.sampled_from([F5, F9, F4]))
    f = data.draw(xpolys(F, 1))
    u = data.draw(tpolys(F, 3))
    lhs = f.evaluate_x([u]).derivative()
    rhs = f.partial_derivative(0).evaluate_x([u]) + f.partial_derivative(1).evaluate_x([u]) * u.derivative()
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_xpoly_ring_laws(data):
    F = data.draw(st.sampled_from([F5, F4]))
    a, b, c = (data.draw(xpolys(F, 2)) for _ in range(3))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a * b).exquo(b) == a


def test_content_and_primitive():
    f = parse_xpoly("(t + 1)*(x^2 + t*x)", F5)
    content, prim = content_and_primitive(f)
    assert content == parse_tpoly("t + 1", F5)
    assert content.to_xpoly(1) * prim == f


def test_pth_power_split():
    f = parse_xpoly("x^5 + t^5 + 2", F5)
    g = pth_power_split(f)
    assert g is not None and g**5 == f
    assert pth_power_split(parse_xpoly("x^5 + t", F5)) is None


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_poly_gcd_of_multiples(data):
    F = data.draw(st.sampled_from([FIELDS[3], F5, F4]))
    g = data.draw(xpolys(F, 1, 1, 1, 3))
    a = data.draw(xpolys(F, 1, 1, 1, 3))
    b = data.draw(xpolys(F, 1, 1, 1, 3))
    if not (g and a and b):
        return
    h = poly_gcd(g * a, g * b)
    assert h.divides(g * a) and h.divides(g * b)
    assert g.divides(h)


# --- text syntax ----------------------------------------------------------------

def test_parse_basic_forms():
    assert parse_xpoly("x^2 - t", F5) == parse_xpoly("x*x + 4*t", F5)
    assert parse_xpoly("2x1 x2", F5) == parse_xpoly("2*x1*x2", F5)
    assert parse_tpoly("t^p", F5) == parse_tpoly("t^5", F5)
    assert parse_xpoly("(t+1)^2", F5).nvars == 0


def test_parse_integer_literals_are_element_codes():
    # in F_9, the literal 3 names the element with digits (0, 1)
    u = parse_tpoly("3", F9)
    assert u.coeffs == (3,)
    with pytest.raises(PolyParseError):
        parse_tpoly("9", F9)


def test_parse_errors_report_position():
    with pytest.raises(PolyParseError) as err:
        parse_xpoly("x^2 + * t", F5)
    assert err.value.pos == 6
    for bad in ("", "x^", "(x + 1", "x0", "y", "x^-1"):
        with pytest.raises(PolyParseError):
            parse_xpoly(bad, F5)


def test_bare_x_needs_one_variable():
    with pytest.raises(PolyParseError):
        parse_xpoly("x + x2", F5)


def test_format_examples():
    assert str(parse_xpoly("x^2 - t", F5)) == "x^2 + 4*t"
    assert str(parse_xpoly("x2^2 + x1*x2^3", F5)) == "x1*x2^3 + x2^2"
    assert format_tpoly(parse_tpoly("t^2 + 1", F5)) == "t^2 + 1"
    assert str(XPoly.zero(F5, 1)) == "0"


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_format_parse_round_trip(data):
    F = data.draw(st.sampled_from(list(FIELDS.values())))
    nvars = data.draw(st.integers(0, 3))
    f = data.draw(xpolys(F, nvars))
    assert parse_xpoly(str(f), F, nvars=nvars) == f
    u = data.draw(tpolys(F))
    assert parse_tpoly(format_tpoly(u), F) == u
