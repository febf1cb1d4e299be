import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIELDS, tpolys, xpolys
from sqfsparse.polyring import TPoly, XPoly
from sqfsparse.polytext import parse_tpoly, parse_xpoly
from sqfsparse.sqfree import (
    OracleCeilingError,
    brute_divisors,
    brute_squarefree_oracle,
    brute_squarefree_oracle_f,
    is_separable_in_t,
    is_squarefree_f,
    is_squarefree_t,
    iter_xpolys,
    squarefree_t_fast,
)

F2, F3, F5, F4 = FIELDS[2], FIELDS[3], FIELDS[5], FIELDS[4]


def test_units_and_zero():
    assert is_squarefree_t(TPoly.constant(F5, 3))
    v = is_squarefree_t(TPoly(F5))
    assert not v and v.is_zero


def test_known_polynomials():
    assert is_squarefree_t(parse_tpoly("t^2 + 1", F3))
    v = is_squarefree_t(parse_tpoly("(t + 1)^2 * t", F3))
    assert not v and v.witness == parse_tpoly("t + 1", F3)


def test_pth_power_is_not_squarefree():
    # t^3 + 1 = (t + 1)^3 over F_3, derivative vanishes identically
    v = is_squarefree_t(parse_tpoly("t^3 + 1", F3))
    assert not v
    assert v.witness == parse_tpoly("t + 1", F3)


def test_irreducible_but_inseparable_does_not_occur_over_finite_fields():
    # t^2 + t + 1 over F_2 is irreducible and separable
    assert is_squarefree_t(parse_tpoly("t^2 + t + 1", F2))


@pytest.mark.parametrize("q", [2, 3])
def test_matches_oracle_on_small_degrees(q):
    F = FIELDS[q]
    for deg in range(0, 5):
        for low in itertools.product(range(q), repeat=deg):
            for lead in range(1, q):
                u = TPoly(F, low + (lead,))
                assert is_squarefree_t(u).is_squarefree == brute_squarefree_oracle(u)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_fast_variant_agrees(data):
    F = data.draw(st.sampled_from([F2, F3, F5, F4, FIELDS[9]]))
    u = data.draw(tpolys(F, 6))
    assert squarefree_t_fast(u.coeffs, F) == is_squarefree_t(u).is_squarefree


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_products_with_squares_are_detected(data):
    F = data.draw(st.sampled_from([F3, F5, F4]))
    s = data.draw(tpolys(F, 2))
    u = data.draw(tpolys(F, 3))
    if s.degree >= 1 and u:
        assert not is_squarefree_t(s * s * u)


def test_oracle_ceiling():
    with pytest.raises(OracleCeilingError):
        brute_squarefree_oracle(parse_tpoly("t + 1", F5))
    with pytest.raises(OracleCeilingError):
        brute_squarefree_oracle(TPoly(F2, [1] * 8))


# --- F_q[t][x] ------------------------------------------------------------------

def test_multivariate_examples():
    assert is_squarefree_f(parse_xpoly("x^2 - t", F5))
    assert not is_squarefree_f(parse_xpoly("x^2", F5))
    assert not is_squarefree_f(parse_xpoly("(x + t)^2 * (x + 1)", F5))
    assert not is_squarefree_f(parse_xpoly("t^2 * x", F5))        # square content
    assert is_squarefree_f(parse_xpoly("x*(x + t)", F5))
    assert is_squarefree_f(parse_xpoly("x^5 + t", F5))            # irreducible
    assert not is_squarefree_f(parse_xpoly("x^5 + t^5", F5))      # (x + t)^5
    assert is_squarefree_f(parse_xpoly("x1*x2 + t", F5))


def test_witness_divides_twice():
    f = parse_xpoly("(x1 + t*x2)^2 * (x1 + 1)", F5)
    v = is_squarefree_f(f)
    assert not v
    assert v.witness is not None and (v.witness * v.witness).divides(f)


def test_zero_is_rejected():
    with pytest.raises(ValueError):
        is_squarefree_f(XPoly.zero(F5, 1))


def test_matches_oracle_on_f2_small_box():
    checked = 0
    for f in iter_xpolys(F2, 1, (2, 2)):
        if f:
            assert is_squarefree_f(f).is_squarefree == brute_squarefree_oracle_f(f)
            checked += 1
    assert checked == 2**9 - 1


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_matches_oracle_two_variables(data):
    f = data.draw(xpolys(F3, 2, max_deg_t=1, max_deg_x=2))
    if f and f.deg_t + f.deg_xvec <= 4:
        assert is_squarefree_f(f).is_squarefree == brute_squarefree_oracle_f(f)


def test_brute_divisors():
    f = parse_xpoly("x*(x + t)", F2)
    divs = {str(s) for s in brute_divisors(f)}
    assert divs == {"x", "x + t", "x^2 + t*x"}


def test_separability():
    assert is_separable_in_t(parse_xpoly("t^2 - x", F5))
    assert not is_separable_in_t(parse_xpoly("t^5 - x", F5))
    with pytest.raises(ValueError):
        is_separable_in_t(parse_xpoly("x", F5))
