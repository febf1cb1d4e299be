import itertools
from fractions import Fraction

import pytest

from conftest import FIELDS
from sqfsparse.harness import (
    CeilingExceeded,
    count_monic_box,
    count_sparse,
    field_info,
    frequency_sweep,
    run_counterexamples,
    schmidt_check,
)
from sqfsparse.polyring import TPoly
from sqfsparse.polytext import parse_tpoly, parse_xpoly
from sqfsparse.sparse import NotSquareFreeError, SparseSpec
from sqfsparse.sqfree import is_squarefree_t

F2, F3, F4, F5 = FIELDS[2], FIELDS[3], FIELDS[4], FIELDS[5]


def spec1(F, a, b, c):
    return SparseSpec.single(parse_tpoly(a, F), parse_tpoly(b, F), parse_tpoly(c, F))


def brute_count(f, spec):
    F = f.field
    return sum(bool(is_squarefree_t(f.evaluate_x(spec.member(list(beta)))))
               for beta in itertools.product(range(F.q), repeat=2 * spec.d))


def test_field_info():
    info = field_info(FIELDS[8])
    assert info == {"spec": "2^3", "p": 2, "n": 3, "q": 8, "modulus": [1, 1, 0, 1]}


def test_pinned_count_q5():
    # values beta_1 + beta_2 t over ... squared minus t; bad set is beta_1 beta_2 = 4
    rep = count_sparse(parse_xpoly("x^2 - t", F5), spec1(F5, "1", "t", "0"))
    assert rep.total == 25
    assert rep.sqf_count == 21
    assert rep.bad_count == 4
    assert rep.frequency == Fraction(21, 25)
    assert rep.superset_check and rep.guaranteed and rep.passed


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_count_matches_brute_force(q):
    F = FIELDS.get(q)
    for f_text, a, b, c in [("x^2 + x - t", "1", "t", "0"), ("t*x^2 + x + 1", "t", "t + 1", "1")]:
        f, s = parse_xpoly(f_text, F), spec1(F, a, b, c)
        assert count_sparse(f, s).sqf_count == brute_count(f, s)


def test_two_variable_count_matches_brute_force():
    F = F3
    f = parse_xpoly("x1*x2 + t", F)
    s = SparseSpec((TPoly.t(F), TPoly.constant(F, 1)), (TPoly.constant(F, 1), TPoly.t(F)),
                   (TPoly(F), TPoly(F)))
    rep = count_sparse(f, s)
    assert rep.total == 81
    assert rep.sqf_count == brute_count(f, s)
    assert rep.superset_check


def test_parallel_count_matches_serial():
    F = FIELDS[9]
    f, s = parse_xpoly("x^2 + x - t", F), spec1(F, "1", "t", "0")
    serial = count_sparse(f, s, workers=1)
    parallel = count_sparse(f, s, workers=3)
    a, b = serial.to_dict(), parallel.to_dict()
    a.pop("runtime_ms"), b.pop("runtime_ms")
    assert a == b


def test_grid_rows():
    rep = count_sparse(parse_xpoly("x^2 - t", F5), spec1(F5, "1", "t", "0"), emit_grid=True)
    assert len(rep.grid) == 25
    assert rep.grid[0][0] == (0, 0)
    assert sum(sqf for _, sqf, _ in rep.grid) == 21
    assert all(pz for _, sqf, pz in rep.grid if not sqf)


def test_refusals():
    with pytest.raises(NotSquareFreeError):
        count_sparse(parse_xpoly("x^2", F5), spec1(F5, "1", "t", "0"))
    with pytest.raises(CeilingExceeded):
        count_sparse(parse_xpoly("x^2 - t", F5), spec1(F5, "1", "t", "0"), ceiling=24)


def test_counterexample_gcd_has_no_squarefree_values():
    for q in (2, 3, 5):
        rep = run_counterexamples(FIELDS[q])
        assert rep["scenarios"][0]["report"]["sqf_count"] == 0
        assert rep["passed"]


def test_counterexample_frobenius_only_units_survive():
    # beta_1 + beta_2 t^p + ... : square-free exactly for the q - 1 nonzero constants
    rep = run_counterexamples(F4)
    s2 = rep["scenarios"][1]["report"]
    assert s2["sqf_count"] == 3
    assert Fraction(s2["frequency"]) <= Fraction(1, 4)


def test_monic_box_small():
    rep = count_monic_box(parse_xpoly("x", F2), [2])
    # monic quadratics over F_2 that are square-free: t^2 + t, t^2 + t + 1
    assert rep.total == 4 and rep.sqf_count == 2
    assert rep.decomposition_check


def test_monic_box_direct_count_against_enumeration():
    F = F3
    rep = count_monic_box(parse_xpoly("x", F), [3])
    brute = sum(bool(is_squarefree_t(TPoly(F, low + (1,)))) for low in itertools.product(range(3), repeat=3))
    assert rep.sqf_count == brute == 18
    assert rep.classes == 3


def test_monic_box_two_variables():
    rep = count_monic_box(parse_xpoly("x1*x2 + t", F2, nvars=2), [2, 2])
    assert rep.decomposition_check and rep.classes == 1


def test_monic_box_validation():
    with pytest.raises(ValueError):
        count_monic_box(parse_xpoly("x", F2), [1])
    with pytest.raises(CeilingExceeded):
        count_monic_box(parse_xpoly("x", F3), [4], ceiling=10)


def test_schmidt_check():
    res = schmidt_check(parse_xpoly("x1*x2", F3).as_coef(), F3)
    assert (res.zeros, res.bound, res.ok) == (5, 6, True)
    with pytest.raises(ValueError):
        schmidt_check(parse_xpoly("0", F3, nvars=1).as_coef(), F3)


def test_sweep_rows():
    rows = frequency_sweep("x^2 + x - t", "1", "t", "0", [3, 4, 5])
    assert [r["q"] for r in rows] == [3, 4, 5]
    assert all(r["status"] == "pass" for r in rows)
    for r in rows:
        rep = r["report"]
        assert Fraction(rep["error"]) <= Fraction(rep["error_bound"])


def test_sweep_marks_rows_without_guarantee():
    rows = frequency_sweep("x - t", "1", "t^p", "t", [4])
    assert rows[0]["status"] == "no guarantee"
