"""A single sparse family, end to end.

Take f = x^2 - t over F_5 and the one-parameter-pair family
u(β) = β_1 + β_2 t.  We build the vanishing polynomial P, list the β where
f(u(β)) fails to be square-free, and check that P vanishes on all of them.
"""
import itertools

from sqfsparse import SparseSpec, build_vanishing_poly, count_sparse, field_from_q, parse_tpoly, parse_xpoly
from sqfsparse.sqfree import is_squarefree_t

F = field_from_q(5)
f = parse_xpoly("x^2 - t", F)
spec = SparseSpec.single(parse_tpoly("1", F), parse_tpoly("t", F), parse_tpoly("0", F))

van = build_vanishing_poly(f, spec)
print(f"f = {f} over GF(5), family beta1 + beta2*t")
print(f"substituted polynomial: {van.psi}")
print(f"k = deg_t = {van.k}, P = {van.P} (degree {van.degree})")
print(f"bounds: C(N) = {van.bounds.char_bound}, degree bound = {van.bounds.deg_bound}")
print(f"hypotheses hold: {van.conditions.overall}")
print()

print("beta     value                    square-free   P(beta)")
for beta in itertools.product(range(5), repeat=2):
    value = f.evaluate_x(spec.member(list(beta)))
    sqf = bool(is_squarefree_t(value))
    pv = van.P.evaluate(beta)
    if not sqf or pv == 0:
        print(f"{beta}   {str(value):24s} {str(sqf):13s} {pv}")
print()

rep = count_sparse(f, spec)
print(f"square-free values: {rep.sqf_count} of {rep.total} (frequency {rep.frequency})")
print(f"zeros of P: {rep.p_zero_count}; every bad beta is among them: {rep.superset_check}")
print(f"error {rep.error} against the bound {rep.error_bound}")
