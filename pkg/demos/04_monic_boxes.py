"""Monic polynomials of fixed degree as a union of sparse families.

Every monic u of degree m >= 2 splits uniquely as β_1 t + β_2 + c with c
monic of degree m having no t^0, t^1 terms.  So the square-free count of
f(u) over all such u equals the sum over c of the sparse-family counts with
a = t, b = 1.  This script checks that identity exactly.
"""
from sqfsparse import count_monic_box, field_from_q, parse_xpoly

cases = [(2, "x", [3]), (3, "x", [3]), (3, "x^2 + t", [3]), (2, "x1*x2 + t", [2, 2]), (2, "x1 + x2^2", [2, 2])]
for q, text, m in cases:
    F = field_from_q(q)
    rep = count_monic_box(parse_xpoly(text, F, nvars=len(m)), m)
    print(f"q={q}  f={text:10s} m={m}:  direct {rep.sqf_count:4d} / {rep.total:<5d} "
          f"via {rep.classes} families {rep.decomposed_count:4d}   equal: {rep.decomposition_check}")
