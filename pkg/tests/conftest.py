import itertools

from hypothesis import strategies as st

from sqfsparse.ffield import field_from_q
from sqfsparse.polyring import TPoly, XPoly

FIELDS = {q: field_from_q(q) for q in (2, 3, 4, 5, 7, 8, 9)}


def tpolys(F, max_deg=4):
    return st.lists(st.integers(0, F.q - 1), max_size=max_deg + 1).map(lambda cs: TPoly(F, cs))


def xpolys(F, nvars, max_deg_t=2, max_deg_x=2, max_terms=6):
    monos = [e for e in itertools.product(range(max_deg_t + 1), *(range(max_deg_x + 1),) * nvars)
             if sum(e[1:]) <= max_deg_x]
    return st.dictionaries(st.sampled_from(monos), st.integers(1, F.q - 1), max_size=max_terms).map(
        lambda terms: XPoly(F, nvars, terms))
