"""Why the two hypotheses are needed.

Scenario 1 breaks the coprimality of a and b: with a = t, b = t^2 every value
of x(x + t) is divisible by t^2, so nothing is square-free.

Scenario 2 puts b/a = t^p inside F_q(t^p) in small characteristic: the
values β_1 + β_2 t^p are p-th powers, and only the nonzero constants survive.
"""
from sqfsparse import field_from_q, run_counterexamples

print(" q   scenario   square-free / total   frequency   expected")
for q in (2, 3, 4, 5, 7, 8, 9):
    rep = run_counterexamples(field_from_q(q))
    for sc in rep["scenarios"]:
        r = sc["report"]
        print(f"{q:2d}   {sc['name']:9s}  {r['sqf_count']:6d} / {r['total']:<6d}      {r['frequency']:>9s}   "
              f"{sc['expect']} -> {'ok' if sc['passed'] else 'FAILED'}")
