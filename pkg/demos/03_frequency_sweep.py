"""The error term shrinking like 1/q.

For f = x^2 + x - t on the family β_1 + β_2 t we count square-free values
exactly for several q and print the observed error 1 - frequency next to the
guaranteed bound (degree bound)/q.  Everything is an exact fraction.
"""
from fractions import Fraction

from sqfsparse import frequency_sweep

rows = frequency_sweep("x^2 + x - t", "1", "t", "0", [3, 4, 5, 7, 8, 9, 11, 13, 16])
print(" q   total   square-free   error      bound     status")
for row in rows:
    r = row["report"]
    err, bound = Fraction(r["error"]), Fraction(r["error_bound"])
    print(f"{row['q']:2d}  {r['total']:5d}   {r['sqf_count']:9d}     {float(err):.4f}    {float(bound):.4f}    {row['status']}")
