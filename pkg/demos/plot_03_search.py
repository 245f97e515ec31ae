"""
Positive triples with torsion Z2xZ8
===================================

Walk the multiples of P = (0, 1) on Y^2 = X^3 + X^2 + X + 1, pull each one
back to the quartic parameter r, and keep the triples whose elements share a
sign.
"""

from diophantine_curves import ec_core, search
from diophantine_curves.qarith import format_rat

records = search.scan(11, verbose=True)
for rec in records:
    if rec.skipped:
        print(f"n={rec.n:2d} skipped: {rec.skip_reason}")
        continue
    print(f"n={rec.n:2d} r={format_rat(rec.r):48s} all positive: {rec.all_positive}")

# %%
six, eleven = search.candidates(records)
print("6P triple:", six.triple)
print("11P has", len(str(eleven.triple)), "characters")

# %%
# Translating by the 2-torsion point (-1, 0) just flips the sign of r.
pt = search.e1_multiple(4)
print(search.point_to_r(pt), search.point_to_r(ec_core.add(search.E1, pt, search.T1)))
