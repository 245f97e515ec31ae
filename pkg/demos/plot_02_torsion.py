"""
Torsion of induced curves
=========================

One triple for each torsion group beyond Z2xZ2, plus the families that
produce them.
"""

from fractions import Fraction as F

from diophantine_curves import families, torsion, triples

examples = {
    "mixed-sign family, u=1, t=2": families.mixed_sign_family(1, 2),
    "Z2xZ6 family, t=4": families.z2z6_family_t(4),
    "Z2xZ8 family, T=2": families.z2z8_family(2),
    "Fermat": triples.validate(1, 3, 8),
}

for label, tr in examples.items():
    report = torsion.order_consistency(tr)
    print(f"{label:30s} {str(tr):28s} {torsion.classify_triple(tr).value}"
          f"  ord S' = {report.s_order or 'inf'}")

# %%
# The algebraic conditions on (a, b, c) track the order of S' exactly.
tr = examples["Z2xZ6 family, t=4"]
print("3S' condition:", torsion.lemma_3S_value(tr))

# %%
# Neither Z2xZ6 family has all three elements of one sign.
for t in (F(1, 3), 3, F(-5, 2)):
    tr = families.z2z6_family_t(t)
    print(t, families.sign_pattern(tr))
