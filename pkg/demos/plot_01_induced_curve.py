"""
The curve attached to a triple
==============================

Fermat's set {1, 3, 8} and the points that come with its curve.
"""

from diophantine_curves import ec_core, triples

tr = triples.validate(1, 3, 8)
print(tr, "with r, s, t =", tr.r, tr.s, tr.t)

# y^2 = (x + ab)(x + ac)(x + bc)
curve = triples.induced_curve(tr)
print("roots:", [str(e) for e in curve.roots])

pts = triples.canonical_points(tr)
for name, pt in pts._asdict().items():
    print(f"{name}' = {pt}  order {ec_core.order_of(curve, pt) or 'inf'}")

# S' is always twice R'
assert ec_core.mul(curve, 2, pts.R) == pts.S

# c = a + b + 2r, so the triple is regular and S' is +-2P'
print("regular:", triples.is_regular(tr))
print("2P' =", ec_core.mul(curve, 2, pts.P))

# halving recovers R' (and its translates by 2-torsion)
for half in ec_core.halves_of(curve, pts.S):
    print("half of S':", half)
