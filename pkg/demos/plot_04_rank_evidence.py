"""
Looking for points of infinite order
====================================

A bounded search in ascending height. Finding a point proves rank >= 1;
finding none proves nothing.
"""

from diophantine_curves import evidence, triples

fermat = triples.induced_curve(triples.validate(1, 3, 8))
ev = evidence.rank_evidence(fermat, 3000)
print(ev.conclusion)
print("first infinite-order point:", ev.infinite_points[0])

# the fourth element d = 120 gives x = abc * d = 2880 on this model
print([str(pt) for pt in ev.infinite_points if pt.x == 2880])

# %%
# The Z2xZ4 example shows only torsion up to this height: the three points
# of order 2 and the two order-4 points with y > 0.
z2z4 = triples.induced_curve(triples.validate(3, "-1/3", "8/3"))
ev = evidence.rank_evidence(z2z4, 200)
print(len(ev.torsion_points), "torsion points;", ev.conclusion)
