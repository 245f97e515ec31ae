"""Elliptic curves induced by rational Diophantine triples.

Exact rational arithmetic throughout; see the submodules:

* :mod:`.qarith`   -- rationals, exact roots, ``p/q`` text format
* :mod:`.ec_core`  -- group law, orders, j-invariant, isomorphism, halving
* :mod:`.triples`  -- validation, induced curve, canonical points, regularity
* :mod:`.torsion`  -- order-of-S criteria and torsion classification
* :mod:`.families` -- parametric families with Z/2xZ/4, Z/2xZ/6, Z/2xZ/8 torsion
* :mod:`.search`   -- multiples of (0,1) on Y^2 = X^3+X^2+X+1 -> same-sign triples
* :mod:`.evidence` -- bounded point search for rank lower bounds
"""

from .ec_core import (
    IDENTITY,
    Curve,
    MonicCurve,
    Point,
    add,
    halves_of,
    is_isomorphic_over_Q,
    j_invariant,
    mul,
    negate,
    on_curve,
    order_of,
    short_form,
)
from .evidence import rank_evidence
from .families import (
    all_same_sign,
    mixed_sign_family,
    sign_pattern,
    z2z6_family,
    z2z6_family_t,
    z2z8_family,
)
from .qarith import Rat, format_rat, is_perfect_square, parse_rat, rat, sqrt_exact
from .search import scan, verify_family_T
from .torsion import TorsionClass, classify, classify_triple, order_consistency
from .triples import Triple, canonical_points, induced_curve, is_regular, validate

__version__ = "0.1.0"
