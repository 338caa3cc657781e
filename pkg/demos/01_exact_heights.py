"""Canonical heights over Q(t), end to end.
=============================================

The quadratic family z^2 + t, viewed as an endomorphism of P^1 over the
rational function field, sends the marked point 0 to t, then t^2 + t, and
so on: the Weil height (max degree of coprime coordinates) doubles every
step, so the canonical height of the marked point is exactly 1/2.  The
library certifies this with a rational interval.
"""

from fractions import Fraction

from dynheight import ProjPoint, canonical_height, classify_point, unicritical

f = unicritical(2).to_endo(name="unicritical:2")
P = ProjPoint.parse("[0, 1]")

est = canonical_height(f, P, tol=Fraction(1, 10 ** 6))
print("certified interval:", est.lo, "..", est.hi)
print("iterations:", est.iterations_used)
print("height sequence:", est.heights[:8], "...")

# The stability trichotomy: escape above the certified ceiling proves the
# height positive with an exact rational lower bound.
verdict = classify_point(f, P)
print("verdict:", verdict.kind, "with lower bound", verdict.lower_bound)

# Constant points on an invariant line at infinity stay bounded without
# ever repeating: the third branch of the trichotomy.
from dynheight import skew_remark

g = skew_remark(2).endo
verdict = classify_point(g, ProjPoint.parse("[1, 2, 0]"), n_cap=50)
print("line-at-infinity constant:", verdict.kind,
      "heights all zero:", set(verdict.orbit_heights) == {0})
