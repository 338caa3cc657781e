"""The degree-4 Desboves family on P^2.
========================================

A classical family fixing the point [0:1:0], the three coordinate lines,
and the Fermat cubic.  This script walks through its exact invariant
geometry: the resultant (bad reduction exactly at t = 0 and infinity),
the invariant curves with their image degrees, and a marked point of
positive canonical height obtained after the base change
t^3 = (1+s)/(1-s).
"""

from fractions import Fraction

from dynheight import (PlaneCurve, ProjPoint, bad_reduction, canonical_height,
                       classify_point, degree_growth, desboves, image_degree,
                       is_invariant_curve)
from dynheight.rationals import format_unipoly

f = desboves()
print("family:", f)
br = bad_reduction(f)
print("resultant:", format_unipoly(f.resultant))
print("bad reduction at infinity:", br.includes_infinity)

# invariant curves: three lines plus the Fermat cubic
for text in ("x", "y", "z", "x^3+y^3+z^3", "x+y"):
    c = PlaneCurve.parse(text)
    print(f"  {{{text} = 0}} invariant: {is_invariant_curve(f, c)}")

# the restriction to {y=0} is a degree-4 cover of the line, and the
# restriction to the cubic is an isogeny of topological degree 4
line = PlaneCurve.parse("y")
cubic = PlaneCurve.parse("x^3+y^3+z^3")
print("image degrees on the line:", image_degree(f, line))
print("image degrees on the cubic:", image_degree(f, cubic))

print("degree growth along the line:")
print(degree_growth(f, line, n_max=3).to_csv())

# Base change: over Q(t) with t^3 = (1+s)/(1-s), the intersection points
# of the critical cubic with {y=0} become rational marked points.
g = desboves("(t^3-1)/(t^3+1)")
P = ProjPoint.parse("[t, 0, -1]")
print("marked point:", P, "->", classify_point(g, P).kind)
est = canonical_height(g, P, tol=Fraction(1, 1000))
print("canonical height interval:", est.lo, "..", est.hi,
      "(the degree of the induced section t -> [t : -1])")
