"""A numerical witness that the Desboves family bifurcates.
===========================================================

For families of endomorphisms of P^2, J-stability is pluriharmonicity of
the Lyapunov function, equivalently vanishing of the bifurcation current
of the critical divisor.  The scan below averages the fibered Green
potential over slices of the critical curve and takes the parameter-plane
Laplacian: mass far above the noise floor of an isotrivial control run is
a witness of non-J-stability.  (Vanishing could never be certified this
way, only reported as below the floor.)

Also demonstrates the Lyapunov Monte Carlo on the invariant line, where
the restriction is a Lattes map: the exponent is (1/2) log 4 = log 2.
"""

import math

from dynheight import (ComplexEndo, desboves, lyapunov, make_endo, parse_expr,
                       stability_indicator)

V2 = ("x", "y")
V3 = ("x", "y", "z")

rect = (0.1, 2.0, -0.5, 0.5)
scan = stability_indicator(desboves(), rect, 128, seed=11, n_iter=32)

frozen = make_endo([parse_expr(s, V3) for s in (
    "-x*(x^3+2*z^3)", "y*(z^3-x^3+1*(x^3+y^3+z^3))", "z*(2*x^3+z^3)")],
    name="desboves-frozen")
control = stability_indicator(frozen, rect, 128, seed=11, n_iter=32)

print(f"indicator (max |Laplacian|): {scan.max_indicator():.3e}")
print(f"isotrivial control floor:    {control.noise_floor():.3e}")
print(f"witness: {scan.max_indicator() > 5 * max(control.noise_floor(), 1e-14)}")

# the Lattes restriction to the invariant line {y = 0}
lattes = make_endo([parse_expr("-x*(x^3+2*y^3)", V2),
                    parse_expr("y*(2*x^3+y^3)", V2)], name="lattes4")
L = lyapunov(ComplexEndo(lattes, 0.0), n_orbit=125, n_samples=100000, seed=5)
print(f"Lattes Lyapunov exponent: {L.value:.5f} +- {L.stderr:.5f} "
      f"(log 2 = {math.log(2):.5f})")
