"""Stalk complexes and the perversity support conditions.

Each cell gets an explicit complex built from the first-order maps with
alternating signs; its cohomology must sit on strata of small enough
dimension, on both sides of the duality, with constant profile along each
stratum.  For the orbit-function sheaf everything is concentrated in the
single degree -rank.
"""

from mbsheaf import (
    build_coxeter, build_e1, build_eq, constructibility_check,
    coperversity_check, enumerate_xi, stalk_complex, support_check,
)
from mbsheaf.io import xi_id

xi = enumerate_xi(build_coxeter("A", 2))
e1 = build_e1(xi)

origin = next(m for m, e in enumerate(xi.elements) if e.typeIJ == ((0, 1), (0, 1)))
sc = stalk_complex(e1, origin)
print(f"stalk complex of E_1(A2) at the origin cell {xi_id(xi, origin)}:")
for deg in sc.degrees:
    labels = ", ".join(f"{set(I) or '{}'}|{n}" for I, n in sc.labels[deg])
    print(f"  degree {deg:+d}: dim {sc.dims[deg]:2d}   blocks: {labels}")
print(f"cohomology: { {d: h for d, h in sc.cohomology.items() if h} }")
print(f"Euler characteristic: {sc.euler_characteristic()}")

print("\nperversity suite on E_1(A2):")
print(f"  support:          {support_check(e1).summary()}")
print(f"  dual-side:        {coperversity_check(e1).summary()}")
print(f"  constructibility: {constructibility_check(e1).summary()}")

print("\nsame suite for E_q(3,2):")
eq = build_eq(3, 2, poset=xi)
print(f"  support:          {support_check(eq).summary()}")
print(f"  dual-side:        {coperversity_check(eq).summary()}")
print(f"  constructibility: {constructibility_check(eq).summary()}")

print("\ncohomology profiles along the open stratum (must be constant):")
s0, _, _ = xi.stratification_classes()
open_class = next(cls for cls in s0 if xi.elements[cls[0]].flat.dim == 2)
profiles = {stalk_complex(e1, m).cohomology_profile() for m in open_class}
print(f"  {len(open_class)} open cells, {len(profiles)} distinct profile(s): {profiles}")
