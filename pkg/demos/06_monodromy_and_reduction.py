"""Local-system transport, wall loops, and the rank-one reduction.

Anodyne steps inside one stratum transport stalks by invertible maps.
Circling a wall gives the monodromy of the associated local system: the
regular swap for orbit functions, a Hecke-type operator with eigenvalues
q and -1 for finite-field functions.  The rank-one reduction packages a
sheaf into two spaces with maps both ways and an invertible Id - uv.
"""

from mbsheaf import (
    RationalMatrix, build_coxeter, build_e1, build_e1v, build_eq, enumerate_xi,
    monodromy, phi_psi, rep_catalog, standard_loops,
)
from mbsheaf.io import xi_id

xi = enumerate_xi(build_coxeter("A", 1))
(loop,) = standard_loops(xi)
print("the loop around the single wall visits:",
      " -> ".join(xi_id(xi, m) for m in loop))

e1 = build_e1(xi)
print(f"\nE_1 monodromy (regular representation of Z/2):")
for row in monodromy(e1, loop).rows:
    print(f"  {row}")

for q in (2, 3):
    eq = build_eq(2, q, poset=xi)
    mono = monodromy(eq, loop)
    size = mono.nrows
    ident = RationalMatrix.identity(size)
    first = ((mono - ident.scale(q)) @ (mono + ident)).is_zero()
    print(f"\nE_q monodromy for q={q} on Fun(P^1(F_{q})) "
          f"satisfies (M-{q})(M+1)=0: {first}")

print("\nrank-one reductions (Phi, Psi, T = Id - uv):")
for name, sheaf in [("E_1", e1),
                    ("E_1^sign", build_e1v(xi, rep_catalog(xi.datum, "sign"))),
                    ("E_q(q=2)", build_eq(2, 2, poset=xi)),
                    ("E_q(q=3)", build_eq(2, 3, poset=xi))]:
    pp = phi_psi(sheaf)
    print(f"  {name:<10} Phi dim {pp.phi_dim}, Psi dim {pp.psi_dim}, "
          f"T invertible: {pp.t_invertible}")

print("\nrank-two wall loops (one per hyperplane orbit):")
xi_b2 = enumerate_xi(build_coxeter("B", 2))
for k, lp in enumerate(standard_loops(xi_b2)):
    mono = monodromy(build_e1(xi_b2), lp)
    order = 1
    acc = mono
    ident = RationalMatrix.identity(mono.nrows)
    while acc != ident:
        acc = acc @ mono
        order += 1
    print(f"  loop {k}: monodromy of E_1 has order {order}")
