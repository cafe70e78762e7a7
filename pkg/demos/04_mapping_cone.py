"""Growing the resolution by one vertex with a mapping cone.

Row X1 is constant at the global minimum.  Deleting it leaves mu; phi maps
a twisted copy of the truncated F^mu into F^mu plus a truncated Taylor
complex, and Cone(phi) is isomorphic to the truncated F^omega by a pure
relabeling of bases.
"""
from cellres import EdgeWeighting, compose_is_zero, phi_psi_isomorphism
from cellres.chains import cone_of
from cellres.export import render_tag

w = EdgeWeighting.from_rows([[1, 1, 1], [2, 3, 4]])
data, cone, fbar = cone_of(w)
print("phi commutes:", data.phi.commutes()[0], " multigraded:", data.phi.is_multigraded())
print("cone ranks", cone.ranks(), " truncated F ranks", fbar.ranks())
for d in range(cone.top + 1):
    print(f"  degree {d}:", " ".join(render_tag(t) for t in cone.basis(d)))

# phi on the edge [1,12]
col = data.source.basis(1).index(next(f for f in data.source.basis(1) if str(f) == "[1,12]"))
for (r, c), v in sorted(data.phi[1].entries.items()):
    if c == col:
        print("  phi([1,12]) has", v, "on", render_tag(data.target.basis(1)[r]))

print("d∘d = 0 on the cone:", compose_is_zero(cone)[0])
print("Phi and Psi inverse chain isomorphisms:", phi_psi_isomorphism(cone, fbar).verified)
