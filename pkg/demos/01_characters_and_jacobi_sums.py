"""Characters of order four modulo 17 and 289, and the Jacobi sums built
from them.

Run:  python demos/01_characters_and_jacobi_sums.py
"""

import numpy as np

from peisert import build_unit_group, chi4, eval_z4, jacobi_exact, quadratic, trivial
from peisert import charsums as cs

# Z_17^* is cyclic; the smallest generator is 3 and dlog(-1) = phi/2.
G = build_unit_group(17)
print(G, "dlog(-1) =", G.log(-1))

# chi4 sends g to i.  Its values on Z_17 are fourth roots of unity (or 0).
chi = chi4(G)
print("chi4 on 0..16:", " ".join(str(eval_z4(chi, x)) for x in range(17)))

# Exact Jacobi sums live in Z[i].
rho, xi = cs.rho_xi(chi)
print("J(chi4, chi4) =", rho, "  J(chi4, phi) =", xi, "  |rho|^2 =", rho.norm())
print("J(eps, eps) =", jacobi_exact(trivial(G), trivial(G)))
print("J(chi4, phi) conj =", jacobi_exact(chi.conj(), quadratic(G)))

# Moving to q = 17^2 multiplies the order-4 Jacobi sum by p.
rho289, _ = cs.rho_xi(chi4(build_unit_group(17, 2)))
print("J(chi4, chi4) mod 289 =", rho289, "= 17 *", rho)

# One FFT gives J(chi4 psi, conj psi) for every psi in the dual group.  Where
# one argument is trivial the sum is -1; otherwise its norm is p.
fam = cs.jacobi_family(chi, trivial(G), 1, -1)
print("family sizes |J|^2:", np.round(np.abs(fam) ** 2, 6))

# The binomial coefficient identities hold exactly for every pair in <chi4>^2.
bad = [(a, b) for a in range(4) for b in range(4)
       for lhs, rhs in cs.binomial_identities(chi**a, chi**b).values() if lhs != rhs]
print("binomial identity failures:", bad)
