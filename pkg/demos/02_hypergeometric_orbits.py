"""The q^2-scaled 3F2 values at 1 with order-4 parameters, and the orbits of
the 24-element group of parameter maps.

Run:  python demos/02_hypergeometric_orbits.py
"""

import json

from peisert import X_TUPLES, build_unit_group, chi4, f32_charsum, f32_exact
from peisert import hypergeometric as hg

chi = chi4(build_unit_group(17))

print(len(X_TUPLES), "admissible parameter tuples")
print("M3 =", hg.m3(chi), "  M5 =", hg.m5(chi))

# The dual-group definition agrees with the exact double sum.
t = (3, 1, 1, 2, 2)
print(f"{t}: exact {f32_exact(t, chi)}  dual-group {f32_charsum(t, chi):.6f}")

# Seven maps generate a group of order 24 acting on the tuples.
group = hg.group_closure()
print("group order:", len(group))
for o in hg.orbits():
    print(f"  orbit of {o[0]} ({len(o):2d} tuples): value {f32_exact(o[0], chi)}")

# The orbit listing as JSON.
print(json.dumps(hg.orbit_report((1, 3, 3, 2, 0), chi)))
