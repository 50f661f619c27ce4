"""Rowmotion and rowvacuation on a small root poset.

Run: python demos/rowmotion_orbits.py
"""
from rowvac import roots as rs
from rowvac.export import format_antichain
from rowvac.poset import cycles_of, orbit, permutation_of, rowvacuation

P = rs.build("A3")
print(f"{P.type_label}: {P.size} positive roots, Coxeter number {P.coxeter_h}")

# every rowmotion orbit has the same average antichain size
masks, perm = permutation_of(P.base, "row")
for cyc in cycles_of(perm):
    start = [e for e in range(P.size) if masks[cyc[0]] >> e & 1]
    orb = orbit(P.base, start, "row")
    print(f"orbit of size {len(cyc):2d} from {format_antichain(P, start):<16} average {orb.average_cardinality}")

# rowvacuation is an involution that reverses sizes: #A + #Rvac(A) = rank
for A in P.base.antichains()[:6]:
    R = rowvacuation(P.base, A)
    print(f"{format_antichain(P, A):<20} -> {format_antichain(P, R):<20} sizes {len(A)} + {len(R)}")
