"""Antichains of type A as noncrossing matchings and permutations.

Run: python demos/type_a_bijection.py
"""
from rowvac import bijection as bj
from rowvac import roots as rs
from rowvac.weyl import format_cycles

P = rs.build("A9")
A = P.from_intervals([(1, 3), (2, 6), (3, 7), (4, 8), (5, 9), (8, 10)])
D = bj.phi_diagram_A(P, A)
print("chords of the relabelled diagram:")
print(D.to_text())
print("noncrossing:", D.is_noncrossing())
print("permutation:", format_cycles(bj.theta_A(P, A), fixed_points=True))
print("uniform recursion agrees:", bj.theta_A(P, A) == bj.theta_uniform(P, A))

# row composed with Rvac acts on diagrams as a reflection
B = P.base.row_mask(P.base.rvac_mask(P.base.mask_of(A)))
image = bj.phi_diagram_A(P, [e for e in range(P.size) if B >> e & 1])
print("reflection matches row . Rvac:", bj.reflect_through_M(D) == image)
