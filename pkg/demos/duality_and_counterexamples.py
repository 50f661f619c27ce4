"""Size duality under rowvacuation, and where it breaks.

Run: python demos/duality_and_counterexamples.py
"""
from rowvac import roots as rs
from rowvac import verify as vf

for label in ["A6", "B5", "D6", "G2", "F4", "E6"]:
    rep = vf.verify_panyushev(rs.build(label))
    print(rep.summary())

P = rs.build("F4")
A, R = vf.counterexample(P)
print("first F4 witness:", [P.label(e) for e in A], "->", [P.label(e) for e in R],
      f"sizes {len(A)} + {len(R)} against rank {P.rank_r}")
