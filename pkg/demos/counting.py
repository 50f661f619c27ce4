"""Counting antichains of root posets two ways.

Run: python demos/counting.py
"""
from rowvac import roots as rs

for label in ["A4", "B4", "C4", "D5", "G2", "F4", "E6", "E7", "E8"]:
    P = rs.build(label)
    enumerated = len(P.base.antichain_masks())
    print(f"{label:<3} degrees {rs.degrees(P)}  product {rs.catalan(P):>6}  enumerated {enumerated:>6}"
          f"  Narayana {rs.narayana(P)}")
