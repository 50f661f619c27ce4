"""Noncrossing partitions of a Weyl group and their complements.

Run: python demos/noncrossing_lattice.py
"""
from rowvac.weyl import WeylGroup, format_cycles

W = WeylGroup("B", 3)
NC = W.nc_lattice()
print(f"Coxeter element c = {format_cycles(W.c)}, |NC| = {len(NC)}, rank counts {NC.rank_counts()}")

w = sorted(NC.elements, key=lambda x: (x.absolute_length(), format_cycles(x)))[4]
print(f"w           = {format_cycles(w)}")
print(f"Krew(w)     = {format_cycles(NC.kreweras(w))}")
print(f"Flip(w)     = {format_cycles(NC.flip(w))}")
print(f"Kreweras map has order {NC.kreweras_order}")
