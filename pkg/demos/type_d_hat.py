"""Lifting a type D antichain into type A.

Run: python demos/type_d_hat.py
"""
from rowvac import bijection as bj
from rowvac import roots as rs
from rowvac.export import format_antichain, parse_antichain
from rowvac.weyl import format_cycles

P = rs.build("D6")
A = parse_antichain(P, "e1-e3, e2-e6, e3+e6, e4+e5")
h = bj.hat(P, A)
print("A            :", format_antichain(P, A))
print("unfolded     :", format_antichain(h.poset, h.unfolded))
print("kept         :", ",".join(f"[{i},{j}]" for i, j in h.q_intersection))
print("lifted       :", format_antichain(h.poset, h.result))

part = bj.theta_D_partial(P, A)
print("chord values :", dict(sorted(part.values.items())), "x =", part.x, "y =", part.y)
print("full map     :", format_cycles(bj.theta_uniform(P, A)))
