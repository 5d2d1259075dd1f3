"""
The four extended orders on W(N, C) for A3 with N = {0, 2} and C = {2}.

Elements are normal forms a|c|b with a in W^N, c in W_{N\\C} and b in ^N W.
"""
from __future__ import annotations

import numpy as np

from renner_order import ALL_SIGNS, OrbitContext, type_A

W = type_A(3)
ctx = OrbitContext(W, N={0, 2}, C={2})
xs = ctx.elements(6)
print(len(xs), "orbit elements")

x = ctx.canonicalize(W.elt([1, 0]), W.elt([2, 1]))
print("raw (1 0, 2 1) has normal form", x)
print("normal form I:", *map(str, ctx.normal_form_I(x)), " normal form II:", *map(str, ctx.normal_form_II(x)))
for sign in ALL_SIGNS:
    print(f"  l{sign}({x}) = {ctx.ext_length(x, sign)}")

# each order as a boolean matrix
for sign in ALL_SIGNS:
    R = np.array([[ctx.ext_leq(p, q, sign) for q in xs] for p in xs])
    minimal = [str(xs[j]) for j in range(len(xs)) if R[:, j].sum() == 1]
    maximal = [str(xs[i]) for i in range(len(xs)) if R[i].sum() == 1]
    print(f"{sign}: {R.sum()} comparable pairs, minimal {minimal}, maximal {maximal}")

# different characterizations give the same answer
y = ctx.canonicalize(W.elt([1, 0, 2, 1]), W.identity)
for variant in ("i", "ii", "iii", "iv", "i'", "ii'", "iii'", "iv'"):
    print(variant, ctx.ext_witness(ctx.e, y, "++", variant))

# the involution swaps ++ and --
print("inv", x, "=", ctx.involution(x))
