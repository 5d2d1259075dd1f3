"""
Walk through the Coxeter-group layer: canonical words, lengths, descents,
Bruhat order and the transport witnesses.

Run with ``python demos/01_bruhat_basics.py``.
"""
from __future__ import annotations

from renner_order import type_A, type_B, affine_A1, transport_witnesses

W = type_A(3)
print(W, "has", len(W.enumerate(None, 6)), "elements")

# every word is stored as its ShortLex-least reduced word
x = W.elt([1, 0, 1, 2])
print("1 0 1 2 ->", x, "length", x.length)
print("reduced words:", sorted(W.reduced_words(x)))
print("left descents", sorted(W.descents(x, "left")), "right descents", sorted(W.descents(x, "right")))

w0 = W.longest_element()
print("longest element", w0, "of length", w0.length)

# Bruhat order: the number of comparable pairs in A3
els = W.enumerate(None, 6)
pairs = sum(W.bruhat_leq(u, v) for u in els for v in els)
print("comparable ordered pairs in A3:", pairs)

# transport witnesses replace "multiply both sides by w"
a, b, w = W.elt([0]), W.elt([0, 1, 0]), W.elt([1, 2])
wm, wp = transport_witnesses(a, b, w)
print(f"a={a} <= b={b}, w={w}: w_minus={wm}, w_plus={wp}")
print("  a*w_minus =", a * wm, "<= b*w =", b * w, W.bruhat_leq(a * wm, b * w))
print("  a*w =", a * w, "<= b*w_plus =", b * wp, W.bruhat_leq(a * w, b * wp))

# infinite groups work too, up to a length cap
A1 = affine_A1()
print("affine A1 up to length 3:", [str(z) for z in A1.enumerate(None, 3)])
print("finite?", A1.is_finite(cap=20))

B2 = type_B(2)
print("B2 longest element:", B2.longest_element())
