"""
Substitutes for multiplying a Bruhat inequality ``a <= b`` by an element.

Products are classified by how lengths combine: ``a[]b`` when
l(ab) = l(a) + l(b), ``a|>b`` when l(ab) = l(a) - l(b) and ``a<|b`` when
l(ab) = -l(a) + l(b). The transport witnesses are built by scanning the
canonical reduced word of ``w`` left to right, so they are deterministic.
"""
from __future__ import annotations

import enum
from typing import Iterable

from .coxeter import Elt
from .errors import PreconditionFailed


class ProductShape(enum.Enum):
    BOX = "box"
    RIGHT_DROP = "right_drop"
    LEFT_DROP = "left_drop"
    GENERAL = "general"


def product_shape(a: Elt, b: Elt) -> frozenset[ProductShape]:
    """Every shape whose defining length equation holds for the product ab."""
    la, lb, lab = a.length, b.length, (a * b).length
    out = set()
    if lab == la + lb:
        out.add(ProductShape.BOX)
    if lab == la - lb:
        out.add(ProductShape.RIGHT_DROP)
    if lab == lb - la:
        out.add(ProductShape.LEFT_DROP)
    return frozenset(out or {ProductShape.GENERAL})


def is_box(a: Elt, b: Elt) -> bool:
    return (a * b).length == a.length + b.length


def is_right_drop(a: Elt, b: Elt) -> bool:
    return (a * b).length == a.length - b.length


def is_left_drop(a: Elt, b: Elt) -> bool:
    return (a * b).length == b.length - a.length


def transport_witnesses(a: Elt, b: Elt, w: Elt) -> tuple[Elt, Elt]:
    """
    For a <= b return ``(w_minus, w_plus)``, both subwords of ``w``, with

    - a * w_minus <= b * w and l(a w_minus) = l(a) - l(w_minus);
    - a * w <= b * w_plus and l(b w_plus) = l(b) + l(w_plus).

    If l(aw) = l(a) - l(w) then w_minus = w; if l(bw) = l(b) + l(w) then
    w_plus = w.
    """
    W = a.system
    if not W.bruhat_leq(a, b):
        raise PreconditionFailed(f"transport needs a <= b, got a={a}, b={b}")
    w_minus = W.identity
    w_plus = W.identity
    a_cur = a  # a * w_minus
    b_cur = b  # b * w_plus
    for s in w.word:
        step = W.rmul(a_cur, s)
        if step.length < a_cur.length:
            w_minus = W.rmul(w_minus, s)
            a_cur = step
        step = W.rmul(b_cur, s)
        if step.length > b_cur.length:
            w_plus = W.rmul(w_plus, s)
            b_cur = step
    return w_minus, w_plus


def transport_witnesses_left(a: Elt, b: Elt, w: Elt) -> tuple[Elt, Elt]:
    """
    Left-handed version obtained through the inverse map: for a <= b returns
    ``(w_minus, w_plus)`` with w_minus * a <= w * b (l(w_minus a) = l(a) -
    l(w_minus)) and w * a <= w_plus * b (l(w_plus b) = l(w_plus) + l(b)).
    """
    m, p = transport_witnesses(a.inverse(), b.inverse(), w.inverse())
    return m.inverse(), p.inverse()


def peel_right(a: Elt, b: Elt, v: Elt) -> Elt:
    """
    Given a <= b v, return v' <= v with l(a v'^-1) = l(a) - l(v') and
    a v'^-1 <= b.
    """
    W = a.system
    bv = b * v
    if not W.bruhat_leq(a, bv):
        raise PreconditionFailed(f"peel_right needs a <= b*v, got a={a}, b={b}, v={v}")
    w_minus, _ = transport_witnesses(a, bv, v.inverse())
    return w_minus.inverse()


def lift_right(a: Elt, b: Elt, v: Elt) -> Elt:
    """
    Given a v <= b, return v' <= v with l(b v'^-1) = l(b) + l(v') and
    a <= b v'^-1.
    """
    W = a.system
    av = a * v
    if not W.bruhat_leq(av, b):
        raise PreconditionFailed(f"lift_right needs a*v <= b, got a={a}, b={b}, v={v}")
    _, w_plus = transport_witnesses(av, b, v.inverse())
    return w_plus.inverse()


def check_cancel(a: Elt, b: Elt, w: Elt, case: str) -> bool:
    """
    Cancelling rule predicate. ``case='drop'`` requires l(bw) = l(b) - l(w)
    (then aw <= bw forces a <= b); ``case='box'`` requires l(aw) = l(a) + l(w)
    (same conclusion). Returns whether a <= b.
    """
    if case == "drop":
        if not is_right_drop(b, w):
            raise PreconditionFailed("drop case needs l(bw) = l(b) - l(w)")
    elif case == "box":
        if not is_box(a, w):
            raise PreconditionFailed("box case needs l(aw) = l(a) + l(w)")
    else:
        raise ValueError(f"case must be 'drop' or 'box', not {case!r}")
    return a.system.bruhat_leq(a, b)


def existence_conditions(a: Elt, b: Elt, candidates: Iterable[Elt]) -> dict[str, bool]:
    """
    Evaluate the four existential statements over a downward-closed
    candidate family V:

    ``i``   some v with a <= b v;      ``ii``  some v with a v^-1 <= b;
    ``i'``  some v with a <= b[]v;     ``ii'`` some v with a|>v^-1 <= b.

    They are equivalent whenever V is closed under going down in Bruhat order.
    """
    W = a.system
    leq = W.bruhat_leq
    out = {"i": False, "ii": False, "i'": False, "ii'": False}
    for v in candidates:
        vi = v.inverse()
        bv = b * v
        avi = a * vi
        if not out["i"] and leq(a, bv):
            out["i"] = True
        if not out["ii"] and leq(avi, b):
            out["ii"] = True
        if not out["i'"] and bv.length == b.length + v.length and leq(a, bv):
            out["i'"] = True
        if not out["ii'"] and avi.length == a.length - v.length and leq(avi, b):
            out["ii'"] = True
    return out
