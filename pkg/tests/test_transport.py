from __future__ import annotations

import itertools

import pytest

from renner_order import (
    PreconditionFailed,
    ProductShape,
    check_cancel,
    existence_conditions,
    lift_right,
    peel_right,
    product_shape,
    transport_witnesses,
    transport_witnesses_left,
)
from renner_order.verify import transport_violations


def test_product_shapes(A2):
    e, s0, s1 = A2.identity, A2.elt([0]), A2.elt([1])
    assert product_shape(s0, s1) == {ProductShape.BOX}
    # l(s0 s0) = 0 = 1 - 1 satisfies both drop equations
    assert product_shape(s0, s0) == {ProductShape.RIGHT_DROP, ProductShape.LEFT_DROP}
    assert product_shape(s0, e) == {ProductShape.BOX, ProductShape.RIGHT_DROP}
    assert product_shape(e, e) == {ProductShape.BOX, ProductShape.RIGHT_DROP, ProductShape.LEFT_DROP}
    assert product_shape(s0, A2.elt([0, 1])) == {ProductShape.LEFT_DROP}
    # l(0 1 . 1 0) = 0 is none of the three
    assert product_shape(A2.elt([1, 0]), A2.elt([1, 0])) == {ProductShape.GENERAL}


def test_witnesses_trivial(A2):
    a, b = A2.elt([0]), A2.elt([0, 1, 0])
    assert transport_witnesses(a, b, A2.identity) == (A2.identity, A2.identity)
    wm, wp = transport_witnesses(a, b, A2.elt([1]))
    assert A2.bruhat_leq(a * A2.elt([1]), b * wp)
    assert (b * wp).length == b.length + wp.length
    assert wp in (A2.identity, A2.elt([1]))


def test_witnesses_precondition(A2):
    with pytest.raises(PreconditionFailed):
        transport_witnesses(A2.elt([0, 1]), A2.elt([1, 0]), A2.elt([0]))


def test_in_addition_clauses(A3):
    # a = b and w shortens a: w_minus must be w itself
    a = A3.elt([0, 1, 0, 2])
    w = A3.elt([2, 0])
    assert (a * w).length == a.length - w.length
    assert transport_witnesses(a, a, w)[0] == w


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_witness_postconditions_exhaustive(name, request):
    W = request.getfixturevalue(name)
    els = W.enumerate(None, 6)
    ws = [w for w in els if w.length <= 4]
    for a, b in itertools.product(els, els):
        if W.bruhat_leq(a, b):
            for w in ws:
                assert transport_violations(a, b, w) == []


def test_witness_postconditions_affine(aff):
    els = aff.enumerate(None, 6)
    for a, b in itertools.product(els, els):
        if aff.bruhat_leq(a, b):
            for w in els:
                assert transport_violations(a, b, w) == []


def test_left_witnesses(A3):
    els = A3.enumerate(None, 6)
    leq = A3.bruhat_leq
    for a, b in itertools.product(els, els):
        if not leq(a, b):
            continue
        for w in els[:10]:
            wm, wp = transport_witnesses_left(a, b, w)
            assert leq(wm * a, w * b) and (wm * a).length == a.length - wm.length
            assert leq(w * a, wp * b) and (wp * b).length == wp.length + b.length


def test_peel_examples(A2):
    a, b, v = A2.elt([0, 1, 0]), A2.elt([0, 1]), A2.elt([0])
    vt = peel_right(a, b, v)
    assert A2.bruhat_leq(vt, v)
    assert (a * vt.inverse()).length == a.length - vt.length
    assert A2.bruhat_leq(a * vt.inverse(), b)
    assert peel_right(a, A2.elt([0, 1, 0]), A2.identity) == A2.identity
    with pytest.raises(PreconditionFailed):
        peel_right(a, A2.identity, A2.elt([0]))


def test_peel_and_lift_exhaustive(A3):
    els = A3.enumerate(None, 6)
    leq = A3.bruhat_leq
    for a, b in itertools.product(els, els):
        for v in els[:12]:
            if leq(a, b * v):
                vt = peel_right(a, b, v)
                assert leq(vt, v) and leq(a * vt.inverse(), b)
                assert (a * vt.inverse()).length == a.length - vt.length
                if (b * v).length == b.length - v.length:
                    assert leq(a * v.inverse(), b)
            if leq(a * v, b):
                vt = lift_right(a, b, v)
                assert leq(vt, v) and leq(a, b * vt.inverse())
                assert (b * vt.inverse()).length == b.length + vt.length


def test_check_cancel(A2, A3):
    a, b, w = A2.elt([0]), A2.elt([1, 0]), A2.elt([1])
    assert A2.bruhat_leq(a * w, b * w)
    assert check_cancel(a, b, w, "box")
    assert check_cancel(a, b, A2.identity, "drop") == A2.bruhat_leq(a, b)
    with pytest.raises(PreconditionFailed):
        check_cancel(A2.elt([1]), b, w, "box")
    with pytest.raises(ValueError):
        check_cancel(a, b, w, "sideways")
    els = A3.enumerate(None, 6)
    for a, b, w in itertools.product(els, els, els[:8]):
        if (b * w).length == b.length - w.length and A3.bruhat_leq(a * w, b * w):
            assert check_cancel(a, b, w, "drop")
        if (a * w).length == a.length + w.length and A3.bruhat_leq(a * w, b * w):
            assert check_cancel(a, b, w, "box")


def test_existence_conditions_agree(A3):
    for J, k in (({0, 2}, 2), ({1}, 1), ({0, 1}, 2)):
        cands = [v for v in A3.enumerate(J, k)]
        els = A3.enumerate(None, 6)
        for a, b in itertools.product(els, els):
            vals = existence_conditions(a, b, cands)
            assert len(set(vals.values())) == 1, (a, b, vals)
