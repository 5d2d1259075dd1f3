"""
Slow reference implementations for cross-checking the fast paths.

Everything here runs on a private shadow copy of the Coxeter system, so no
memo table is shared with the code under test. Bruhat order is decided by
the subword property, the extended orders by a literal unbounded-witness
search, and generation by a transitive closure over elementary relations
found by scanning reflections directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .coxeter import CoxeterSystem, Elt, Word
from .orbit import OrbitContext, OrbitElt, SignPair

_SHADOWS: dict = {}


class Shadow:
    """A fresh CoxeterSystem with the same matrix plus its own lookup tables."""

    def __init__(self, system: CoxeterSystem):
        self.W = CoxeterSystem(system.matrix, name=f"shadow of {system!r}")
        self._lower: dict[Word, frozenset[Word]] = {}
        self._nc: dict = {}

    def elt(self, x: Elt | Word | Iterable[int]) -> Elt:
        word = x.word if isinstance(x, Elt) else tuple(x)
        return self.W.normal_form(word)

    def lower_interval(self, v: Elt) -> frozenset[Word]:
        """Canonical words of every product of a subexpression of v's word."""
        key = v.word
        got = self._lower.get(key)
        if got is None:
            W = self.W
            reach = {W.identity}
            for s in key:
                reach |= {W.rmul(x, s) for x in reach}
            got = frozenset(x.word for x in reach)
            self._lower[key] = got
        return got

    def leq(self, u: Elt, v: Elt) -> bool:
        return self.elt(u).word in self.lower_interval(self.elt(v))

    def parabolic(self, J: frozenset[int], cap: int) -> list[Elt]:
        key = (J, cap)
        if key not in self._nc:
            self._nc[key] = self.W.enumerate(J, cap)
        return self._nc[key]


def shadow_of(system: CoxeterSystem) -> Shadow:
    sh = _SHADOWS.get(id(system))
    if sh is None or sh.W.matrix != system.matrix:
        sh = Shadow(system)
        _SHADOWS[id(system)] = sh
    return sh


def bruhat_leq_subword(u: Elt, v: Elt) -> bool:
    """
    u <= v iff u is the product of some subexpression of v's canonical word.

    >>> from renner_order import type_A
    >>> W = type_A(2)
    >>> bruhat_leq_subword(W.elt([0]), W.elt([0, 1, 0]))
    True
    >>> bruhat_leq_subword(W.elt([0, 1]), W.elt([1, 0]))
    False
    """
    return shadow_of(u.system).leq(u, v)


def ext_leq_exhaustive(x: OrbitElt, y: OrbitElt, sign: SignPair | str,
                       witness_cap: int | None = None) -> bool:
    """
    The defining condition with middle test c1 <= u^-1 c2 v^-1, searched over
    every pair u, v in W_{N\\C} of length at most ``witness_cap``. With no
    cap the whole of W_{N\\C} is used when it is finite, and otherwise the
    total length of all six factors.
    """
    sign = SignPair.parse(sign)
    ctx = x.ctx
    sh = shadow_of(ctx.system)
    W = sh.W
    if witness_cap is None:
        if W.is_finite(ctx.NC):
            witness_cap = W.longest_element(ctx.NC).length
        else:
            witness_cap = sum(z.length for z in (x.a, x.c, x.b, y.a, y.c, y.b))
    a1, c1, b1 = (sh.elt(z) for z in (x.a, x.c, x.b))
    a2, c2, b2 = (sh.elt(z) for z in (y.a, y.c, y.b))
    cands = sh.parabolic(ctx.NC, witness_cap)
    us = [u for u in cands
          if (sh.leq(W.multiply(a1, u.inverse()), a2) if sign.delta > 0
              else sh.leq(W.multiply(a2, u), a1))]
    if not us:
        return False
    vs = [v for v in cands
          if (sh.leq(W.multiply(v, b2), b1) if sign.epsilon > 0
              else sh.leq(W.multiply(v.inverse(), b1), b2))]
    for u in us:
        ui_c2 = W.multiply(u.inverse(), c2)
        for v in vs:
            if sh.leq(c1, W.multiply(ui_c2, v.inverse())):
                return True
    return False


# -- closure of elementary relations --------------------------------------

def _strip_right(W: CoxeterSystem, x: Elt, J: frozenset[int]) -> tuple[Elt, Elt]:
    """x = m r with m minimal in x W_J, by peeling right descents in J."""
    rest: list[int] = []
    moved = True
    while moved:
        moved = False
        for s in sorted(J):
            xs = W.rmul(x, s)
            if xs.length < x.length:
                x = xs
                rest.insert(0, s)
                moved = True
                break
    return x, W.normal_form(rest)


def _canonical(sh: Shadow, ctx: OrbitContext, a_raw: Elt, b_raw: Elt) -> tuple[Word, Word, Word]:
    W = sh.W
    bi_min, bi_rest = _strip_right(W, b_raw.inverse(), ctx.N)
    b_N = bi_rest.inverse()
    v = W.normal_form(s for s in b_N.word if s in ctx.NC)
    a_min, a_N = _strip_right(W, W.multiply(a_raw, v), ctx.N)
    c = W.normal_form(s for s in a_N.word if s in ctx.NC)
    return a_min.word, c.word, bi_min.inverse().word


@dataclass
class ClosureTable:
    """Reachability over a finite slice; ``reachable[i, j]`` means slice[i] <= slice[j]."""

    slice: list[OrbitElt]
    reachable: np.ndarray

    def __post_init__(self):
        self.index = {self._key(z): i for i, z in enumerate(self.slice)}

    @staticmethod
    def _key(z: OrbitElt) -> tuple[Word, Word, Word]:
        return z.a.word, z.c.word, z.b.word

    def leq(self, x: OrbitElt, y: OrbitElt) -> bool:
        return bool(self.reachable[self.index[self._key(x)], self.index[self._key(y)]])

    def is_antisymmetric(self) -> bool:
        R = self.reachable
        both = R & R.T
        np.fill_diagonal(both, False)
        return not both.any()


def elementary_pairs(slice_: Sequence[OrbitElt], sign: SignPair | str) -> set[tuple[int, int]]:
    """Index pairs (i, j) with slice[i] < slice[j] elementary, found by scanning reflections."""
    sign = SignPair.parse(sign)
    if not slice_:
        return set()
    ctx = slice_[0].ctx
    sh = shadow_of(ctx.system)
    W = sh.W
    keys = {ClosureTable._key(z): i for i, z in enumerate(slice_)}
    longest = max(max(z.a.length, z.c.length, z.b.length) for z in slice_)
    refls = W.reflections(2 * longest + 1)
    nc_refls = [t for t in refls if all(s in ctx.NC for s in t.word)]
    pairs = set()
    for i, z in enumerate(slice_):
        a, c, b = sh.elt(z.a), sh.elt(z.c), sh.elt(z.b)
        ac = W.multiply(a, c)
        for t in refls:
            ta = W.multiply(t, a)
            if ta.length < a.length:
                j = keys.get(_canonical(sh, ctx, W.multiply(t, ac), b))
                if j is not None:
                    pairs.add((j, i) if sign.delta > 0 else (i, j))
            bt = W.multiply(b, t)
            if bt.length < b.length:
                j = keys.get(_canonical(sh, ctx, ac, bt))
                if j is not None:
                    pairs.add((i, j) if sign.epsilon > 0 else (j, i))
        for t in nc_refls:
            tc = W.multiply(t, c)
            if tc.length < c.length:
                j = keys.get((a.word, tc.word, b.word))
                if j is not None:
                    pairs.add((j, i))
    return pairs


def ext_leq_closure(slice_: Iterable[OrbitElt], sign: SignPair | str) -> ClosureTable:
    """
    Reflexive-transitive closure of the elementary relations among slice
    members. On a slice closed under taking intervals this is the full order.
    """
    members = sorted(set(slice_))
    n = len(members)
    R = np.eye(n, dtype=bool)
    for i, j in elementary_pairs(members, sign):
        R[i, j] = True
    for k in range(n):
        R |= R[:, k:k + 1] & R[k:k + 1, :]
    return ClosureTable(members, R)


def hasse_from_order(vertices: Sequence, leq: Callable[[object, object], bool]) -> set[tuple]:
    """Cover pairs (x, y) of a finite order: x < y with nothing strictly between."""
    vs = list(vertices)
    lt = {(x, y) for x in vs for y in vs if x != y and leq(x, y)}
    return {(x, y) for (x, y) in lt
            if not any((x, z) in lt and (z, y) in lt for z in vs)}
