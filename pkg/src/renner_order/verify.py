"""
Property suites run over a finite slice of W(N, C).

Each suite returns a :class:`SuiteResult` listing counterexamples as
reproducible literals (``a|c|b`` with generator indices). An empty list
means every checked instance held.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import chains, oracle, transport
from .coxeter import LEFT, RIGHT
from .errors import CapExceededError, NotFiniteError
from .orbit import ALL_SIGNS, MM, MP, PM, PP, VARIANTS, OrbitContext, OrbitElt, SignPair

CHAIN_LIMIT = 10_000


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)
    notice: str | None = None

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def fail(self, msg: str) -> None:
        self.counterexamples.append(f"{self.name}: {msg}")

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.counterexamples)} counterexample(s)"
        line = f"{self.name}: {status}, {self.checked} checks"
        if self.notice:
            line += f" ({self.notice})"
        return line


def order_matrix(ctx: OrbitContext, xs: list[OrbitElt], sign: SignPair,
                 leq: Callable | None = None) -> np.ndarray:
    leq = leq or (lambda x, y: ctx.ext_leq(x, y, sign))
    return np.array([[leq(x, y) for y in xs] for x in xs], dtype=bool)


# -- characterizations and order axioms ------------------------------------

def _nf_readers(ctx: OrbitContext, sign: SignPair) -> dict[str, Callable]:
    out = {}
    if sign.delta > 0:
        for var in ("i", "ii", "i'", "ii'"):
            out[f"nfI/{var}"] = (lambda var: lambda x, y: ctx.ext_leq_nfI(x, y, sign.epsilon, var))(var)
    if sign.epsilon < 0:
        for var in ("i", "ii", "i'", "ii'"):
            out[f"nfII/{var}"] = (lambda var: lambda x, y: ctx.ext_leq_nfII(x, y, sign.delta, var))(var)
    return out


def check_characterizations(ctx: OrbitContext, xs: list[OrbitElt]) -> SuiteResult:
    """All definitional variants, the fast path and the normal-form readings agree."""
    res = SuiteResult("characterizations")
    for sign in ALL_SIGNS:
        readers = {v: (lambda v: lambda x, y: ctx.ext_leq(x, y, sign, v))(v) for v in VARIANTS}
        readers["auto"] = lambda x, y: ctx.ext_leq(x, y, sign)
        readers.update(_nf_readers(ctx, sign))
        for x, y in itertools.product(xs, xs):
            vals = {name: f(x, y) for name, f in readers.items()}
            res.checked += 1
            if len(set(vals.values())) != 1:
                yes = sorted(k for k, v in vals.items() if v)
                res.fail(f"sign {sign} x='{x}' y='{y}' true only for {yes}")
    return res


def check_order_axioms(ctx: OrbitContext, xs: list[OrbitElt]) -> SuiteResult:
    """Reflexivity, antisymmetry, transitivity and strict growth of the extended length."""
    res = SuiteResult("order-axioms")
    n = len(xs)
    for sign in ALL_SIGNS:
        R = order_matrix(ctx, xs, sign)
        L = np.array([ctx.ext_length(x, sign) for x in xs])
        res.checked += n * n
        for i in np.flatnonzero(~R.diagonal()):
            res.fail(f"sign {sign} not reflexive at x='{xs[i]}'")
        both = R & R.T
        np.fill_diagonal(both, False)
        for i, j in zip(*np.nonzero(both)):
            if i < j:
                res.fail(f"sign {sign} antisymmetry fails x='{xs[i]}' y='{xs[j]}'")
        Ri = R.astype(np.int64)
        two_step = (Ri @ Ri) > 0
        for i, j in zip(*np.nonzero(two_step & ~R)):
            k = int(np.flatnonzero(R[i] & R[:, j])[0])
            res.fail(f"sign {sign} transitivity fails x='{xs[i]}' z='{xs[k]}' y='{xs[j]}'")
        strict = R.copy()
        np.fill_diagonal(strict, False)
        bad = strict & ~(L[:, None] < L[None, :])
        for i, j in zip(*np.nonzero(bad)):
            res.fail(f"sign {sign} x='{xs[i]}' < y='{xs[j]}' but lengths {L[i]} >= {L[j]}")
    return res


def check_oracle(ctx: OrbitContext, xs: list[OrbitElt]) -> SuiteResult:
    """Fast order against the unbounded-witness search and the elementary closure."""
    res = SuiteResult("oracle")
    for sign in ALL_SIGNS:
        R = order_matrix(ctx, xs, sign)
        E = order_matrix(ctx, xs, sign, lambda x, y: oracle.ext_leq_exhaustive(x, y, sign))
        res.checked += R.size
        for i, j in zip(*np.nonzero(R != E)):
            res.fail(f"sign {sign} x='{xs[i]}' y='{xs[j]}' fast={R[i, j]} exhaustive={E[i, j]}")
    return res


# -- chains and generation --------------------------------------------------

def check_chains(ctx: OrbitContext, xs: list[OrbitElt], jobs: int = 1) -> SuiteResult:
    """
    Every interval between comparable slice members: maximal chains all have
    the length difference, the greedy chain is one of them, covers match the
    Hasse diagram of the order, and elementary closure recovers the order.
    """
    res = SuiteResult("chains")
    members = set(xs)
    closed = True
    for sign in ALL_SIGNS:
        for x, y in itertools.product(xs, xs):
            if not ctx.ext_leq(x, y, sign):
                continue
            res.checked += 1
            G = chains.interval(x, y, sign, jobs=jobs)
            if not members.issuperset(G.vertices):
                closed = False
            gap = ctx.ext_length(y, sign) - ctx.ext_length(x, sign)
            try:
                found = chains.maximal_chains(x, y, sign, graph=G, limit=CHAIN_LIMIT)
            except CapExceededError:
                res.notice = f"some intervals have more than {CHAIN_LIMIT} chains; skipped"
                continue
            if not found:
                res.fail(f"sign {sign} x='{x}' y='{y}' has no maximal chain")
            for ch in found:
                if len(ch) - 1 != gap:
                    res.fail(f"sign {sign} x='{x}' y='{y}' chain of length {len(ch) - 1} != {gap}: "
                             + " < ".join(map(str, ch)))
                    break
            sat = chains.saturated_chain(x, y, sign, graph=G)
            if sat not in found:
                res.fail(f"sign {sign} x='{x}' y='{y}' saturated chain is not maximal")
            covers = oracle.hasse_from_order(G.vertices, lambda p, q: ctx.ext_leq(p, q, sign))
            if covers != {(e.lo, e.hi) for e in G.edges}:
                res.fail(f"sign {sign} x='{x}' y='{y}' cover edges differ from the Hasse diagram")
            T = oracle.ext_leq_closure(G.vertices, sign)
            if not T.leq(x, y):
                res.fail(f"sign {sign} x='{x}' y='{y}' not reachable by elementary relations")
    if closed:
        gen = check_generation(ctx, xs)
        res.checked += gen.checked
        res.counterexamples += gen.counterexamples
    else:
        res.notice = (res.notice + "; " if res.notice else "") + "slice not interval-closed"
    return res


def check_generation(ctx: OrbitContext, xs: list[OrbitElt]) -> SuiteResult:
    """Elementary-relation closure equals the order on an interval-closed slice."""
    res = SuiteResult("generation")
    for sign in ALL_SIGNS:
        T = oracle.ext_leq_closure(xs, sign)
        if not T.is_antisymmetric():
            res.fail(f"sign {sign} elementary closure has a cycle")
        R = order_matrix(ctx, T.slice, sign)
        res.checked += R.size
        for i, j in zip(*np.nonzero(R != T.reachable)):
            res.fail(f"sign {sign} x='{T.slice[i]}' y='{T.slice[j]}' "
                     f"order={R[i, j]} closure={T.reachable[i, j]}")
    return res


# -- Z-Lemma and chain transfer -------------------------------------------------

def _lowering(ctx: OrbitContext, xs: list[OrbitElt], sign: SignPair, s: int, side: str):
    out = []
    for x in xs:
        sx = ctx.left(s, x) if side == LEFT else ctx.right(x, s)
        if ctx.ext_lt(sx, x, sign):
            out.append((x, sx))
    return out


def check_zlemma(ctx: OrbitContext, xs: list[OrbitElt], transfer: bool = True) -> SuiteResult:
    """Extended Z-Lemma on every admissible triple, and chain-length transfer on the quadruples."""
    res = SuiteResult("zlemma")
    for sign in ALL_SIGNS:
        for side in (LEFT, RIGHT):
            for s in range(ctx.system.rank):
                low = _lowering(ctx, xs, sign, s, side)
                for (x, sx), (y, sy) in itertools.product(low, low):
                    res.checked += 1
                    if not chains.zlemma_ext(x, y, s, side, sign):
                        res.fail(f"sign {sign} side {side} s={s} x='{x}' y='{y}'")
                    if transfer:
                        n_xy = chains.elementary_chain_lengths(x, y, sign)
                        n_s = chains.elementary_chain_lengths(sx, sy, sign)
                        if n_xy != n_s:
                            res.fail(f"sign {sign} side {side} s={s} x='{x}' y='{y}' chain lengths "
                                     f"{sorted(n_xy)} vs {sorted(n_s)}")
    return res


def check_translation(ctx: OrbitContext, xs: list[OrbitElt]) -> SuiteResult:
    """Translating each elementary relation by a generator gives an edge or the expected collapse."""
    res = SuiteResult("translation")
    for sign in ALL_SIGNS:
        for x in xs:
            for e in chains.own_edges(x, sign):
                for side in (LEFT, RIGHT):
                    for s in range(ctx.system.rank):
                        res.checked += 1
                        out = chains.translate_edge(s, e, side)
                        if isinstance(out, chains.ElemEdge) and not ctx.ext_lt(out.lo, out.hi, sign):
                            res.fail(f"sign {sign} side {side} s={s} edge {e} translated to non-relation")
    return res


# -- involution and longest-element maps ---------------------------------------

def _relation_type(R1: np.ndarray, R2: np.ndarray, perm: np.ndarray) -> str | None:
    """'iso' if R1[i,j] == R2[p(i),p(j)], 'anti' if R1[i,j] == R2[p(j),p(i)]."""
    P = R2[np.ix_(perm, perm)]
    if np.array_equal(R1, P):
        return "iso"
    if np.array_equal(R1, P.T):
        return "anti"
    return None


def check_involution(ctx: OrbitContext, xs: list[OrbitElt]) -> SuiteResult:
    """inv is involutive, swaps ++ with -- and preserves -+ and +- (with lengths)."""
    res = SuiteResult("involution")
    idx = {x: i for i, x in enumerate(xs)}
    images = [ctx.involution(x) for x in xs]
    for x, ix in zip(xs, images):
        res.checked += 1
        if ctx.involution(ix) != x:
            res.fail(f"inv(inv({x})) != {x}")
    if not all(ix in idx for ix in images):
        res.notice = "slice not closed under inv; order check skipped"
        return res
    perm = np.array([idx[ix] for ix in images])
    R = {sg: order_matrix(ctx, xs, sg) for sg in ALL_SIGNS}
    for src, dst in ((PP, MM), (MM, PP), (MP, MP), (PM, PM)):
        res.checked += 1
        if _relation_type(R[src], R[dst], perm) != "iso":
            res.fail(f"inv is not an isomorphism {src} -> {dst}")
        for x, ix in zip(xs, images):
            if ctx.ext_length(x, src) != ctx.ext_length(ix, dst):
                res.fail(f"inv changes length {src} -> {dst} at x='{x}'")
                break
    return res


W0_DIAGRAMS = {
    "left": {(PP, MP): "anti", (MP, PP): "anti", (MM, PM): "anti", (PM, MM): "anti"},
    "right": {(PP, PM): "anti", (PM, PP): "anti", (MM, MP): "anti", (MP, MM): "anti"},
    "both": {(PP, MM): "iso", (MM, PP): "iso", (MP, PM): "iso", (PM, MP): "iso"},
}


def w0_relation_table(ctx: OrbitContext, xs: list[OrbitElt], mode: str) -> dict:
    """Every (source sign, target sign) for which the w0 map is an isomorphism or anti-isomorphism."""
    idx = {x: i for i, x in enumerate(xs)}
    perm = np.array([idx[ctx.phi_w0(x, mode)] for x in xs])
    R = {sg: order_matrix(ctx, xs, sg) for sg in ALL_SIGNS}
    table = {}
    for src in ALL_SIGNS:
        for dst in ALL_SIGNS:
            kind = _relation_type(R[src], R[dst], perm)
            if kind is not None:
                table[(src, dst)] = kind
    return table


def check_w0(ctx: OrbitContext, xs: list[OrbitElt]) -> SuiteResult:
    """The three longest-element maps are involutions realising their diagrams."""
    res = SuiteResult("w0")
    try:
        ctx.longest_elements()
    except NotFiniteError as exc:
        res.notice = f"skipped: {exc}"
        return res
    idx = {x: i for i, x in enumerate(xs)}
    for mode, expected in W0_DIAGRAMS.items():
        for x in xs:
            res.checked += 1
            y = ctx.phi_w0(x, mode)
            if ctx.phi_w0(y, mode) != x:
                res.fail(f"phi_w0 {mode} is not involutive at x='{x}'")
            if y not in idx:
                res.notice = "slice not closed under w0 maps; diagram check skipped"
                return res
        table = w0_relation_table(ctx, xs, mode)
        for pair, kind in expected.items():
            res.checked += 1
            if table.get(pair) != kind:
                res.fail(f"phi_w0 {mode} is not an {kind}-morphism {pair[0]} -> {pair[1]}")
    return res


# -- extremal elements and group transport ---------------------------------------

def check_extremes(ctx: OrbitContext, xs: list[OrbitElt]) -> SuiteResult:
    """e is below everything for -+; u0 e is above everything for +- when W_{N\\C} is finite."""
    res = SuiteResult("extremes")
    e = ctx.e
    for x in xs:
        res.checked += 1
        if not ctx.ext_leq(e, x, MP):
            res.fail(f"e is not <=-+ {x}")
    try:
        top = ctx.biggest_plus_minus()
    except NotFiniteError:
        res.notice = "W_(N\\C) not finite; maximality not checked"
        return res
    for x in xs:
        res.checked += 1
        if not ctx.ext_leq(x, top, PM):
            res.fail(f"{x} is not <=+- {top}")
    return res


def check_transport(system, max_w: int = 4, cap: int = 12) -> SuiteResult:
    """Postconditions of the transport witnesses for all a <= b and short w."""
    res = SuiteResult("transport")
    W = system
    els = W.enumerate(None, cap)
    ws = [w for w in els if w.length <= max_w]
    leq = W.bruhat_leq
    for a in els:
        for b in els:
            if not leq(a, b):
                continue
            for w in ws:
                res.checked += 1
                bad = transport_violations(a, b, w)
                if bad:
                    res.fail(f"a={a} b={b} w={w}: {', '.join(bad)}")
    return res


def transport_violations(a, b, w) -> list[str]:
    """Names of the transport postconditions that fail for (a, b, w)."""
    W = a.system
    leq = W.bruhat_leq
    wm, wp = transport.transport_witnesses(a, b, w)
    lw = set(oracle.shadow_of(W).lower_interval(w))
    bad = []
    if wm.word not in lw or wp.word not in lw:
        bad.append("not subwords")
    if not (leq(a * wm, b * w) and (a * wm).length == a.length - wm.length):
        bad.append("w_minus")
    if not (leq(a * w, b * wp) and (b * wp).length == b.length + wp.length):
        bad.append("w_plus")
    if (a * w).length == a.length - w.length and wm != w:
        bad.append("w_minus != w")
    if (b * w).length == b.length + w.length and wp != w:
        bad.append("w_plus != w")
    return bad


SUITES = ("characterizations", "zlemma", "chains", "involution", "w0", "transport")


def run_suite(name: str, ctx: OrbitContext, cap: int, jobs: int = 1) -> list[SuiteResult]:
    """Run one named suite (or ``all``) on the slice ctx.elements(cap)."""
    if name == "all":
        out = []
        for n in SUITES:
            out += run_suite(n, ctx, cap, jobs)
        return out
    xs = ctx.elements(cap)
    if name == "characterizations":
        return [check_characterizations(ctx, xs), check_order_axioms(ctx, xs), check_extremes(ctx, xs)]
    if name == "zlemma":
        return [check_zlemma(ctx, xs), check_translation(ctx, xs)]
    if name == "chains":
        return [check_chains(ctx, xs, jobs=jobs)]
    if name == "involution":
        return [check_involution(ctx, xs)]
    if name == "w0":
        return [check_w0(ctx, xs)]
    if name == "transport":
        return [check_transport(ctx.system, max_w=min(cap, 4), cap=cap)]
    raise ValueError(f"unknown suite {name!r}")
