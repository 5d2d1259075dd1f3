"""
Elementary relations, intervals and maximal chains of the extended orders.

For x = a c e b in normal form III and a reflection t the elementary
relations are

- ``er1`` (ta < a):   t.x < x when delta = +, and x < t.x when delta = -;
- ``er2`` (tc < c):   a (tc) e b < x for every sign;
- ``er3`` (bt < b):   x < x.t when eps = +, and x.t < x when eps = -.

Each relation is generated from the inversions of exactly one of its two
endpoints, so scanning the "own" edges of every vertex of a finite set
finds every elementary relation inside that set.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .coxeter import LEFT, RIGHT, Elt
from .errors import CapExceededError, InvariantViolation, NotComparable, PreconditionFailed
from .orbit import OrbitContext, OrbitElt, SignPair

KINDS = ("er1", "er2", "er3")


@dataclass(frozen=True)
class ElemEdge:
    """An elementary relation lo < hi, labelled by its kind and reflection."""

    lo: OrbitElt
    hi: OrbitElt
    kind: str
    t: Elt
    sign: SignPair

    def label_key(self):
        return (KINDS.index(self.kind), self.t.shortlex_key())

    def __str__(self):
        return f"{self.lo} -> {self.hi} {self.kind} {self.t}"


@dataclass(frozen=True)
class Collapse:
    """Translation by s sent the lower end of an edge onto its upper end."""

    lo: OrbitElt
    hi: OrbitElt


@dataclass
class CoverGraph:
    """Hasse diagram of an interval: vertices plus one labelled edge per cover."""

    vertices: list[OrbitElt]
    edges: list[ElemEdge]
    sign: SignPair
    bottom: OrbitElt | None = None
    top: OrbitElt | None = None
    _succ: dict = field(default=None, repr=False)

    def successors(self, z: OrbitElt) -> list[OrbitElt]:
        if self._succ is None:
            succ = {v: [] for v in self.vertices}
            for e in self.edges:
                succ[e.lo].append(e.hi)
            for v in succ:
                succ[v].sort()
            self._succ = succ
        return self._succ[z]


# -- elementary relations ------------------------------------------------------

def own_edges(x: OrbitElt, sign: SignPair | str) -> list[ElemEdge]:
    """Elementary relations generated by the inversions of x's own factors."""
    sign = SignPair.parse(sign)
    ctx = x.ctx
    W = ctx.system
    a, c, b = x.a, x.c, x.b
    out = []
    for t in W.inversions(a, LEFT):
        z = ctx.canonicalize(t * a * c, b)
        if sign.delta > 0:
            out.append(ElemEdge(z, x, "er1", t, sign))
        else:
            out.append(ElemEdge(x, z, "er1", t, sign))
    for t in W.inversions(c, LEFT):
        z = OrbitElt(a, t * c, b, ctx)
        out.append(ElemEdge(z, x, "er2", t, sign))
    for t in W.inversions(b, RIGHT):
        z = ctx.canonicalize(a * c, b * t)
        if sign.epsilon > 0:
            out.append(ElemEdge(x, z, "er3", t, sign))
        else:
            out.append(ElemEdge(z, x, "er3", t, sign))
    for e in out:
        if e.lo == e.hi:
            raise InvariantViolation(f"elementary relation is not strict: {e}")
    return out


def elem_down(x: OrbitElt, sign: SignPair | str) -> list[ElemEdge]:
    """
    Elementary relations z < x coming from x's inversions: er1 when
    delta = +, er2 always, er3 when eps = -.
    """
    return [e for e in own_edges(x, sign) if e.hi == x]


def elem_up(x: OrbitElt, sign: SignPair | str) -> list[ElemEdge]:
    """Elementary relations x < z coming from x's inversions (er1 for delta = -, er3 for eps = +)."""
    return [e for e in own_edges(x, sign) if e.lo == x]


def elem_up_within(x: OrbitElt, sign: SignPair | str, slice_: Iterable[OrbitElt]) -> list[ElemEdge]:
    """All elementary relations x < z with z in the given finite set."""
    members = set(slice_)
    found = {}
    for e in elem_up(x, sign):
        if e.hi in members:
            found.setdefault((e.hi, e.kind, e.t), e)
    for z in members:
        if z == x:
            continue
        for e in elem_down(z, sign):
            if e.lo == x:
                found.setdefault((e.hi, e.kind, e.t), e)
    return sorted(found.values(), key=lambda e: (e.hi.sort_key(), e.label_key()))


def elementary_edges(vertices: Iterable[OrbitElt], sign: SignPair | str, jobs: int = 1) -> list[ElemEdge]:
    """Every elementary relation with both ends in ``vertices`` (deduplicated, sorted)."""
    sign = SignPair.parse(sign)
    vs = sorted(set(vertices))
    members = set(vs)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            per_vertex = list(pool.map(lambda z: own_edges(z, sign), vs))
    else:
        per_vertex = [own_edges(z, sign) for z in vs]
    found = {}
    for edges in per_vertex:
        for e in edges:
            if e.lo in members and e.hi in members:
                found.setdefault((e.lo, e.hi, e.kind, e.t), e)
    return sorted(found.values(), key=lambda e: (e.lo.sort_key(), e.hi.sort_key(), e.label_key()))


# -- intervals -------------------------------------------------------------

def _interval_vertices(x: OrbitElt, y: OrbitElt, sign: SignPair, cap: int | None) -> list[OrbitElt]:
    """
    Every z with x <= z <= y. Outer factors of z lie in Bruhat intervals
    (a_x <= a_z <= a_y for delta = +, reversed for delta = -; b_y <= b_z <= b_x
    for eps = +, reversed for eps = -), and l(c_z) is pinned between the
    extended lengths of x and y.
    """
    ctx = x.ctx
    W = ctx.system
    leq = W.bruhat_leq
    a_lo, a_hi = (x.a, y.a) if sign.delta > 0 else (y.a, x.a)
    b_lo, b_hi = (y.b, x.b) if sign.epsilon > 0 else (x.b, y.b)
    lx, ly = ctx.ext_length(x, sign), ctx.ext_length(y, sign)
    need = max(a_hi.length, b_hi.length)
    if cap is not None and need > cap:
        raise CapExceededError(f"interval needs outer factors up to length {need} > cap {cap}")
    As = [a for a in ctx.min_left(a_hi.length) if leq(a_lo, a) and leq(a, a_hi)]
    Bs = [b for b in ctx.min_right(b_hi.length) if leq(b_lo, b) and leq(b, b_hi)]
    out = []
    for a in As:
        for b in Bs:
            shift = -sign.delta * a.length + sign.epsilon * b.length
            c_min, c_max = lx + shift, ly + shift
            if cap is not None and c_max > cap:
                raise CapExceededError(f"interval needs middle factors up to length {c_max} > cap {cap}")
            for c in ctx.nc_elements(c_max):
                if c.length < c_min:
                    continue
                z = OrbitElt(a, c, b, ctx)
                if ctx.ext_leq(x, z, sign) and ctx.ext_leq(z, y, sign):
                    out.append(z)
    return sorted(out)


def interval(x: OrbitElt, y: OrbitElt, sign: SignPair | str, cap: int | None = None,
             jobs: int = 1) -> CoverGraph:
    """The closed interval [x, y] as a cover graph graded by the extended length."""
    sign = SignPair.parse(sign)
    ctx = x.ctx
    ctx._check(x, y)
    if not ctx.ext_leq(x, y, sign):
        raise NotComparable(f"{x} is not <={sign} {y}")
    vertices = _interval_vertices(x, y, sign, cap)
    covers = {}
    for e in elementary_edges(vertices, sign, jobs=jobs):
        if ctx.ext_length(e.hi, sign) == ctx.ext_length(e.lo, sign) + 1:
            covers.setdefault((e.lo, e.hi), e)
    return CoverGraph(vertices, list(covers.values()), sign, bottom=x, top=y)


def maximal_chains(x: OrbitElt, y: OrbitElt, sign: SignPair | str, cap: int | None = None,
                   limit: int | None = None, graph: CoverGraph | None = None) -> list[tuple[OrbitElt, ...]]:
    """
    All maximal chains from x to y, each as the tuple of its elements.
    Raises CapExceededError when more than ``limit`` chains exist.
    """
    sign = SignPair.parse(sign)
    G = graph if graph is not None else interval(x, y, sign, cap)
    chains: list[tuple[OrbitElt, ...]] = []
    path = [x]

    def walk(z):
        if z == y:
            chains.append(tuple(path))
            if limit is not None and len(chains) > limit:
                raise CapExceededError(f"more than {limit} maximal chains")
            return
        for w in G.successors(z):
            path.append(w)
            walk(w)
            path.pop()

    walk(x)
    return chains


def saturated_chain(x: OrbitElt, y: OrbitElt, sign: SignPair | str, cap: int | None = None,
                    graph: CoverGraph | None = None) -> tuple[OrbitElt, ...]:
    """
    One elementary chain from x to y with unit steps, taking the ShortLex-least
    upward cover at every step.
    """
    sign = SignPair.parse(sign)
    ctx = x.ctx
    G = graph if graph is not None else interval(x, y, sign, cap)
    chain = [x]
    z = x
    while z != y:
        nxt = G.successors(z)
        if not nxt:
            raise InvariantViolation(f"no elementary unit step from {z} towards {y} under {sign}")
        z = nxt[0]
        chain.append(z)
    if len(chain) - 1 != ctx.ext_length(y, sign) - ctx.ext_length(x, sign):
        raise InvariantViolation("saturated chain has the wrong length")
    return tuple(chain)


def elementary_chain_lengths(x: OrbitElt, y: OrbitElt, sign: SignPair | str,
                             cap: int | None = None) -> set[int]:
    """Lengths of all elementary chains from x up to y (empty if x is not below y)."""
    sign = SignPair.parse(sign)
    ctx = x.ctx
    if not ctx.ext_leq(x, y, sign):
        return set()
    vertices = _interval_vertices(x, y, sign, cap)
    succ = {v: [] for v in vertices}
    for e in elementary_edges(vertices, sign):
        succ[e.lo].append(e.hi)
    order = sorted(vertices, key=lambda v: -ctx.ext_length(v, sign))
    lengths: dict[OrbitElt, set[int]] = {}
    for v in order:
        if v == y:
            lengths[v] = {0}
            continue
        lengths[v] = {n + 1 for w in succ[v] for n in lengths[w]}
    return lengths[x]


# -- translation by a simple reflection ----------------------------------

def translate_edge(s: int, edge: ElemEdge, side: str = LEFT) -> ElemEdge | Collapse:
    """
    Multiply both ends of an elementary relation by the generator s. The
    result is again elementary unless s is the exceptional reflection for
    that kind and side, in which case s moves the lower end onto the upper.
    """
    ctx: OrbitContext = edge.lo.ctx
    W = ctx.system
    g = W.generator(s)
    hi = edge.hi
    t = edge.t
    if side == LEFT:
        lo2, hi2 = ctx.left(s, edge.lo), ctx.left(s, hi)
        if edge.kind == "er1":
            collapse = g == t
        elif edge.kind == "er2":
            collapse = g == W.product(hi.a, t, hi.a.inverse())
        else:
            collapse = False
    elif side == RIGHT:
        lo2, hi2 = ctx.right(edge.lo, s), ctx.right(hi, s)
        if edge.kind == "er2":
            cb = hi.c * hi.b
            collapse = g == W.product(cb.inverse(), t, cb)
        elif edge.kind == "er3":
            collapse = g == t
        else:
            collapse = False
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if collapse:
        if lo2 != hi:
            raise InvariantViolation(f"translation by {s} should collapse {edge}")
        return Collapse(lo2, hi2)
    candidates = [e for z in (lo2, hi2) for e in own_edges(z, edge.sign)
                  if e.lo == lo2 and e.hi == hi2]
    if not candidates:
        raise InvariantViolation(f"translating {edge} by {s} on the {side} is not elementary")
    return min(candidates, key=ElemEdge.label_key)


# -- extended Z-Lemma ------------------------------------------------------

def zlemma_ext(x: OrbitElt, y: OrbitElt, s: int, side: str, sign: SignPair | str) -> bool:
    """
    With s x < x and s y < y (or x s < x and y s < y) report whether
    x <= y, s x <= y and s x <= s y all have the same truth value.
    """
    sign = SignPair.parse(sign)
    ctx = x.ctx
    if side == LEFT:
        sx, sy = ctx.left(s, x), ctx.left(s, y)
    elif side == RIGHT:
        sx, sy = ctx.right(x, s), ctx.right(y, s)
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if not (ctx.ext_lt(sx, x, sign) and ctx.ext_lt(sy, y, sign)):
        raise PreconditionFailed(f"generator {s} must lower both {x} and {y} on the {side}")
    vals = {ctx.ext_leq(x, y, sign), ctx.ext_leq(sx, y, sign), ctx.ext_leq(sx, sy, sign)}
    return len(vals) == 1


# -- exports -------------------------------------------------------------

def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(graph: CoverGraph, name: str = "interval") -> str:
    """DOT digraph; node labels are orbit literals a|c|b, edges carry kind and t."""
    lines = [f"digraph {name} {{"]
    if graph.vertices:
        lines.append("  rankdir=BT;")
    ids = {}
    for i, v in enumerate(graph.vertices):
        ids[v] = f"n{i}"
        lines.append(f"  n{i} [label={_quote(str(v))}];")
    for e in graph.edges:
        lines.append(f"  {ids[e.lo]} -> {ids[e.hi]} [kind={e.kind}, t={_quote(str(e.t))}, "
                     f"label={_quote(e.kind + ' ' + str(e.t))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_text(graph: CoverGraph) -> str:
    """One ``a|c|b<TAB>length`` line per vertex, then one ``lo -> hi kind t`` line per edge."""
    ctx = graph.vertices[0].ctx if graph.vertices else None
    lines = [f"{v}\t{ctx.ext_length(v, graph.sign)}" for v in graph.vertices]
    lines += [str(e) for e in graph.edges]
    return "\n".join(lines) + ("\n" if lines else "")
