"""
The W x W-set W(N, C) and its extended Bruhat orders.

W(N, C) is the quotient of W x W^op by the subgroup generated by W_C x 1,
{(v, v^-1) : v in W_{N\\C}} and 1 x W_C. The class of (a, b) is written
``a e b``. Every element has a unique normal form III ``a c e b`` with
a in W^N, c in W_{N\\C}, b in ^N W, which is what :class:`OrbitElt` stores.

For a sign pair (eps, delta) the order x1 <= x2 holds when there are u, v in
W_{N\\C} with

- delta = +: a1 u^-1 <= a2        delta = -: a2 u <= a1
- eps   = +: v b2 <= b1           eps   = -: v^-1 b1 <= b2

and a middle condition on c1, c2 (eight equivalent variants, see
:data:`VARIANTS`). Because a1 u^-1, a2 u, v b2 and v^-1 b1 are all
length-additive, l(u) and l(v) are bounded by the length gaps of the outer
factors, so the existential search is finite and exact.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .coxeter import LEFT, RIGHT, CoxeterSystem, Elt
from .errors import ComponentViolation, ContextMismatch, SubsetViolation


@dataclass(frozen=True)
class SignPair:
    """(eps, delta) for the order <=_{eps delta}; each is +1 or -1."""

    epsilon: int
    delta: int

    def __post_init__(self):
        if self.epsilon not in (1, -1) or self.delta not in (1, -1):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def parse(cls, text: str) -> SignPair:
        if isinstance(text, SignPair):
            return text
        text = text.strip()
        if len(text) != 2 or any(ch not in "+-" for ch in text):
            raise ValueError(f"sign pair must be one of ++, +-, -+, --; got {text!r}")
        return cls(1 if text[0] == "+" else -1, 1 if text[1] == "+" else -1)

    def __str__(self):
        return ("+" if self.epsilon > 0 else "-") + ("+" if self.delta > 0 else "-")


PP, PM, MP, MM = (SignPair.parse(s) for s in ("++", "+-", "-+", "--"))
ALL_SIGNS = (PP, PM, MP, MM)

VARIANTS = ("i", "ii", "iii", "iv", "i'", "ii'", "iii'", "iv'")


@dataclass(frozen=True, order=False)
class OrbitElt:
    """An element a c e b of W(N, C) in normal form III."""

    a: Elt
    c: Elt
    b: Elt
    ctx: OrbitContext = field(repr=False, compare=True, hash=True)

    def sort_key(self):
        return (self.a.shortlex_key(), self.c.shortlex_key(), self.b.shortlex_key())

    def __lt__(self, other: OrbitElt) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return f"{self.a}|{self.c}|{self.b}"

    def __repr__(self):
        return f"OrbitElt({str(self)!r})"


class OrbitContext:
    """
    A validated triple (W, N, C): C is a subset of N and every generator of
    N \\ C commutes with every generator of C.
    """

    def __init__(self, system: CoxeterSystem, N: Iterable[int], C: Iterable[int]):
        N = frozenset(N)
        C = frozenset(C)
        for s in N | C:
            if not 0 <= s < system.rank:
                raise SubsetViolation(f"generator {s} out of range [0, {system.rank})")
        if not C <= N:
            raise SubsetViolation(f"C={sorted(C)} is not a subset of N={sorted(N)}")
        for s in N - C:
            for t in C:
                if system.matrix(s, t) != 2:
                    raise ComponentViolation(
                        f"C={sorted(C)} is not a component of N={sorted(N)}: "
                        f"m({s},{t}) = {system.matrix(s, t)}")
        self.system = system
        self.N = N
        self.C = C
        self.NC = N - C
        self._leq_cache: dict = {}
        self._nc_cache: dict[int, list[Elt]] = {}
        self._longest: dict[int, dict[str, Elt]] = {}

    def __repr__(self):
        return f"OrbitContext({self.system!r}, N={sorted(self.N)}, C={sorted(self.C)})"

    # -- construction ------------------------------------------------------

    @property
    def e(self) -> OrbitElt:
        one = self.system.identity
        return OrbitElt(one, one, one, self)

    def _split_N(self, x: Elt) -> tuple[Elt, Elt]:
        """x in W_N -> (v, w) with v in W_{N\\C}, w in W_C, x = v w = w v."""
        W = self.system
        v = W.normal_form(s for s in x.word if s in self.NC)
        w = W.normal_form(s for s in x.word if s in self.C)
        return v, w

    def canonicalize(self, a_raw: Elt, b_raw: Elt) -> OrbitElt:
        """Normal form III of the class of (a_raw, b_raw)."""
        W = self.system
        b_N, b_min = W.coset_decompose(b_raw, self.N, RIGHT)
        v, _ = self._split_N(b_N)        # the W_C factor is absorbed by e
        a_min, a_N = W.coset_decompose(a_raw * v, self.N, LEFT)
        c, _ = self._split_N(a_N)
        return OrbitElt(a_min, c, b_min, self)

    def from_triple(self, a: Elt, c: Elt, b: Elt) -> OrbitElt:
        """Build an OrbitElt from a triple that must already be in normal form III."""
        W = self.system
        if not W.is_min_left_coset_rep(a, self.N):
            raise ValueError(f"{a} is not in W^N")
        if not W.is_in_parabolic(c, self.NC):
            raise ValueError(f"{c} is not in W_(N\\C)")
        if not W.is_min_right_coset_rep(b, self.N):
            raise ValueError(f"{b} is not in ^N W")
        return OrbitElt(a, c, b, self)

    def from_group_element(self, w: Elt) -> OrbitElt:
        """The element w e = canonicalize(w, 1)."""
        return self.canonicalize(w, self.system.identity)

    def _check(self, *xs: OrbitElt) -> None:
        for x in xs:
            if x.ctx is not self:
                raise ContextMismatch(f"{x} belongs to a different orbit context")

    # -- normal forms, action, involution -----------------------------------

    def normal_form_I(self, x: OrbitElt) -> tuple[Elt, Elt]:
        """(a c, b) with a c in W^C and b in ^N W."""
        return x.a * x.c, x.b

    def normal_form_II(self, x: OrbitElt) -> tuple[Elt, Elt]:
        """(a, c b) with a in W^N and c b in ^C W."""
        return x.a, x.c * x.b

    def act(self, u: Elt, x: OrbitElt, v: Elt) -> OrbitElt:
        """(u, v) . a c e b = u a c e b v."""
        self._check(x)
        return self.canonicalize(u * x.a * x.c, x.b * v)

    def left(self, s: int, x: OrbitElt) -> OrbitElt:
        return self.act(self.system.generator(s), x, self.system.identity)

    def right(self, x: OrbitElt, s: int) -> OrbitElt:
        return self.act(self.system.identity, x, self.system.generator(s))

    def involution(self, x: OrbitElt) -> OrbitElt:
        """(a c e b)^inv = b^-1 c^-1 e a^-1, already in normal form III."""
        self._check(x)
        return OrbitElt(x.b.inverse(), x.c.inverse(), x.a.inverse(), self)

    # -- extended length -----------------------------------------------------

    def ext_length(self, x: OrbitElt, sign: SignPair | str) -> int:
        sign = SignPair.parse(sign)
        return sign.delta * x.a.length + x.c.length - sign.epsilon * x.b.length

    # -- enumeration -----------------------------------------------------

    def nc_elements(self, cap: int) -> list[Elt]:
        """Elements of W_{N\\C} of length <= cap, ShortLex sorted."""
        if cap < 0:
            return []
        out = self._nc_cache.get(cap)
        if out is None:
            out = self.system.enumerate(self.NC, cap)
            self._nc_cache[cap] = out
        return out

    def min_left(self, cap: int) -> list[Elt]:
        """W^N up to length cap."""
        return self.system.enumerate(None, cap, ("min_coset_left", self.N))

    def min_right(self, cap: int) -> list[Elt]:
        """^N W up to length cap."""
        return self.system.enumerate(None, cap, ("min_coset_right", self.N))

    def elements(self, cap: int, c_cap: int | None = None) -> list[OrbitElt]:
        """All normal forms with l(a), l(b) <= cap and l(c) <= c_cap (default cap)."""
        c_cap = cap if c_cap is None else c_cap
        A = self.min_left(cap)
        Cs = self.nc_elements(c_cap)
        B = self.min_right(cap)
        return [OrbitElt(a, c, b, self) for a in A for c in Cs for b in B]

    # -- extended Bruhat orders --------------------------------------------

    def _u_candidates(self, x: OrbitElt, y: OrbitElt, delta: int) -> list[Elt]:
        gap = y.a.length - x.a.length if delta > 0 else x.a.length - y.a.length
        return self.nc_elements(gap)

    def _v_candidates(self, x: OrbitElt, y: OrbitElt, epsilon: int) -> list[Elt]:
        gap = x.b.length - y.b.length if epsilon > 0 else y.b.length - x.b.length
        return self.nc_elements(gap)

    def _outer_a(self, x: OrbitElt, y: OrbitElt, u: Elt, delta: int) -> bool:
        leq = self.system.bruhat_leq
        if delta > 0:
            return leq(x.a * u.inverse(), y.a)
        return leq(y.a * u, x.a)

    def _outer_b(self, x: OrbitElt, y: OrbitElt, v: Elt, epsilon: int) -> bool:
        leq = self.system.bruhat_leq
        if epsilon > 0:
            return leq(v * y.b, x.b)
        return leq(v.inverse() * x.b, y.b)

    def _middle(self, variant: str) -> Callable[[Elt, Elt, Elt, Elt], bool]:
        leq = self.system.bruhat_leq

        def i(c1, c2, u, v):
            return leq(c1, u.inverse() * c2 * v.inverse())

        def ii(c1, c2, u, v):
            return leq(u * c1, c2 * v.inverse())

        def iii(c1, c2, u, v):
            return leq(u * c1 * v, c2)

        def iv(c1, c2, u, v):
            return leq(c1 * v, u.inverse() * c2)

        def i_(c1, c2, u, v):
            m = u.inverse() * c2 * v.inverse()
            return m.length == u.length + c2.length + v.length and leq(c1, m)

        def ii_(c1, c2, u, v):
            lhs = u * c1
            rhs = c2 * v.inverse()
            return (lhs.length == c1.length - u.length
                    and rhs.length == c2.length + v.length and leq(lhs, rhs))

        def iii_(c1, c2, u, v):
            lhs = u * c1 * v
            return lhs.length == c1.length - u.length - v.length and leq(lhs, c2)

        def iv_(c1, c2, u, v):
            lhs = c1 * v
            rhs = u.inverse() * c2
            return (lhs.length == c1.length - v.length
                    and rhs.length == u.length + c2.length and leq(lhs, rhs))

        table = {"i": i, "ii": ii, "iii": iii, "iv": iv,
                 "i'": i_, "ii'": ii_, "iii'": iii_, "iv'": iv_}
        try:
            return table[variant]
        except KeyError:
            raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS} or 'auto'") from None

    def ext_witness(self, x: OrbitElt, y: OrbitElt, sign: SignPair | str,
                    variant: str = "auto") -> tuple[Elt, Elt] | None:
        """
        Witnesses (u, v) for x <= y, or None if the relation fails.

        Named variants search the bounded witness range directly; ``auto``
        adds cheap necessary conditions and then uses variant (i').
        """
        sign = SignPair.parse(sign)
        self._check(x, y)
        eps, delta = sign.epsilon, sign.delta
        if variant == "auto":
            one = self.system.identity
            if x == y:
                return (one, one)
            if not self._passes_fast_rejects(x, y, sign):
                return None
            variant = "i'"
        middle = self._middle(variant)
        us = [u for u in self._u_candidates(x, y, delta) if self._outer_a(x, y, u, delta)]
        if not us:
            return None
        vs = [v for v in self._v_candidates(x, y, eps) if self._outer_b(x, y, v, eps)]
        for u, v in itertools.product(us, vs):
            if middle(x.c, y.c, u, v):
                return (u, v)
        return None

    def _passes_fast_rejects(self, x: OrbitElt, y: OrbitElt, sign: SignPair) -> bool:
        # x < y forces l(x) < l(y), and each outer factor is Bruhat-comparable
        # because a1 <= a1[]u^-1 and b2 <= v[]b2
        if self.ext_length(x, sign) >= self.ext_length(y, sign):
            return False
        leq = self.system.bruhat_leq
        if sign.delta > 0 and not leq(x.a, y.a):
            return False
        if sign.delta < 0 and not leq(y.a, x.a):
            return False
        if sign.epsilon > 0 and not leq(y.b, x.b):
            return False
        if sign.epsilon < 0 and not leq(x.b, y.b):
            return False
        return True

    def ext_leq(self, x: OrbitElt, y: OrbitElt, sign: SignPair | str, variant: str = "auto") -> bool:
        sign = SignPair.parse(sign)
        key = (x, y, sign, variant)
        out = self._leq_cache.get(key)
        if out is None:
            out = self.ext_witness(x, y, sign, variant) is not None
            self._leq_cache[key] = out
        return out

    def ext_lt(self, x: OrbitElt, y: OrbitElt, sign: SignPair | str) -> bool:
        return x != y and self.ext_leq(x, y, sign)

    def ext_leq_nfI(self, x: OrbitElt, y: OrbitElt, epsilon: int, variant: str = "i") -> bool:
        """
        The order <=_{eps +} through normal form I (a' = a c in W^C): there is
        v in W_{N\\C} with the b-condition for eps and one of
        ``i``: a1' <= a2' v^-1, ``ii``: a1' v <= a2',
        ``i'``: a1' <= a2'[]v^-1, ``ii'``: a1'|>v <= a2'.
        """
        self._check(x, y)
        leq = self.system.bruhat_leq
        a1, b1 = self.normal_form_I(x)
        a2, b2 = self.normal_form_I(y)
        for v in self._v_candidates(x, y, epsilon):
            if not self._outer_b(x, y, v, epsilon):
                continue
            vi = v.inverse()
            if variant == "i":
                ok = leq(a1, a2 * vi)
            elif variant == "ii":
                ok = leq(a1 * v, a2)
            elif variant == "i'":
                r = a2 * vi
                ok = r.length == a2.length + v.length and leq(a1, r)
            elif variant == "ii'":
                r = a1 * v
                ok = r.length == a1.length - v.length and leq(r, a2)
            else:
                raise ValueError(f"unknown normal form I variant {variant!r}")
            if ok:
                return True
        return False

    def ext_leq_nfII(self, x: OrbitElt, y: OrbitElt, delta: int, variant: str = "i") -> bool:
        """
        The order <=_{- delta} through normal form II (b' = c b in ^C W): there
        is u in W_{N\\C} with the a-condition for delta and one of
        ``i``: b1' <= u^-1 b2', ``ii``: u b1' <= b2',
        ``i'``: b1' <= u^-1[]b2', ``ii'``: u<|b1' <= b2'.
        """
        self._check(x, y)
        leq = self.system.bruhat_leq
        a1, b1 = self.normal_form_II(x)
        a2, b2 = self.normal_form_II(y)
        for u in self._u_candidates(x, y, delta):
            if not self._outer_a(x, y, u, delta):
                continue
            ui = u.inverse()
            if variant == "i":
                ok = leq(b1, ui * b2)
            elif variant == "ii":
                ok = leq(u * b1, b2)
            elif variant == "i'":
                r = ui * b2
                ok = r.length == u.length + b2.length and leq(b1, r)
            elif variant == "ii'":
                r = u * b1
                ok = r.length == b1.length - u.length and leq(r, b2)
            else:
                raise ValueError(f"unknown normal form II variant {variant!r}")
            if ok:
                return True
        return False

    # -- finite case: multiplication by the longest element ------------------

    def longest_elements(self, cap: int = 64) -> dict[str, Elt]:
        """w0, v0, u0, t0: longest elements of W, W_N, W_{N\\C}, W_C."""
        cached = self._longest.get(cap)
        if cached is not None:
            return cached
        W = self.system
        self._longest[cap] = out = {
            "w0": W.longest_element(None, cap),
            "v0": W.longest_element(self.N, cap),
            "u0": W.longest_element(self.NC, cap),
            "t0": W.longest_element(self.C, cap),
        }
        return out

    def phi_w0(self, x: OrbitElt, mode: str = "left", cap: int = 64) -> OrbitElt:
        """
        Multiplication by w0 from the left, the right, or both sides. The left
        map sends a c e b to (w0 a v0)(u0 c) e b, read off directly.
        """
        self._check(x)
        if mode == "left":
            L = self.longest_elements(cap)
            return OrbitElt(L["w0"] * x.a * L["v0"], L["u0"] * x.c, x.b, self)
        if mode == "right":
            return self.involution(self.phi_w0(self.involution(x), "left", cap))
        if mode == "both":
            return self.phi_w0(self.phi_w0(x, "right", cap), "left", cap)
        raise ValueError(f"mode must be left, right or both, not {mode!r}")

    def biggest_plus_minus(self, cap: int = 64) -> OrbitElt:
        """u0 e, the largest element of <=_{+-} when W_{N\\C} is finite."""
        one = self.system.identity
        return OrbitElt(one, self.system.longest_element(self.NC, cap), one, self)


def make_context(system: CoxeterSystem, N: Iterable[int], C: Iterable[int]) -> OrbitContext:
    return OrbitContext(system, N, C)


def iter_pairs(xs: list[OrbitElt]) -> Iterator[tuple[OrbitElt, OrbitElt]]:
    return itertools.product(xs, xs)
