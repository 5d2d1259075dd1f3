"""
Word-level arithmetic in a Coxeter system (W, S).

Group elements are stored as their ShortLex-least reduced word over the
generator indices ``0 .. rank-1``. Products are formed one generator at a
time: a reduced word ``w`` times ``s`` shortens exactly when some word in
the braid class of ``w`` ends in ``s`` (exchange condition plus Tits'
theorem that reduced words of an element are connected by braid moves).
Braid classes are memoized per system, which is plenty for desk-scale
ranks and lengths.

>>> W = type_A(2)
>>> W.elt([1, 0, 1]).word
(0, 1, 0)
>>> (W.elt([0, 1]) * W.elt([0, 1])).word
(1, 0)
"""
from __future__ import annotations

import enum
import math
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import CoxeterMatrixError, NotFiniteError, PreconditionFailed

Word = tuple[int, ...]

LEFT = "left"
RIGHT = "right"


def _check_side(side: str) -> None:
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")


class CoxeterMatrix:
    """
    Symmetric Coxeter matrix. Off-diagonal entries are integers >= 2, with
    ``0`` (or ``math.inf``) standing for an infinite bond.
    """

    def __init__(self, rows: Sequence[Sequence[int | float]]):
        n = len(rows)
        if n == 0:
            raise CoxeterMatrixError("rank must be positive")
        entries = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise CoxeterMatrixError(f"row {i} has {len(row)} entries, expected {n}")
            out = []
            for j, m in enumerate(row):
                if m == math.inf:
                    m = 0
                if not float(m).is_integer():
                    raise CoxeterMatrixError(f"entry ({i},{j}) = {m} is not an integer")
                m = int(m)
                if i == j and m != 1:
                    raise CoxeterMatrixError(f"diagonal entry ({i},{i}) must be 1, got {m}")
                if i != j and m != 0 and m < 2:
                    raise CoxeterMatrixError(f"entry ({i},{j}) = {m} must be >= 2 or infinite")
                out.append(m)
            entries.append(tuple(out))
        for i in range(n):
            for j in range(i):
                if entries[i][j] != entries[j][i]:
                    raise CoxeterMatrixError(f"matrix is not symmetric at ({j},{i})")
        self.rank = n
        self.entries: tuple[tuple[int, ...], ...] = tuple(entries)

    def __call__(self, i: int, j: int) -> int | float:
        m = self.entries[i][j]
        return math.inf if m == 0 else m

    def __eq__(self, other):
        return isinstance(other, CoxeterMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"CoxeterMatrix({[list(r) for r in self.entries]})"


def _alternating(i: int, j: int, m: int) -> Word:
    return tuple(i if k % 2 == 0 else j for k in range(m))


class Elt:
    """An element of W held as its canonical (ShortLex-least reduced) word."""

    __slots__ = ("system", "word", "_hash")

    def __init__(self, system: CoxeterSystem, word: Word):
        self.system = system
        self.word = word
        self._hash = hash(word)

    @property
    def length(self) -> int:
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __mul__(self, other: Elt) -> Elt:
        return self.system.multiply(self, other)

    def inverse(self) -> Elt:
        return self.system.inverse(self)

    def is_identity(self) -> bool:
        return not self.word

    def shortlex_key(self) -> tuple[int, Word]:
        return (len(self.word), self.word)

    def __eq__(self, other):
        if not isinstance(other, Elt):
            return NotImplemented
        return self.word == other.word and self.system is other.system

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Elt) -> bool:
        return self.shortlex_key() < other.shortlex_key()

    def __str__(self):
        return " ".join(map(str, self.word)) if self.word else "e"

    def __repr__(self):
        return f"Elt({str(self)!r})"


class DeodharCase(enum.Enum):
    DOWN = "down"
    UP_STAYS = "up_stays"
    UP_FOLDS = "up_folds"


class CoxeterSystem:
    """
    The Coxeter group presented by a Coxeter matrix.

    All caches are pure memo tables keyed by canonical words; they never
    change answers. Individual dict reads and writes are atomic in CPython,
    and racing writers store identical values, so a system may be shared
    between threads.
    """

    def __init__(self, matrix: CoxeterMatrix | Sequence[Sequence[int]], name: str | None = None):
        if not isinstance(matrix, CoxeterMatrix):
            matrix = CoxeterMatrix(matrix)
        self.matrix = matrix
        self.rank = matrix.rank
        self.name = name
        self.generators = tuple(range(self.rank))
        self._braids: dict[int, list[tuple[int, int, Word, Word]]] = {}
        for i in range(self.rank):
            moves = []
            for j in range(self.rank):
                m = matrix.entries[i][j]
                if i != j and m != 0:
                    moves.append((j, m, _alternating(i, j, m), _alternating(j, i, m)))
            self._braids[i] = moves
        # canonical word -> frozenset of all its reduced words
        self._class: dict[Word, frozenset[Word]] = {}
        # any reduced word seen so far -> canonical word
        self._canon: dict[Word, Word] = {}
        self._right_desc: dict[Word, frozenset[int]] = {}
        self._left_desc: dict[Word, frozenset[int]] = {}
        self._rmul: dict[tuple[Word, int], Word] = {}
        self._lmul: dict[tuple[int, Word], Word] = {}
        self._inv: dict[Word, Word] = {}
        self._leq: dict[tuple[Word, Word], bool] = {}
        self._elts: dict[Word, Elt] = {}
        self.identity = self._wrap(())
        self._register(())

    # -- construction helpers ------------------------------------------------

    def __repr__(self):
        label = self.name or "CoxeterSystem"
        return f"<{label} rank={self.rank}>"

    def _wrap(self, word: Word) -> Elt:
        e = self._elts.get(word)
        if e is None:
            e = self._elts.setdefault(word, Elt(self, word))
        return e

    def _check_word(self, word: Iterable[int]) -> Word:
        word = tuple(int(i) for i in word)
        for i in word:
            if not 0 <= i < self.rank:
                raise IndexError(f"generator index {i} out of range [0, {self.rank})")
        return word

    def generator(self, s: int) -> Elt:
        return self.elt((s,))

    # -- braid classes -----------------------------------------------------

    def _braid_closure(self, word: Word) -> frozenset[Word]:
        seen = {word}
        todo = [word]
        while todo:
            w = todo.pop()
            n = len(w)
            for p in range(n - 1):
                i = w[p]
                for j, m, old, new in self._braids[i]:
                    if p + m <= n and w[p + 1] == j and w[p:p + m] == old:
                        v = w[:p] + new + w[p + m:]
                        if v not in seen:
                            seen.add(v)
                            todo.append(v)
        return frozenset(seen)

    def _register(self, reduced: Word) -> Word:
        canon = self._canon.get(reduced)
        if canon is not None:
            return canon
        cls = self._braid_closure(reduced)
        canon = min(cls)
        self._class[canon] = cls
        self._right_desc[canon] = frozenset(r[-1] for r in cls if r)
        self._left_desc[canon] = frozenset(r[0] for r in cls if r)
        for r in cls:
            self._canon[r] = canon
        return canon

    def reduced_words(self, x: Elt) -> frozenset[Word]:
        """All reduced words of ``x``."""
        return self._class[x.word]

    # -- arithmetic ----------------------------------------------------------

    def _rmul_word(self, w: Word, s: int) -> Word:
        key = (w, s)
        out = self._rmul.get(key)
        if out is not None:
            return out
        if s in self._right_desc[w]:
            r = next(r for r in self._class[w] if r[-1] == s)
            out = self._register(r[:-1])
        else:
            out = self._register(w + (s,))
        self._rmul[key] = out
        return out

    def _lmul_word(self, s: int, w: Word) -> Word:
        key = (s, w)
        out = self._lmul.get(key)
        if out is not None:
            return out
        if s in self._left_desc[w]:
            r = next(r for r in self._class[w] if r[0] == s)
            out = self._register(r[1:])
        else:
            out = self._register((s,) + w)
        self._lmul[key] = out
        return out

    def normal_form(self, word: Iterable[int]) -> Elt:
        """Canonical element equal in W to an arbitrary word."""
        w: Word = ()
        for s in self._check_word(word):
            w = self._rmul_word(w, s)
        return self._wrap(w)

    elt = normal_form

    def rmul(self, x: Elt, s: int) -> Elt:
        """x * s for a generator s."""
        return self._wrap(self._rmul_word(x.word, s))

    def lmul(self, s: int, x: Elt) -> Elt:
        """s * x for a generator s."""
        return self._wrap(self._lmul_word(s, x.word))

    def multiply(self, x: Elt, y: Elt) -> Elt:
        if x.system is not self or y.system is not self:
            raise ValueError("elements belong to different Coxeter systems")
        if len(y.word) <= len(x.word):
            w = x.word
            for s in y.word:
                w = self._rmul_word(w, s)
        else:
            w = y.word
            for s in reversed(x.word):
                w = self._lmul_word(s, w)
        return self._wrap(w)

    def product(self, *xs: Elt) -> Elt:
        out = self.identity
        for x in xs:
            out = self.multiply(out, x)
        return out

    def inverse(self, x: Elt) -> Elt:
        w = x.word
        out = self._inv.get(w)
        if out is None:
            out = min(r[::-1] for r in self._class[w])
            self._register(out)
            self._inv[w] = out
            self._inv[out] = w
        return self._wrap(out)

    def length(self, x: Elt) -> int:
        return len(x.word)

    def is_in_parabolic(self, x: Elt, J: Iterable[int]) -> bool:
        # every reduced word of an element of W_J only uses letters of J
        return set(x.word) <= set(J)

    def is_reflection(self, x: Elt) -> bool:
        """True iff x is conjugate to a simple reflection."""
        w = x.word
        if len(w) % 2 == 0:
            return False
        if len(w) == 1:
            return True
        # a non-simple reflection t has a left descent r with l(rtr) = l(t) - 2
        for r in self._left_desc[w]:
            y = self._rmul_word(self._lmul_word(r, w), r)
            if len(y) == len(w) - 2 and self.is_reflection(self._wrap(y)):
                return True
        return False

    # -- descents, inversions, cosets -------------------------------------

    def descents(self, x: Elt, side: str = RIGHT) -> frozenset[int]:
        """Generators s with l(sx) < l(x) (left) or l(xs) < l(x) (right)."""
        _check_side(side)
        return self._left_desc[x.word] if side == LEFT else self._right_desc[x.word]

    def inversions(self, x: Elt, side: str = LEFT) -> list[Elt]:
        """
        Reflections t with l(tx) < l(x) (left) or l(xt) < l(x) (right),
        sorted ShortLex. There are exactly l(x) of them.
        """
        _check_side(side)
        word = x.word if side == LEFT else x.word[::-1]
        out = []
        prefix = self.identity
        for s in word:
            g = self.generator(s)
            out.append(self.product(prefix, g, prefix.inverse()))
            prefix = self.rmul(prefix, s)
        return sorted(out)

    def coset_decompose(self, x: Elt, J: Iterable[int], side: str = LEFT) -> tuple[Elt, Elt]:
        """
        ``side='left'``: (x^J, x_J) with x = x^J x_J, x^J minimal in x W_J.
        ``side='right'``: (x_J, ^J x) with x = x_J ^J x, ^J x minimal in W_J x.
        """
        _check_side(side)
        J = frozenset(J)
        w = x.word
        part: Word = ()
        if side == LEFT:
            while True:
                hit = self._right_desc[w] & J
                if not hit:
                    break
                s = min(hit)
                w = self._rmul_word(w, s)
                part = self._lmul_word(s, part)
            return self._wrap(w), self._wrap(part)
        while True:
            hit = self._left_desc[w] & J
            if not hit:
                break
            s = min(hit)
            w = self._lmul_word(s, w)
            part = self._rmul_word(part, s)
        return self._wrap(part), self._wrap(w)

    def is_min_left_coset_rep(self, x: Elt, K: Iterable[int]) -> bool:
        """x in W^K: no right descent in K."""
        return not (self._right_desc[x.word] & frozenset(K))

    def is_min_right_coset_rep(self, x: Elt, K: Iterable[int]) -> bool:
        """x in ^K W: no left descent in K."""
        return not (self._left_desc[x.word] & frozenset(K))

    # -- Bruhat order --------------------------------------------------------

    def bruhat_leq(self, u: Elt, v: Elt) -> bool:
        return self._leq_words(u.word, v.word)

    def _leq_words(self, u: Word, v: Word) -> bool:
        if len(u) > len(v):
            return False
        if len(u) == len(v):
            return u == v
        if not u:
            return True
        key = (u, v)
        out = self._leq.get(key)
        if out is not None:
            return out
        s = v[-1]
        vs = v[:-1]  # canonical words are closed under prefixes
        if s in self._right_desc[u]:
            out = self._leq_words(self._rmul_word(u, s), vs)
        else:
            out = self._leq_words(u, vs)
        self._leq[key] = out
        return out

    # -- enumeration -----------------------------------------------------

    def _levels(self, J: frozenset[int], cap: int, constraint) -> Iterator[list[Word]]:
        """Yield length levels 0..cap of the BFS, already filtered and sorted."""
        kind, K = constraint
        level = [()]
        for k in range(cap + 1):
            yield level
            if not level or k == cap:
                return
            nxt = set()
            for w in level:
                for s in J:
                    if kind == "min_coset_left":
                        if s in self._left_desc[w]:
                            continue
                        v = self._lmul_word(s, w)
                        if self._right_desc[v] & K:
                            continue
                    else:
                        if s in self._right_desc[w]:
                            continue
                        v = self._rmul_word(w, s)
                        if kind == "min_coset_right" and self._left_desc[v] & K:
                            continue
                    nxt.add(v)
            level = sorted(nxt)

    @staticmethod
    def _constraint(constraint) -> tuple[str, frozenset[int]]:
        if constraint in (None, "all"):
            return ("all", frozenset())
        kind, K = constraint
        if kind not in ("min_coset_left", "min_coset_right"):
            raise ValueError(f"unknown enumeration constraint {kind!r}")
        return (kind, frozenset(K))

    def enumerate(self, J: Iterable[int] | None = None, cap: int = 0, constraint="all") -> list[Elt]:
        """
        All elements of W_J of length <= cap, in ShortLex order.

        ``constraint`` is ``"all"``, ``("min_coset_left", K)`` (keep W^K) or
        ``("min_coset_right", K)`` (keep ^K W).
        """
        if cap < 0:
            raise ValueError("cap must be >= 0")
        J = frozenset(self.generators if J is None else J)
        kind = self._constraint(constraint)
        return [self._wrap(w) for level in self._levels(J, cap, kind) for w in level]

    def longest_element(self, J: Iterable[int] | None = None, cap: int = 64) -> Elt:
        """
        Longest element of W_J, found by BFS. Raises NotFiniteError when the
        frontier is still non-empty at length ``cap + 1``.
        """
        J = frozenset(self.generators if J is None else J)
        top: list[Word] = [()]
        for level in self._levels(J, cap + 1, ("all", frozenset())):
            if not level:
                break
            top = level
        else:
            raise NotFiniteError(cap, what=f"W_{{{','.join(map(str, sorted(J)))}}}")
        if len(top) != 1:
            raise NotFiniteError(cap)
        w0 = self._wrap(top[0])
        assert J <= self._right_desc[w0.word] or not J
        return w0

    def is_finite(self, J: Iterable[int] | None = None, cap: int = 64) -> bool:
        try:
            self.longest_element(J, cap)
        except NotFiniteError:
            return False
        return True

    def reflections(self, max_length: int) -> list[Elt]:
        """All reflections of length <= max_length, ShortLex sorted."""
        out = set()
        for w in self.enumerate(None, max(0, (max_length - 1) // 2)):
            for s in self.generators:
                t = self.product(w, self.generator(s), w.inverse())
                if t.length <= max_length:
                    out.add(t)
        return sorted(out)

    def deodhar_case(self, w: Elt, J: Iterable[int], s: int) -> tuple[DeodharCase, int | None]:
        """
        For w in W^J classify s*w: DOWN (sw < w), UP_STAYS (sw > w, sw in W^J),
        or UP_FOLDS with the generator s' in J such that sw = w s'.
        """
        J = frozenset(J)
        if self._right_desc[w.word] & J:
            raise PreconditionFailed(f"{w} is not a minimal left coset representative for {sorted(J)}")
        if s in self._left_desc[w.word]:
            return DeodharCase.DOWN, None
        sw = self.lmul(s, w)
        if not (self._right_desc[sw.word] & J):
            return DeodharCase.UP_STAYS, None
        folded = self.multiply(w.inverse(), sw)
        assert folded.length == 1 and folded.word[0] in J
        return DeodharCase.UP_FOLDS, folded.word[0]


# -- standard systems --------------------------------------------------------

def type_A(n: int) -> CoxeterSystem:
    """A_n: a path of n nodes with simple bonds (symmetric group on n+1 letters)."""
    rows = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)] for i in range(n)]
    return CoxeterSystem(rows, name=f"A{n}")


def type_B(n: int) -> CoxeterSystem:
    """B_n with the double bond between generators 0 and 1."""
    sys_a = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)] for i in range(n)]
    if n >= 2:
        sys_a[0][1] = sys_a[1][0] = 4
    return CoxeterSystem(sys_a, name=f"B{n}")


def affine_A1() -> CoxeterSystem:
    """The infinite dihedral group, m(0,1) = infinity."""
    return CoxeterSystem([[1, 0], [0, 1]], name="~A1")


def affine_A(n: int) -> CoxeterSystem:
    """Affine A_n: a cycle of n+1 nodes (n >= 2)."""
    k = n + 1
    rows = [[1 if i == j else (3 if (i - j) % k in (1, k - 1) else 2) for j in range(k)] for i in range(k)]
    return CoxeterSystem(rows, name=f"~A{n}")
