"""
Text formats: Coxeter matrix files, context files and element literals.

A matrix file holds the rank on its first line followed by one row per
generator; ``0`` stands for an infinite entry and lines starting with ``#``
are comments::

    # A2
    2
    1 3
    3 1

A context file is a matrix block followed by ``N:`` and ``C:`` lines.
"""
from __future__ import annotations

from pathlib import Path

from .coxeter import CoxeterMatrix, CoxeterSystem, Elt
from .errors import CoxeterMatrixError, ParseError
from .orbit import OrbitContext, OrbitElt


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


def _ints(line: str, no: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", line=no) from None


def _matrix_from_lines(lines: list[tuple[int, str]]) -> tuple[CoxeterMatrix, int]:
    if not lines:
        raise ParseError("empty matrix file")
    no, first = lines[0]
    head = _ints(first, no)
    if len(head) != 1 or head[0] < 1:
        raise ParseError(f"first line must be a positive rank, got {first!r}", line=no)
    n = head[0]
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} matrix rows, found {len(lines) - 1}",
                         line=lines[-1][0])
    rows = []
    for no, line in lines[1:n + 1]:
        row = _ints(line, no)
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", line=no)
        rows.append(row)
    try:
        matrix = CoxeterMatrix(rows)
    except CoxeterMatrixError as exc:
        raise ParseError(f"invalid Coxeter matrix: {exc}", line=lines[1][0]) from None
    return matrix, n + 1


def parse_matrix(text: str) -> CoxeterMatrix:
    """
    >>> parse_matrix("2\\n1 3\\n3 1\\n").rank
    2
    """
    lines = _content_lines(text)
    matrix, used = _matrix_from_lines(lines)
    if used < len(lines):
        no, line = lines[used]
        raise ParseError(f"unexpected trailing content {line!r}", line=no)
    return matrix


def load_system(path: str | Path) -> CoxeterSystem:
    path = Path(path)
    return CoxeterSystem(parse_matrix(path.read_text()), name=path.stem)


def format_matrix(matrix: CoxeterMatrix) -> str:
    rows = [" ".join(map(str, row)) for row in matrix.entries]
    return "\n".join([str(matrix.rank), *rows]) + "\n"


def parse_index_list(text: str, rank: int | None = None, line: int | None = None) -> frozenset[int]:
    """Whitespace or comma separated generator indices; empty text is the empty set."""
    toks = text.replace(",", " ").split()
    try:
        idx = [int(t) for t in toks]
    except ValueError:
        raise ParseError(f"bad index list {text!r}", line=line) from None
    if rank is not None:
        for i in idx:
            if not 0 <= i < rank:
                raise ParseError(f"generator {i} out of range [0, {rank})", line=line)
    return frozenset(idx)


def parse_context(text: str, name: str | None = None) -> OrbitContext:
    """A matrix block followed by ``N: ...`` and ``C: ...`` lines."""
    lines = _content_lines(text)
    matrix, used = _matrix_from_lines(lines)
    sets: dict[str, frozenset[int]] = {}
    for no, line in lines[used:]:
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("N", "C"):
            raise ParseError(f"expected 'N:' or 'C:' line, got {line!r}", line=no)
        if key in sets:
            raise ParseError(f"duplicate {key}: line", line=no)
        sets[key] = parse_index_list(rest, matrix.rank, line=no)
    for key in ("N", "C"):
        if key not in sets:
            raise ParseError(f"missing {key}: line")
    return OrbitContext(CoxeterSystem(matrix, name=name), sets["N"], sets["C"])


def load_context(path: str | Path) -> OrbitContext:
    path = Path(path)
    return parse_context(path.read_text(), name=path.stem)


def parse_elt(system: CoxeterSystem, text: str) -> Elt:
    """
    ``e`` (or nothing) is the identity; otherwise whitespace separated indices.
    The word need not be reduced.

    >>> from renner_order import type_A
    >>> str(parse_elt(type_A(2), "1 0 1"))
    '0 1 0'
    """
    text = text.strip()
    if text in ("", "e"):
        return system.identity
    try:
        word = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad element literal {text!r}") from None
    for s in word:
        if not 0 <= s < system.rank:
            raise ParseError(f"generator {s} out of range [0, {system.rank})")
    return system.normal_form(word)


def parse_orbit(ctx: OrbitContext, text: str) -> OrbitElt:
    """
    ``a|c|b`` must already be in normal form; ``raw a ; b`` is canonicalized.

    >>> from renner_order import type_A
    >>> ctx = OrbitContext(type_A(3), {0, 2}, {2})
    >>> str(parse_orbit(ctx, "raw 0 ; e"))
    'e|0|e'
    """
    text = text.strip()
    W = ctx.system
    if text.startswith("raw"):
        body = text[3:]
        if ";" not in body:
            raise ParseError(f"raw literal needs 'a ; b', got {text!r}")
        a_txt, b_txt = body.split(";", 1)
        return ctx.canonicalize(parse_elt(W, a_txt), parse_elt(W, b_txt))
    parts = text.split("|")
    if len(parts) != 3:
        raise ParseError(f"orbit literal must be a|c|b, got {text!r}")
    a, c, b = (parse_elt(W, p) for p in parts)
    try:
        return ctx.from_triple(a, c, b)
    except ValueError as exc:
        raise ParseError(f"{text!r} is not in normal form: {exc}") from None
