"""
Command-line front end.

Exit codes: 0 success, 1 negative answer to a query, 2 usage or parse
error, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from . import chains, transport, verify
from .coxeter import LEFT, RIGHT, CoxeterSystem
from .errors import InvariantViolation, NotComparable, NotFiniteError, RennerOrderError
from .formats import load_context, load_system, parse_elt, parse_index_list, parse_orbit
from .orbit import ALL_SIGNS, VARIANTS, OrbitContext, SignPair

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3
DEFAULT_CAP = 6


@dataclass
class RunConfig:
    matrix_path: str | None
    context_path: str | None
    N: frozenset[int]
    C: frozenset[int]
    sign: SignPair
    cap: int
    variant: str
    jobs: int

    def system(self) -> CoxeterSystem:
        if self.context_path:
            return load_context(self.context_path).system
        if not self.matrix_path:
            raise UsageError("one of --matrix or --context is required")
        return load_system(self.matrix_path)

    def context(self) -> OrbitContext:
        if self.context_path:
            return load_context(self.context_path)
        return OrbitContext(self.system(), self.N, self.C)


class UsageError(RennerOrderError):
    pass


def _default_cap() -> int:
    raw = os.environ.get("RENNER_ORDER_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"RENNER_ORDER_CAP must be an integer, got {raw!r}") from None


def _sign(text: str) -> str:
    text = text.strip().lower().replace("p", "+").replace("m", "-")
    if text not in {str(s) for s in ALL_SIGNS}:
        raise argparse.ArgumentTypeError(f"sign pair must be one of ++ +- -+ --, got {text!r}")
    return text


def _config(args: argparse.Namespace) -> RunConfig:
    cap = args.cap if args.cap is not None else _default_cap()
    if cap <= 0:
        raise UsageError(f"cap must be positive, got {cap}")
    if args.jobs < 1:
        raise UsageError("jobs must be >= 1")
    if args.variant not in (*VARIANTS, "auto"):
        raise UsageError(f"unknown variant {args.variant!r}")
    return RunConfig(
        matrix_path=args.matrix,
        context_path=args.context,
        N=parse_index_list(args.N),
        C=parse_index_list(args.C),
        sign=SignPair.parse(args.sign),
        cap=cap,
        variant=args.variant,
        jobs=args.jobs,
    )


# -- subcommands --------------------------------------------------------------

def cmd_group(args, cfg: RunConfig, out: TextIO) -> int:
    W = cfg.system()
    if args.what == "info":
        print(f"rank {W.rank}", file=out)
        for row in W.matrix.entries:
            print(" ".join(map(str, row)), file=out)
        try:
            w0 = W.longest_element(None, cfg.cap)
            print(f"finite: yes, order {len(W.enumerate(None, w0.length))}, "
                  f"longest length {w0.length}", file=out)
        except NotFiniteError as exc:
            print(f"finite: {exc}", file=out)
        return EXIT_OK
    if args.what == "elements":
        for x in W.enumerate(None, cfg.cap):
            print(x, file=out)
        return EXIT_OK
    if args.what == "longest":
        ctx = cfg.context()
        parts = [("W", None), ("W_N", ctx.N), ("W_N\\C", ctx.NC), ("W_C", ctx.C)]
        for label, J in parts:
            try:
                print(f"{label}: {W.longest_element(J, cfg.cap)}", file=out)
            except NotFiniteError as exc:
                print(f"{label}: not finite at cap {exc.cap}", file=out)
        return EXIT_OK
    raise UsageError(f"unknown group query {args.what!r}")


def cmd_element(args, cfg: RunConfig, out: TextIO) -> int:
    text = args.literal
    if "|" in text or text.strip().startswith("raw"):
        ctx = cfg.context()
        x = parse_orbit(ctx, text)
        nf1 = ctx.normal_form_I(x)
        nf2 = ctx.normal_form_II(x)
        print(f"normal form III: {x}", file=out)
        print(f"normal form I: {nf1[0]} ; {nf1[1]}", file=out)
        print(f"normal form II: {nf2[0]} ; {nf2[1]}", file=out)
        print(f"inv: {ctx.involution(x)}", file=out)
        for sg in ALL_SIGNS:
            print(f"length {sg}: {ctx.ext_length(x, sg)}", file=out)
        return EXIT_OK
    W = cfg.system()
    x = parse_elt(W, text)
    print(f"normal form: {x}", file=out)
    print(f"length: {x.length}", file=out)
    print(f"inverse: {x.inverse()}", file=out)
    print(f"left descents: {' '.join(map(str, sorted(W.descents(x, LEFT)))) or '-'}", file=out)
    print(f"right descents: {' '.join(map(str, sorted(W.descents(x, RIGHT)))) or '-'}", file=out)
    print(f"reflection: {'yes' if W.is_reflection(x) else 'no'}", file=out)
    return EXIT_OK


def cmd_order(args, cfg: RunConfig, out: TextIO) -> int:
    ctx = cfg.context()
    x, y = parse_orbit(ctx, args.x), parse_orbit(ctx, args.y)
    sign = cfg.sign
    wit = ctx.ext_witness(x, y, sign, cfg.variant)
    print("true" if wit else "false", file=out)
    if wit:
        print(f"u = {wit[0]}", file=out)
        print(f"v = {wit[1]}", file=out)
    print(f"l{sign}(x) = {ctx.ext_length(x, sign)}", file=out)
    print(f"l{sign}(y) = {ctx.ext_length(y, sign)}", file=out)
    return EXIT_OK if wit else EXIT_NO


def cmd_interval(args, cfg: RunConfig, out: TextIO) -> int:
    ctx = cfg.context()
    x, y = parse_orbit(ctx, args.x), parse_orbit(ctx, args.y)
    G = chains.interval(x, y, cfg.sign, cap=cfg.cap, jobs=cfg.jobs)
    wrote = False
    if args.dot is not None:
        dot = chains.export_dot(G)
        if args.dot == "-":
            out.write(dot)
        else:
            with open(args.dot, "w") as fh:
                fh.write(dot)
        wrote = True
    if args.text or not (wrote or args.chains):
        out.write(chains.export_text(G))
    if args.chains:
        found = chains.maximal_chains(x, y, cfg.sign, graph=G, limit=args.limit)
        for ch in found:
            print(f"{len(ch) - 1}\t" + " < ".join(map(str, ch)), file=out)
    return EXIT_OK


def cmd_transport(args, cfg: RunConfig, out: TextIO) -> int:
    W = cfg.system()
    a, b, w = (parse_elt(W, t) for t in (args.a, args.b, args.w))
    fn = transport.transport_witnesses if args.side == RIGHT else transport.transport_witnesses_left
    wm, wp = fn(a, b, w)
    print(f"w_minus = {wm}", file=out)
    print(f"w_plus = {wp}", file=out)
    if args.side == RIGHT:
        bad = verify.transport_violations(a, b, w)
        print("postconditions: " + ("ok" if not bad else "FAILED " + ", ".join(bad)), file=out)
        if bad:
            return EXIT_INVARIANT
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out: TextIO) -> int:
    ctx = cfg.context()
    results = verify.run_suite(args.suite, ctx, cfg.cap, jobs=cfg.jobs)
    ok = True
    for r in results:
        print(r.summary(), file=out)
        for line in r.counterexamples:
            print(f"  {line}", file=out)
        ok &= r.ok
    return EXIT_OK if ok else EXIT_INVARIANT


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--matrix", metavar="PATH", help="Coxeter matrix file")
    common.add_argument("--context", metavar="PATH", help="context file (matrix plus N: and C: lines)")
    common.add_argument("--N", default="", metavar="IDX", help='generators of N, e.g. "0 2"')
    common.add_argument("--C", default="", metavar="IDX", help="generators of the component C")
    common.add_argument("--sign", default="++", type=_sign, metavar="XX",
                        help="sign pair ++, +-, -+ or -- (pp, pm, mp, mm also accepted)")
    common.add_argument("--cap", type=int, default=None,
                        help=f"length cap (default $RENNER_ORDER_CAP or {DEFAULT_CAP})")
    common.add_argument("--variant", default="auto", help="characterization: auto, " + ", ".join(VARIANTS))
    common.add_argument("--jobs", type=int, default=1, help="worker threads for graph construction")

    p = argparse.ArgumentParser(prog="renner-order",
                                description="Bruhat order and extended Bruhat orders on W(N, C).")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", parents=[common], help="facts about the Coxeter group")
    g.add_argument("what", choices=["info", "elements", "longest"])
    g.set_defaults(func=cmd_group)

    e = sub.add_parser("element", parents=[common], help="describe a group or orbit element")
    e.add_argument("literal", help='group word like "0 1 0", or orbit literal "a|c|b" / "raw a ; b"')
    e.set_defaults(func=cmd_element)

    o = sub.add_parser("order", parents=[common], help="compare two orbit elements")
    o.add_argument("x")
    o.add_argument("y")
    o.set_defaults(func=cmd_order)

    i = sub.add_parser("interval", parents=[common], help="interval [x, y] as a graded cover graph")
    i.add_argument("x")
    i.add_argument("y")
    i.add_argument("--dot", metavar="PATH", help="write DOT to PATH ('-' for stdout)")
    i.add_argument("--text", action="store_true", help="print the text export")
    i.add_argument("--chains", action="store_true", help="list all maximal chains")
    i.add_argument("--limit", type=int, default=10_000, help="maximum number of chains to list")
    i.set_defaults(func=cmd_interval)

    t = sub.add_parser("transport", parents=[common], help="transport witnesses for a <= b and w")
    t.add_argument("a")
    t.add_argument("b")
    t.add_argument("w")
    t.add_argument("--side", choices=[LEFT, RIGHT], default=RIGHT)
    t.set_defaults(func=cmd_transport)

    v = sub.add_parser("verify", parents=[common], help="run a property suite on the slice")
    v.add_argument("suite", choices=[*verify.SUITES, "all"])
    v.set_defaults(func=cmd_verify)
    return p


def _protect_signs(argv: list[str]) -> list[str]:
    # argparse cannot take "--" or "-+" as an option value, so spell them with p/m first
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--sign":
            nxt = next(it, None)
            out.append(tok)
            if nxt is not None:
                out.append(nxt.replace("+", "p").replace("-", "m"))
        elif tok.startswith("--sign="):
            out.append("--sign=" + tok[7:].replace("+", "p").replace("-", "m"))
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_protect_signs(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        return args.func(args, cfg, out)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except NotComparable as exc:
        print(f"not comparable: {exc}", file=sys.stderr)
        return EXIT_NO
    except (RennerOrderError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
