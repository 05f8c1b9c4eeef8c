"""Command-line surface: chain tables, verification suites and an element calculator.

Exit codes are a stable contract: 0 success, 1 verification failure, 2 usage
or configuration error.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from . import chains, liering, verify, wreath
from .ordinals import OrdinalCNF
from .polyring import parse_poly


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    i_max: int = 12
    wt_bound: Optional[int] = None
    radius: int = 2
    c_range: Tuple[int, int] = (-3, 3)
    seed: int = 0
    fmt: str = "text"
    out: Optional[str] = None


# -- calculator -----------------------------------------------------------------

CalcValue = Union[wreath.GroupElement, liering.LieElement, OrdinalCNF]

_CALC_TOKEN = re.compile(r"\s*(\[[^\]]*\]D\d+|[A-Za-z_][A-Za-z_0-9]*|\*|\(|\)|,|1)")


class CalcError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize_calc(text: str) -> List[Tuple[str, int]]:
    tokens: List[Tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CALC_TOKEN.match(text, pos)
        if not m:
            raise CalcError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


def eval_expression(text: str, n: int) -> CalcValue:
    """Evaluate a calculator expression over the element grammar.

    Factors are bracketed base-layer elements combined with ``*`` (the group
    product, left factor acting first) and the functions ``inv``, ``comm``,
    ``phi`` and ``tdeg``.
    """
    tokens = _tokenize_calc(text)
    idx = 0

    def peek() -> Optional[Tuple[str, int]]:
        return tokens[idx] if idx < len(tokens) else None

    def take(expected: Optional[str] = None) -> Tuple[str, int]:
        nonlocal idx
        if idx >= len(tokens):
            raise CalcError(
                f"unexpected end of expression (expected {expected or 'more input'})",
                len(text),
            )
        tok = tokens[idx]
        if expected is not None and tok[0] != expected:
            raise CalcError(f"expected {expected!r}, got {tok[0]!r}", tok[1])
        idx += 1
        return tok

    def require_group(value: CalcValue, position: int, what: str) -> wreath.GroupElement:
        if not isinstance(value, wreath.GroupElement):
            raise CalcError(f"{what} needs a group element", position)
        return value

    def parse_factor() -> CalcValue:
        tok = peek()
        if tok is None:
            raise CalcError("unexpected end of expression", len(text))
        word, position = tok
        if word == "(":
            take()
            value = parse_expr()
            take(")")
            return value
        if word == "1":
            take()
            return wreath.GroupElement.identity(n)
        if word.startswith("["):
            take()
            body, layer = word[1:].rsplit("]D", 1)
            try:
                poly = parse_poly(body)
            except ValueError as exc:
                raise CalcError(str(exc), position) from exc
            k = int(layer)
            if not 1 <= k <= n:
                raise CalcError(f"layer {k} out of range for n={n}", position)
            try:
                return wreath.GroupElement.from_layer_poly(poly, k, n)
            except ValueError as exc:
                raise CalcError(str(exc), position) from exc
        if word in ("inv", "comm", "phi", "tdeg"):
            take()
            take("(")
            first = parse_expr()
            if word == "comm":
                take(",")
                second = parse_expr()
                take(")")
                return wreath.comm(
                    require_group(first, position, "comm"),
                    require_group(second, position, "comm"),
                )
            take(")")
            if word == "inv":
                return require_group(first, position, "inv").inverse()
            if word == "phi":
                return liering.phi(require_group(first, position, "phi"))
            if isinstance(first, liering.LieElement):
                return first.tdeg()
            return require_group(first, position, "tdeg").tdeg()
        raise CalcError(f"unexpected token {word!r}", position)

    def parse_expr() -> CalcValue:
        tok = peek()
        start = tok[1] if tok else len(text)
        value = parse_factor()
        while True:
            tok = peek()
            if tok is None or tok[0] != "*":
                return value
            take()
            rhs = parse_factor()
            value = require_group(value, start, "product") * require_group(
                rhs, start, "product"
            )

    result = parse_expr()
    if idx < len(tokens):
        raise CalcError(f"trailing input {tokens[idx][0]!r}", tokens[idx][1])
    return result


def render_value(value: CalcValue) -> str:
    return value.render()


# -- commands --------------------------------------------------------------------


def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_chain(cfg: RunConfig) -> int:
    if cfg.n is None or cfg.n < 2:
        print("error: chain requires --n >= 2", file=sys.stderr)
        return 2
    if cfg.i_max < 1:
        print("error: chain requires --imax >= 1", file=sys.stderr)
        return 2
    report = chains.verify_growth(cfg.n, cfg.i_max)
    if cfg.fmt == "json":
        _emit(report.to_json(), cfg.out)
    elif cfg.fmt == "csv":
        _emit(report.to_csv(), cfg.out)
    else:
        _emit(report.to_text(), cfg.out)
    return 0 if report.all_match else 1


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    if suite != "all" and suite not in verify.SUITES:
        print(f"error: unknown suite {suite!r}; choose from "
              f"{', '.join(sorted(verify.SUITES))} or all", file=sys.stderr)
        return 2
    kwargs = {}
    if suite == "chain":
        if cfg.n is not None:
            kwargs["ns"] = (cfg.n,)
        kwargs["i_max"] = cfg.i_max
        if cfg.wt_bound is not None:
            kwargs["wt_bound"] = cfg.wt_bound
    if suite == "regular":
        kwargs["c_range"] = cfg.c_range
        kwargs["radius"] = cfg.radius
        if cfg.n is not None:
            kwargs["ns"] = (cfg.n,)
    if suite in ("group", "formulas", "phi", "centers") and cfg.n is not None:
        kwargs["ns"] = (cfg.n,)
    results = verify.run_suite(suite, cfg.seed, **kwargs)
    lines = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        suffix = f": {res.detail}" if res.detail and not res.passed else ""
        lines.append(f"{status} {res.name}{suffix}")
    ok = all(r.passed for r in results)
    lines.append(f"{'all properties hold' if ok else 'FAILURES present'} "
                 f"({sum(r.passed for r in results)}/{len(results)})")
    _emit("\n".join(lines), cfg.out)
    return 0 if ok else 1


def cmd_calc(cfg: RunConfig, expr: str) -> int:
    if cfg.n is None or cfg.n < 2:
        print("error: calc requires --n >= 2", file=sys.stderr)
        return 2
    try:
        value = eval_expression(expr, cfg.n)
    except CalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(render_value(value), cfg.out)
    return 0


# -- argument parsing ---------------------------------------------------------------


def _parse_c_range(raw: str) -> Tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\.\.(-?\d+)\s*", raw)
    if not m:
        raise argparse.ArgumentTypeError("c-range must look like -3..3")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError("c-range lower bound exceeds upper bound")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperwreath",
        description="Exact computations in iterated wreath products of the integers: "
        "normalizer chain tables, invariant verification and an element calculator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_chain = sub.add_parser("chain", help="normalizer chain growth table")
    p_chain.add_argument("--n", type=int, required=True)
    p_chain.add_argument("--imax", type=int, default=12)
    p_chain.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p_chain.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="run an invariant suite")
    p_verify.add_argument("--suite", required=True)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--imax", type=int, default=6)
    p_verify.add_argument("--wt-bound", type=int, default=None)
    p_verify.add_argument("--radius", type=int, default=2)
    p_verify.add_argument("--c-range", type=_parse_c_range, default=(-3, 3))
    p_verify.add_argument("--out", default=None)

    p_calc = sub.add_parser("calc", help="evaluate an element expression")
    p_calc.add_argument("expr")
    p_calc.add_argument("--n", type=int, required=True)
    p_calc.add_argument("--out", default=None)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    # join "--c-range -3..3" so argparse does not read the value as a flag
    merged: List[str] = []
    skip = False
    for idx, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--c-range" and idx + 1 < len(argv) and argv[idx + 1].startswith("-"):
            merged.append(f"--c-range={argv[idx + 1]}")
            skip = True
        else:
            merged.append(tok)
    parser = build_parser()
    try:
        args = parser.parse_args(merged)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.command == "chain":
        cfg = RunConfig(
            command="chain",
            n=args.n,
            i_max=args.imax,
            fmt=args.format,
            out=args.out,
        )
        return cmd_chain(cfg)
    if args.command == "verify":
        cfg = RunConfig(
            command="verify",
            n=args.n,
            i_max=args.imax,
            wt_bound=args.wt_bound,
            radius=args.radius,
            c_range=args.c_range,
            seed=args.seed,
            out=args.out,
        )
        return cmd_verify(cfg, args.suite)
    cfg = RunConfig(command="calc", n=args.n, out=args.out)
    return cmd_calc(cfg, args.expr)


if __name__ == "__main__":
    sys.exit(main())
