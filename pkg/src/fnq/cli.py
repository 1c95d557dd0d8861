"""Command-line front end: ``fnq eval | group | orders | kbound | verify``.

Group and order tokens:

``alt:n``, ``sym:n``
    alternating and symmetric groups.
``L:n:q``
    ``L_n(q)``, the same group as ``A:(n-1):q``.
``FAMILY:rank:q[:universal]``
    a group of Lie type, e.g. ``A:3:2`` or ``2A:3:2``; exceptional families
    may omit the rank (``E6::2`` or ``G2:3``).
``spo:NAME``, ``tits``
    a sporadic group by name, the Tits group.
``dprime:n``, ``dprime-delta:n``, ``psp4:q``, ``sp4:q``
    additional finite groups for ``fnq group``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from fnq import autf, bounds, orders, verify
from fnq.freegroup import RankError
from fnq.groups import builders
from fnq.groups.core import DEFAULT_CAP, ClosureCapExceeded, class_commuting_count, conjugacy_classes, is_real
from fnq.groups.subgroups import OrderCapExceeded, minimal_faithful_degree
from fnq.linearize import abelianize, det_sign, natural_image_group

OUTPUTS = ("text", "json", "csv")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class Config:
    nmax: int = 40
    closure_cap: int = DEFAULT_CAP
    output: str = "text"

    def __post_init__(self):
        if self.nmax < 12:
            raise UsageError("--nmax must be at least 12")
        if self.closure_cap < 1000:
            raise UsageError("closure cap must be at least 1000")
        if self.output not in OUTPUTS:
            raise UsageError(f"--output must be one of {', '.join(OUTPUTS)}")


def config_from(args) -> Config:
    cap = args.cap
    if cap is None:
        env = os.environ.get("FNQ_CAP")
        try:
            cap = int(env) if env else DEFAULT_CAP
        except ValueError:
            raise UsageError(f"FNQ_CAP must be an integer, got {env!r}") from None
    output = "json" if args.json else ("text" if args.text else args.output)
    return Config(nmax=args.nmax, closure_cap=cap, output=output)


# -- rendering ------------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _render_reports(reports, output: str) -> str:
    if output == "json":
        return verify.to_json(reports)
    if output == "csv":
        return _csv(("suite", "claim", "status", "evidence"),
                    [(r.suite, r.claim, r.status, json.dumps(r.evidence, sort_keys=True)) for r in reports])
    lines = [f"{r.status.upper():8s}{r.suite:14s}{r.claim}" for r in reports]
    counts = {s: sum(r.status == s for r in reports) for s in ("pass", "flagged", "fail")}
    lines.append(f"{len(reports)} checks: {counts['pass']} pass, {counts['flagged']} flagged, {counts['fail']} fail")
    return "\n".join(lines)


def _render_record(record: dict, output: str, text: str) -> str:
    if output == "json":
        return _dump(record)
    if output == "csv":
        return _csv(list(record), [[json.dumps(v) if isinstance(v, (list, dict)) else v for v in record.values()]])
    return text


# -- token parsing ----------------------------------------------------------------

def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def parse_order_token(token: str) -> orders.GroupOrder:
    parts = token.split(":")
    head = parts[0]
    try:
        if head == "alt" and len(parts) == 2:
            return orders.alternating_order(_int(parts[1], "n"))
        if head == "sym" and len(parts) == 2:
            return orders.symmetric_order(_int(parts[1], "n"))
        if head == "spo" and len(parts) == 2:
            return orders.sporadic_order(parts[1])
        if head == "tits" and len(parts) == 1:
            return orders.tits_order()
        if head == "L" and len(parts) == 3:
            n = _int(parts[1], "n")
            value = orders.lie_order(orders.lie("A", n - 1, _int(parts[2], "q"))).value
            return orders.GroupOrder(value, f"L{n}({parts[2]})")
        if head in orders.FAMILIES:
            version = "adjoint"
            if len(parts) == 4:
                version = parts.pop()
            if len(parts) == 2 and head in orders.EXCEPTIONAL_RANK:
                parts = [head, "", parts[1]]
            if len(parts) == 3:
                rank = _int(parts[1], "rank") if parts[1] else None
                return orders.lie_order(orders.lie(head, rank, _int(parts[2], "q"), version))
    except (orders.InvalidSpec, KeyError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"{token}: {exc}") from None
    raise UsageError(f"cannot parse group token {token!r}")


def build_group(token: str, cap: int):
    parts = token.split(":")
    head, args = parts[0], [_int(x, "parameter") for x in parts[1:]]
    makers = {
        "alt": lambda n: builders.alt(n, cap=cap),
        "sym": lambda n: builders.sym(n, cap=cap),
        "cyclic": builders.cyclic,
        "dprime": lambda n: builders.dprime(n, cap=cap),
        "dprime-delta": lambda n: builders.dprime_mod_delta(n, cap=cap),
        "sp4": lambda q: builders.sp4(q, cap=cap),
        "psp4": lambda q: builders.psp4(q, cap=cap),
        "L": lambda n, q: natural_image_group(n, q, cap=cap),
    }
    arity = {"L": 2}
    if head not in makers or len(args) != arity.get(head, 1):
        raise UsageError(f"cannot parse group token {token!r}")
    try:
        return makers[head](*args)
    except ValueError as exc:
        raise UsageError(f"{token}: {exc}") from None


# -- subcommands ------------------------------------------------------------------

def cmd_eval(args, cfg: Config) -> tuple[str, int]:
    try:
        f = autf.parse_element(args.expression, args.rank)
    except (RankError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    images = f.describe()
    ab = abelianize(f)
    record = {"rank": args.rank, "expression": args.expression, "images": images,
              "abelianized": [list(r) for r in ab], "det_sign": det_sign(f)}
    return _render_record(record, cfg.output, "\n".join(images)), 0


def cmd_group(args, cfg: Config) -> tuple[str, int]:
    token = args.target or args.token
    if not token or (args.target and args.token):
        raise UsageError("give exactly one group token, positionally or with --target")
    G = build_group(token, cfg.closure_cap)
    if args.query == "order":
        record = {"group": token, "order": G.order}
        return _render_record(record, cfg.output, str(G.order)), 0
    if args.query == "degree":
        d = minimal_faithful_degree(G, cap_order=args.max_order)
        record = {"group": token, "order": G.order, "minimal_faithful_degree": d}
        return _render_record(record, cfg.output, str(d)), 0
    rows = []
    for cls in conjugacy_classes(G):
        x = G.element(cls.rep)
        rows.append({"class": cls.label, "order": cls.order, "size": cls.size,
                     "centralizer": G.order // cls.size, "real": is_real(G, x),
                     "commuting_count": class_commuting_count(G, x)})
    if cfg.output == "json":
        return _dump({"group": token, "order": G.order, "classes": rows}), 0
    header = ("class", "order", "size", "centralizer", "real", "commuting_count")
    if cfg.output == "csv":
        return _csv(header, [[r[h] for h in header] for r in rows]), 0
    lines = ["\t".join(header)] + ["\t".join(str(r[h]) for h in header) for r in rows]
    return "\n".join(lines), 0


def cmd_orders(args, cfg: Config) -> tuple[str, int]:
    if args.action == "appendix":
        reports = orders.appendix_suite(cfg.nmax)
        if cfg.output == "json":
            rows = [dict(r.evidence, claim=r.claim, status=r.status) for r in reports]
            return _dump({"rows": rows}), verify.exit_status(reports)
        return _render_reports(reports, cfg.output), verify.exit_status(reports)
    tokens = args.tokens + (args.specs or [])
    if len(tokens) != 2:
        raise UsageError("orders compare takes exactly two group tokens")
    a, b = (parse_order_token(t) for t in tokens)
    relation = "=" if a.value == b.value else ("<" if a.value < b.value else ">")
    record = {"left": tokens[0], "left_order": a.value, "right": tokens[1],
              "right_order": b.value, "equal": a.value == b.value}
    text = f"{a.label} {a.value} {relation} {b.label} {b.value}"
    return _render_record(record, cfg.output, text), 0


def cmd_kbound(args, cfg: Config) -> tuple[str, int]:
    mode = "proof" if args.mode == "proof-consistent" else args.mode
    try:
        res = bounds.k(args.n, mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    record = {"n": res.n, "k": res.k_value, "r_star": res.r_star, "mode": res.mode,
              "terms": {str(r): v for r, v in res.terms.items()}}
    lines = [str(res.k_value), f"r_star: {'none (empty range)' if res.empty_range else res.r_star}"]
    lines += [f"r={r}\t{v}" for r, v in res.terms.items()]
    return _render_record(record, cfg.output, "\n".join(lines)), 0


def cmd_verify(args, cfg: Config) -> tuple[str, int]:
    try:
        vcfg = verify.VerifyConfig(nmax=cfg.nmax, cap=cfg.closure_cap)
        reports = verify.run_all(vcfg, args.suites or None)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    return _render_reports(reports, cfg.output), verify.exit_status(reports)


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=OUTPUTS, default="text")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="shorthand for --output json")
    fmt.add_argument("--text", action="store_true", help="shorthand for --output text")
    common.add_argument("--cap", type=int, default=None, help="closure cap (default: $FNQ_CAP or 10^6)")
    common.add_argument("--nmax", type=int, default=40)

    parser = argparse.ArgumentParser(prog="fnq", description="Exact checks around quotients of SAut(F_n).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an automorphism expression")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("expression")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("group", parents=[common], help="order, classes or minimal degree of a finite group")
    p.add_argument("query", choices=("order", "classes", "degree"))
    p.add_argument("token", nargs="?")
    p.add_argument("--target", help="group token, e.g. psp4:3")
    p.add_argument("--max-order", type=int, default=200, help="largest order for subgroup enumeration")
    p.set_defaults(run=cmd_group)

    p = sub.add_parser("orders", parents=[common], help="compare group orders or run the appendix sweep")
    p.add_argument("action", choices=("compare", "appendix"))
    p.add_argument("tokens", nargs="*")
    p.add_argument("--specs", nargs=2, metavar="TOKEN")
    p.set_defaults(run=cmd_orders)

    p = sub.add_parser("kbound", parents=[common], help="the action-size bound k(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("literal", "proof", "proof-consistent"), default="proof")
    p.set_defaults(run=cmd_kbound)

    p = sub.add_parser("verify", parents=[common], help="run check suites")
    p.add_argument("suites", nargs="*", metavar="suite", help=f"any of: {', '.join(verify.SUITES)}")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # argparse stops filling a '*' positional at the first option; take the rest here
    listed = "tokens" if args.command == "orders" else "suites" if args.command == "verify" else None
    if extra and listed and not any(x.startswith("-") for x in extra):
        setattr(args, listed, getattr(args, listed) + extra)
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        cfg = config_from(args)
        text, code = args.run(args, cfg)
    except (UsageError, ClosureCapExceeded, OrderCapExceeded) as exc:
        parser.print_usage(sys.stderr)
        print(f"fnq {args.command}: error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
