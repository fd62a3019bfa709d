"""Command-line front end: ``python -m forest_operads <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage, parse or domain error.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from typing import Sequence

from .algebra import (
    DomainError,
    Element,
    graft_leaf,
    graft_root,
    mul,
    tensor_to_json,
    tensor_to_text,
    to_json,
    to_text,
)
from .combinat import (
    ParseError,
    enumerate_forests,
    enumerate_trees,
    kappa,
    kappa_inv,
    parse_binary,
    parse_forest,
    parse_tree,
    render_binary,
    render_forest,
    weight,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _forest_arg(text: str):
    return parse_forest(text)


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def _positive(text: str) -> int:
    n = _nonneg(text)
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="forest-operads", description="Exact computations with planar forests.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in (("forests", "all forests of weight N"), ("trees", "all trees of weight N")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("n", type=_nonneg if name == "forests" else _positive)
    for name, help_ in (
        ("prod", "concatenation X Y"),
        ("groot", "root grafting X ↘ Y"),
        ("gleaf", "leaf grafting X ↗ Y"),
        ("pair", "the pairing <X, Y>"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("x")
        s.add_argument("y")
    s = sub.add_parser("coprod", help="coproduct of a forest")
    s.add_argument("--kind", choices=("delta", "deltane"), default="delta")
    s.add_argument("--reduced", action="store_true", help="drop the two unit terms")
    s.add_argument("x")
    s = sub.add_parser("antipode", help="the antipode S")
    s.add_argument("x")
    for name in ("pn", "qn"):
        s = sub.add_parser(name, help=f"the element {name[0]}_N")
        s.add_argument("n", type=_positive)
    s = sub.add_parser("gram", help="Gram matrix of the pairing in weight N (CSV in text mode)")
    s.add_argument("n", type=_positive)
    s = sub.add_parser("dual", help="dual basis element f_F, or the table up to --max-weight")
    s.add_argument("f", nargs="?")
    s.add_argument("--max-weight", type=_positive)
    s = sub.add_parser("compose", help="operad action P ∘ (A1, ..., An)")
    s.add_argument("--flavor", choices=("root", "leaf"), required=True)
    s.add_argument("p")
    s.add_argument("args", nargs="*")
    s = sub.add_parser("pt", help="the primitive element p_b of a binary tree")
    s.add_argument("b")
    s = sub.add_parser("kappa", help="κ of a binary tree, or κ^-1 of a tree with --inverse")
    s.add_argument("b")
    s.add_argument("--inverse", action="store_true")
    s = sub.add_parser("tamari", help="the order on forests of one weight")
    s.add_argument("what", choices=("covers", "leq", "mobius", "hasse", "stats"))
    s.add_argument("--weight", type=_positive, required=True)
    s.add_argument("--as", dest="as_", choices=("dot", "csv"), default="dot", help="hasse output")
    s.add_argument("pair", nargs="*", metavar="F")
    s = sub.add_parser("check", help="run property suites")
    s.add_argument("--suite", choices=("all", "algebra", "coalgebra", "pairing", "operad", "tamari"),
                   default="all")
    s.add_argument("--max-weight", type=_positive, default=5)
    s.add_argument("--threads", type=_positive, default=1)
    return p


# ---------------------------------------------------------------- handlers
# each returns (exit code, text output, json result)


def _element(x: Element):
    return 0, to_text(x), to_json(x)


def _cmd_list(args):
    items = enumerate_forests(args.n) if args.command == "forests" else [(t,) for t in enumerate_trees(args.n)]
    labels = [render_forest(F) for F in items]
    return 0, "\n".join(F if F else "1" for F in labels), labels


def _cmd_binary_op(args):
    x, y = _forest_arg(args.x), _forest_arg(args.y)
    if args.command == "pair":
        from .pairing import pair

        v = pair(x, y)
        return 0, str(v), v
    op = {"prod": mul, "groot": graft_root, "gleaf": graft_leaf}[args.command]
    return _element(op(x, y))


def _cmd_coprod(args):
    from .coalgebra import delta, delta_ne, delta_ne_red, delta_red

    fns = {(False, "delta"): delta, (True, "delta"): delta_red,
           (False, "deltane"): delta_ne, (True, "deltane"): delta_ne_red}
    x = _forest_arg(args.x)
    T = fns[(args.reduced, args.kind)](x)
    return 0, tensor_to_text(T), tensor_to_json(T)


def _cmd_antipode(args):
    from .coalgebra import antipode

    return _element(antipode(_forest_arg(args.x)))


def _cmd_seq(args):
    from .coalgebra import p_ladder_antipode
    from .pairing import q_sequence

    return _element((p_ladder_antipode if args.command == "pn" else q_sequence)(args.n))


def _cmd_gram(args):
    from .pairing import gram

    g = gram(args.n)
    return 0, g.to_csv().rstrip("\n"), g.to_json()


def _cmd_dual(args):
    from .pairing import dual_basis, dual_table, dual_table_text

    if (args.f is None) == (args.max_weight is None):
        raise UsageError("dual: give either a forest F or --max-weight N")
    if args.f is not None:
        return _element(dual_basis(_forest_arg(args.f)))
    rows = dual_table(args.max_weight)
    return 0, dual_table_text(rows), [{"forest": render_forest(F), "dual": to_json(f)} for F, f in rows]


def _cmd_compose(args):
    from .operad import Flavor, act_forest

    p = _forest_arg(args.p)
    if not p:
        raise DomainError("the operation must have positive arity")
    operands = [_forest_arg(a) for a in args.args]
    if weight(p) != len(operands):
        raise DomainError(f"{args.p!r} has arity {weight(p)} but {len(operands)} arguments were given")
    return _element(act_forest(Flavor(args.flavor), p, operands))


def _cmd_pt(args):
    from .operad import p_basis

    return _element(p_basis(parse_binary(args.b)))


def _cmd_kappa(args):
    if args.inverse:
        b = render_binary(kappa_inv(parse_tree(args.b)))
        return 0, b, b
    t = render_forest((kappa(parse_binary(args.b)),))
    return 0, t, t


def _cmd_tamari(args):
    from .tamari import poset

    P = poset(args.weight)
    what = args.what
    need = 2 if what == "leq" else (0, 2) if what == "mobius" else 0
    if len(args.pair) not in ((need,) if isinstance(need, int) else need):
        raise UsageError(f"tamari {what}: wrong number of forest arguments")
    if what == "covers":
        covers = [[render_forest(F), render_forest(G)] for F, G in P.covers()]
        return 0, "\n".join(f"{a} < {b}" for a, b in covers), covers
    if what == "hasse":
        text = P.to_dot() if args.as_ == "dot" else P.edges_csv()
        return 0, text.rstrip("\n"), {"dot": P.to_dot(), "edges": [[render_forest(F), render_forest(G)] for F, G in P.covers()]}
    if what == "stats":
        st = P.statistics()
        return 0, "\n".join(f"{k}: {v}" for k, v in st.items()), st
    if what == "leq":
        F, G = (_forest_arg(a) for a in args.pair)
        v = P.le(F, G)
        return 0, "true" if v else "false", v
    if args.pair:
        F, G = (_forest_arg(a) for a in args.pair)
        v = P.mu(F, G)
        return 0, str(v), v
    labels = [render_forest(F) for F in P.elements]
    return 0, P.mobius_csv().rstrip("\n"), {"basis": labels, "matrix": P.mobius.tolist()}


def _cmd_check(args):
    from .checks import CheckConfig, run_suite

    reports = run_suite(args.suite, CheckConfig(max_weight=args.max_weight, threads=args.threads))
    ok = all(r.passed for r in reports)
    lines = [line for r in reports for line in r.text_lines()]
    passed = sum(res.passed for r in reports for res in r.results)
    total = sum(len(r.results) for r in reports)
    lines.append(f"{passed}/{total} relations passed")
    return (0 if ok else 1), "\n".join(lines), [r.to_json() for r in reports]


_HANDLERS = {
    "forests": _cmd_list,
    "trees": _cmd_list,
    "prod": _cmd_binary_op,
    "groot": _cmd_binary_op,
    "gleaf": _cmd_binary_op,
    "pair": _cmd_binary_op,
    "coprod": _cmd_coprod,
    "antipode": _cmd_antipode,
    "pn": _cmd_seq,
    "qn": _cmd_seq,
    "gram": _cmd_gram,
    "dual": _cmd_dual,
    "compose": _cmd_compose,
    "pt": _cmd_pt,
    "kappa": _cmd_kappa,
    "tamari": _cmd_tamari,
    "check": _cmd_check,
}


def _hoist_tamari_options(argv: list[str]) -> list[str]:
    # argparse cannot put positionals after options when a positional list is optional,
    # so move the tamari flags ahead of its positionals
    if "tamari" not in argv:
        return argv
    i = argv.index("tamari") + 1
    head, rest = argv[:i], argv[i:]
    opts, pos = [], []
    j = 0
    while j < len(rest):
        tok = rest[j]
        if tok in ("--weight", "--as") and j + 1 < len(rest):
            opts += rest[j:j + 2]
            j += 2
            continue
        (opts if tok.startswith("--") else pos).append(tok)
        j += 1
    return head + opts + pos


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command; returns (exit code, output text) without touching sys.stdout."""
    parser = build_parser()
    argv = _hoist_tamari_options(list(argv))
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf):
            args = parser.parse_args(argv)
    except UsageError as e:
        return 2, f"usage error: {e}\n"
    except SystemExit as e:  # --help
        return int(e.code or 0), buf.getvalue()
    try:
        code, text, result = _HANDLERS[args.command](args)
    except UsageError as e:
        return 2, f"usage error: {e}\n"
    except ParseError as e:
        return 2, f"parse error: {e}\n"
    except (DomainError, ValueError) as e:
        return 2, f"domain error: {e}\n"
    if args.format == "json":
        return code, json.dumps({"command": args.command, "result": result}, ensure_ascii=False, indent=2) + "\n"
    return code, text + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code != 2 else sys.stderr
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
