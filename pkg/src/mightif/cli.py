"""Command-line interface.

Exit codes: 0 for success/true/valid/yes, 1 for false/invalid/no/differ,
2 for usage or formula syntax errors, 3 for model file errors, 4 for
resource limits.

Countermodels are printed as a verdict line followed by a block that
parse_model accepts verbatim: the evaluation context rides in `# world:` /
`# state:` comment lines above the model text.
"""

from __future__ import annotations

import argparse
import sys

from . import decide, oracle
from .dependence import DependenceQuery, depends_on, succinctness_report
from .errors import (MightifError, ModelFormatError, ParseError,
                     ResourceLimitError)
from .models import Model, PointedContext, parse_model, render_model, world_mask, worlds_in
from .normal import cnf_to_formula, dnf_to_formula, to_k45_cnf, to_k45_dnf
from .reduction import eliminate_conditionals
from .semantics import SemanticsMode, evaluate
from .syntax import Formula, metrics, parse, render
from .translate import dagger

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_MODEL = 3
EXIT_RESOURCE = 4


def _mode(name: str) -> SemanticsMode:
    return SemanticsMode(name)


def _parse_state(text: str) -> int:
    if text.strip() == "":
        return 0
    try:
        return world_mask(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad state {text!r}; use e.g. 0,2 or \"\"") from None


def _read_model(path: str) -> Model:
    with open(path, encoding="utf-8") as handle:
        return parse_model(handle.read())


def _print_context_block(model: Model, world: int | None, state: int) -> None:
    if world is not None:
        print(f"# world: {world}")
    print("# state:" + "".join(f" {w}" for w in worlds_in(state)))
    print(render_model(model), end="")


def _metrics_line(label: str, f: Formula) -> str:
    m = metrics(f)
    return (f"{label}nodes: {m.node_count}  modal depth: {m.modal_depth}  "
            f"conditionals: {m.conditional_count}")


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_parse(args) -> int:
    f = parse(args.formula)
    print(render(f))
    print(_metrics_line("", f))
    return EXIT_TRUE


def _cmd_eval(args) -> int:
    model = _read_model(args.model)
    f = parse(args.formula)
    if not 0 <= args.world < model.world_count:
        raise ValueError(f"world {args.world} out of range")
    if args.state & ~model.full_state():
        raise ValueError("state mentions worlds outside the model")
    value = evaluate(model, PointedContext(args.world, args.state), f, _mode(args.semantics))
    print("true" if value else "false")
    return EXIT_TRUE if value else EXIT_FALSE


def _cmd_valid(args) -> int:
    f = parse(args.formula)
    mode = _mode(args.semantics)
    verdict = decide.km_valid(f) if mode is SemanticsMode.KM else decide.yalcin_theorem(f)
    if verdict.result:
        print("VALID")
        return EXIT_TRUE
    print("INVALID")
    model, ctx = verdict.witness
    _print_context_block(model, ctx.world, ctx.state)
    return EXIT_FALSE


def _cmd_theorem(args) -> int:
    verdict = decide.yalcin_theorem(parse(args.formula))
    if verdict.result:
        print("THEOREM")
        return EXIT_TRUE
    print("NOT A THEOREM")
    model, ctx = verdict.witness
    _print_context_block(model, ctx.world, ctx.state)
    return EXIT_FALSE


def _cmd_consequence(args) -> int:
    premises = [parse(p) for p in args.premise]
    goal = parse(args.goal)
    verdict = decide.informational_consequence(premises, goal)
    if verdict.result:
        print("YES")
        return EXIT_TRUE
    print("NO")
    model, ctx = verdict.witness
    _print_context_block(model, None, ctx.state)
    return EXIT_FALSE


def _cmd_reduce(args) -> int:
    print(render(eliminate_conditionals(parse(args.formula))))
    return EXIT_TRUE


def _cmd_nf(args) -> int:
    f = parse(args.formula)
    if args.form == "dnf":
        print(render(dnf_to_formula(to_k45_dnf(f))))
    else:
        print(render(cnf_to_formula(to_k45_cnf(f))))
    return EXIT_TRUE


def _cmd_translate(args) -> int:
    f = parse(args.formula)
    out = dagger(f)
    print(render(out))
    if args.stats:
        print(_metrics_line("input ", f))
        print(_metrics_line("output ", out))
    return EXIT_TRUE


def _cmd_depend(args) -> int:
    model = _read_model(args.model)
    if args.state & ~model.full_state():
        raise ValueError("state mentions worlds outside the model")
    query = DependenceQuery(args.target, tuple(args.on.split(",")))
    value = depends_on(model, args.state, query)
    print("true" if value else "false")
    return EXIT_TRUE if value else EXIT_FALSE


def _cmd_bench_succinct(args) -> int:
    rows = succinctness_report(args.max_n)
    if args.csv:
        print("n,depend_nodes,expo_nodes,dagger_nodes")
        for row in rows:
            translated = "" if row.dagger_nodes is None else str(row.dagger_nodes)
            print(f"{row.n},{row.depend_nodes},{row.expo_nodes},{translated}")
    else:
        header = f"{'n':>3} {'depend_nodes':>13} {'expo_nodes':>11} {'dagger_nodes':>13}"
        print(header)
        for row in rows:
            translated = "-" if row.dagger_nodes is None else str(row.dagger_nodes)
            print(f"{row.n:>3} {row.depend_nodes:>13} {row.expo_nodes:>11} {translated:>13}")
    if args.plot:
        from .figures import plot_succinctness
        plot_succinctness(rows, args.plot)
    return EXIT_TRUE


def _cmd_oracle_check(args) -> int:
    if args.keyword != "equiv":
        raise ValueError(f"expected literal 'equiv', got {args.keyword!r}")
    f = parse(args.left)
    g = parse(args.right)
    atoms = args.atoms.split(",") if args.atoms else None
    found = oracle.equivalence_search(f, g, _mode(args.semantics), atoms, args.max_worlds)
    if found is None:
        print("EQUIVALENT")
        return EXIT_TRUE
    model, ctx = found
    print("DIFFER")
    _print_context_block(model, ctx.world, ctx.state)
    return EXIT_FALSE


# ---------------------------------------------------------------------------
# Argument wiring


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="mightif",
        description="Workbench for epistemic modals and indicative conditionals.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="print canonical form and metrics")
    p.add_argument("formula")
    p.set_defaults(run=_cmd_parse)

    p = sub.add_parser("eval", help="evaluate at a world and state of a model")
    p.add_argument("--model", required=True)
    p.add_argument("--world", type=int, required=True)
    p.add_argument("--state", type=_parse_state, required=True,
                   help='comma-separated world indices; "" for the empty state')
    p.add_argument("--semantics", choices=["yalcin", "km"], required=True)
    p.add_argument("formula")
    p.set_defaults(run=_cmd_eval)

    p = sub.add_parser("valid", help="decide validity; print countermodel if invalid")
    p.add_argument("--semantics", choices=["yalcin", "km"], required=True)
    p.add_argument("formula")
    p.set_defaults(run=_cmd_valid)

    p = sub.add_parser("theorem", help="decide theoremhood under the restriction semantics")
    p.add_argument("formula")
    p.set_defaults(run=_cmd_theorem)

    p = sub.add_parser("consequence", help="decide informational consequence")
    p.add_argument("--premise", action="append", default=[],
                   help="may be repeated")
    p.add_argument("goal")
    p.set_defaults(run=_cmd_consequence)

    p = sub.add_parser("reduce", help="eliminate conditionals (restriction semantics)")
    p.add_argument("formula")
    p.set_defaults(run=_cmd_reduce)

    p = sub.add_parser("nf", help="depth-one normal form")
    p.add_argument("--form", choices=["dnf", "cnf"], required=True)
    p.add_argument("formula")
    p.set_defaults(run=_cmd_nf)

    p = sub.add_parser("translate", help="translate the maximal-subset conditional away")
    p.add_argument("--stats", action="store_true")
    p.add_argument("formula")
    p.set_defaults(run=_cmd_translate)

    p = sub.add_parser("depend", help="check supervenience of a target atom on a basis")
    p.add_argument("--model", required=True)
    p.add_argument("--state", type=_parse_state, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--on", required=True, help="comma-separated basis atoms")
    p.set_defaults(run=_cmd_depend)

    p = sub.add_parser("bench-succinct", help="formula-size growth table")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--plot", metavar="FILE", help="also render a growth figure")
    p.set_defaults(run=_cmd_bench_succinct)

    p = sub.add_parser("oracle-check", help="exhaustively compare two formulas")
    p.add_argument("--max-worlds", type=int, default=3)
    p.add_argument("--atoms", default=None, help="comma-separated; default: union of both")
    p.add_argument("--semantics", choices=["yalcin", "km"], default="yalcin")
    p.add_argument("left")
    p.add_argument("keyword", metavar="equiv")
    p.add_argument("right")
    p.set_defaults(run=_cmd_oracle_check)

    return top


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.run(args)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModelFormatError as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except FileNotFoundError as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (MightifError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
