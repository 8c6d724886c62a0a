"""Command-line front end.

Exit codes: 0 on success, 2 on a negative answer (incoherent model, axiom
violation, options that cannot be avoided), 1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from importlib.metadata import PackageNotFoundError, version

from . import axioms as axioms_mod
from .choice import convex, lexicographic, maximality
from .cones import GambleCone, lower_prevision
from .descent import construct_extension
from .errors import LexChoiceError, NotSeparable, ParseError, SpaceMismatch
from .exactlp import format_rational
from .horselot import gamblify, lift_choice, product_space, worst_reward_check
from .io import dump_system, load_cone, load_lotteries, load_model, load_options, load_system
from .lexsys import LexSystem


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "unknown"


class Output:
    """Collects result lines; in records mode each line is ``key=value`` pairs."""

    def __init__(self, records: bool, stream):
        self.records = records
        self.stream = stream

    def emit(self, human: str, **fields):
        if self.records:
            line = " ".join(f"{k}={v}" for k, v in fields.items())
        else:
            line = human
        self.stream.write(line + "\n")


def _q(x) -> str:
    return format_rational(x)


def _rule(name: str, model):
    if name == "maximality":
        return maximality(model)
    if name == "lex":
        if not isinstance(model, LexSystem):
            raise UsageError("rule 'lex' needs a system file (with 'layers')")
        return lexicographic(model)
    if name == "convex":
        if not isinstance(model, GambleCone):
            raise UsageError("rule 'convex' needs a cone file (with 'generators')")
        return convex(model)
    raise UsageError(f"unknown rule {name!r}")


def _match_space(model, space, what: str):
    if model.space != space:
        raise UsageError(f"model atoms {list(model.space.atoms)} differ from {what} atoms {list(space.atoms)}")


# ---------------------------------------------------------------------------
# Subcommands


def cmd_coherent(args, out: Output) -> int:
    D = load_cone(args.cone)
    v = D.check_coherence()
    if v is None:
        out.emit("coherent", status="coherent")
        return 0
    coeffs = ",".join(_q(c) for c in v.coefficients)
    out.emit(f"incoherent {v}", status="incoherent", axiom=v.axiom, coefficients=coeffs or "-")
    return 2


def cmd_choose(args, out: Output) -> int:
    model = load_model(args.model)
    A, names = load_options(args.options)
    _match_space(model, A.space, "option")
    res = _rule(args.rule, model)(A)
    for u in A:
        chosen = u in res.chosen_set
        out.emit(("+" if chosen else "-") + names[u], option=names[u],
                 status="chosen" if chosen else "rejected")
    return 0


def cmd_prevision(args, out: Output) -> int:
    model = load_model(args.model)
    A, names = load_options(args.options)
    _match_space(model, A.space, "option")
    if isinstance(model, LexSystem):
        model.require_no_savage_null()
    for f in A:
        value = _q(lower_prevision(model, f))
        out.emit(f"{names[f]} {value}", option=names[f], lower_prevision=value)
    return 0


def cmd_extend(args, out: Output) -> int:
    D = load_cone(args.cone)
    A, names = load_options(args.avoid)
    _match_space(D, A.space, "option")
    try:
        M, trace = construct_extension(D, A, strategy=args.strategy)
    except NotSeparable as exc:
        combo = " + ".join(f"{_q(w)}*{names[a]}" for a, w in exc.combination.items())
        out.emit(f"not separable: {combo} = {exc.gamble!r} is desirable",
                 status="not-separable", combination=combo.replace(" ", ""), gamble=repr(exc.gamble))
        return 2
    comments = []
    if args.trace:
        for k, step in enumerate(trace.layers, 1):
            basis = " ".join(repr(tuple(map(_q, b))).replace("'", "") for b in step.kernel.basis)
            comments.append(f"layer {k}: subspace basis {basis}")
            comments.append(f"layer {k}: functional ({','.join(map(_q, step.functional.coefficients))})")
            comments.append(f"layer {k}: mass ({','.join(map(_q, step.mass))})")
        comments.append(f"final subspace dimension {trace.final_kernel.dim}")
    if out.records:
        for k, m in enumerate(M.layers, 1):
            out.emit("", layer=k, mass=",".join(map(_q, m)))
    else:
        out.stream.write(dump_system(M, comments))
    return 0


def cmd_classify(args, out: Output) -> int:
    M = load_system(args.system)
    fam = M.classify_binary()
    out.emit(str(fam), family=fam.kind, rho=_q(fam.rho))
    return 0


def cmd_axioms(args, out: Output) -> int:
    model = load_model(args.model)
    grid, _ = load_options(args.grid)
    _match_space(model, grid.space, "grid")
    rule = _rule(args.rule, model)
    selected = args.axiom or list(axioms_mod.ALL_AXIOMS)
    bad = [a for a in selected if a not in axioms_mod.ALL_AXIOMS]
    if bad:
        raise UsageError(f"unknown axiom {bad[0]!r}")
    report = axioms_mod.check_axioms(rule, list(grid), args.max_size,
                                     convex_witness_points=args.witness_points,
                                     axioms=selected, dominance=args.dominance)
    for name, s in report.statuses.items():
        if s.passed:
            out.emit(f"{name} pass checked={s.checked}", axiom=name, status="pass", checked=s.checked)
        else:
            desc = s.witness.describe()
            out.emit(f"{name} FAIL {desc}", axiom=name, status="fail", witness=desc.replace(" ", ""))
    return 0 if report.all_passed else 2


def cmd_lift(args, out: Output) -> int:
    model = load_model(args.model)
    space, R, lots = load_lotteries(args.lotteries)
    _match_space(model, product_space(space, R), "lottery product space")
    rule = _rule(args.rule, model)
    names = list(lots)
    chosen = lift_choice(rule, [lots[k] for k in names])
    for k in names:
        ok = lots[k] in chosen
        out.emit(("+" if ok else "-") + k, lottery=k, status="chosen" if ok else "rejected",
                 gamble=repr(gamblify(lots[k])))
    worst = worst_reward_check(rule, lots.values())
    out.emit(f"worst reward {R.worst} {'respected' if worst else 'VIOLATED'}",
             worst_reward=R.worst, respected=str(worst).lower())
    return 0 if worst else 2


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lexchoice", description="Exact choice functions on finite gamble spaces.")
    p.add_argument("--records", action="store_true", help="print key=value records")
    # accepted after the subcommand too, without clobbering the global flag
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--records", action="store_true", default=argparse.SUPPRESS,
                        help="print key=value records")
    p.add_argument("--version", action="version", version=f"%(prog)s {_version()}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("coherent", parents=[common], help="check a cone for coherence")
    s.add_argument("--cone", required=True)
    s.set_defaults(func=cmd_coherent)

    rules = ["maximality", "lex", "convex"]
    s = sub.add_parser("choose", parents=[common], help="apply a choice rule to an option set")
    s.add_argument("--rule", choices=rules, required=True)
    s.add_argument("--model", required=True, help="cone or system file")
    s.add_argument("--options", required=True)
    s.set_defaults(func=cmd_choose)

    s = sub.add_parser("prevision", parents=[common], help="lower prevision of each option")
    s.add_argument("--model", required=True)
    s.add_argument("--options", required=True)
    s.set_defaults(func=cmd_prevision)

    s = sub.add_parser("extend", parents=[common], help="build a lexicographic system avoiding options")
    s.add_argument("--cone", required=True)
    s.add_argument("--avoid", required=True)
    s.add_argument("--strategy", choices=["eager", "lazy"], default="eager")
    s.add_argument("--trace", action="store_true", help="append subspaces and functionals as comments")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("classify", parents=[common], help="classify a system on a two-atom space")
    s.add_argument("--system", required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("axioms", parents=[common], help="audit the axioms of a rule on a grid")
    s.add_argument("--rule", choices=rules, required=True)
    s.add_argument("--model", required=True)
    s.add_argument("--grid", required=True, help="option-set file used as the universe")
    s.add_argument("--max-size", type=int, default=3)
    s.add_argument("--witness-points", type=int, default=None)
    s.add_argument("--axiom", action="append", help="restrict to this axiom (repeatable)")
    s.add_argument("--dominance", action="store_true", help="also check the dominance properties")
    s.set_defaults(func=cmd_axioms)

    s = sub.add_parser("lift", parents=[common], help="apply a rule to horse lotteries")
    s.add_argument("--rule", choices=rules, default="maximality")
    s.add_argument("--model", required=True, help="model on the states x non-worst rewards space")
    s.add_argument("--lotteries", required=True)
    s.set_defaults(func=cmd_lift)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.records, stdout)
    try:
        return args.func(args, out)
    except (ParseError, UsageError, SpaceMismatch) as exc:
        stderr.write(f"lexchoice: error: {exc}\n")
        return 1
    except LexChoiceError as exc:
        out.emit(f"error: {exc}", status="error", reason=type(exc).__name__)
        return 2


if __name__ == "__main__":
    sys.exit(main())
