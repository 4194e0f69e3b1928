"""Command-line interface: ``gja <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 engine error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from dataclasses import dataclass

from . import __version__
from .algebra import A, AlgebraTable, Element, format_element, format_table, load_algebra
from .axioms import classify_assoc
from .brackets import (
    INSTANCES_BY_NAME,
    JACOBI_INSTANCES,
    bracket,
    commutator_variant,
    jacobi_fito,
    jacobi_foti,
)
from .errors import AlgebraLoadError, ExprSyntaxError, GJAError, UnknownElement
from .parser import eval_text, parse_word
from .rep import left_matrix, right_matrix
from .report import element_json, sort_witnesses
from .suites import SUITES, run
from .words import contract_traced, normalize

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_ENGINE, EXIT_IO = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    command: str
    algebra: str = "A"
    format: str = "text"
    mode: str = "fito"
    suite: str = "all"
    variant: str | None = None
    jobs: int = 1


def _emit(fmt: str, text: str, obj: dict, rows: list[list[str]]):
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _element_out(cfg: RunConfig, alg: AlgebraTable, label: str, x: Element):
    _emit(
        cfg.format,
        format_element(x),
        {"algebra": alg.name, "input": label, "value": element_json(x)},
        [["input", "value"], [label, format_element(x)]],
    )
    return EXIT_OK


def cmd_eval(args, cfg: RunConfig, alg: AlgebraTable) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        x = eval_text(args.expr, alg)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return _element_out(cfg, alg, args.expr, x)


def cmd_bracket(args, cfg: RunConfig, alg: AlgebraTable) -> int:
    x = bracket(eval_text(args.left, alg), eval_text(args.right, alg))
    return _element_out(cfg, alg, f"<{args.left},{args.right}>", x)


def cmd_normalize(args, cfg: RunConfig, alg: AlgebraTable) -> int:
    w = normalize(parse_word(args.word, alg))
    _emit(cfg.format, str(w), {"input": args.word, "normal_form": str(w)}, [["input", "normal_form"], [args.word, str(w)]])
    return EXIT_OK


def cmd_contract(args, cfg: RunConfig, alg: AlgebraTable) -> int:
    x, steps = contract_traced(parse_word(args.word, alg))
    chain = [str(s.before) for s in steps] + [format_element(x)]
    if cfg.format == "text" and args.trace:
        text = " -> ".join(chain)
    else:
        text = format_element(x)
    _emit(
        cfg.format,
        text,
        {"input": args.word, "value": element_json(x), "chain": chain,
         "grade_signs": [s.grade_sign for s in steps]},
        [["input", "value", "chain"], [args.word, format_element(x), " -> ".join(chain)]],
    )
    return EXIT_OK


def cmd_jacobi(args, cfg: RunConfig, alg: AlgebraTable) -> int:
    if alg is not A:
        raise GJAError("the super-Jacobi identities are defined over A only")
    if cfg.variant == "commutator":
        insts = [commutator_variant(INSTANCES_BY_NAME["outer-1"])]
    else:
        insts = list(JACOBI_INSTANCES)
    evaluate = jacobi_fito if cfg.mode == "fito" else jacobi_foti
    rows = [(inst.name, str(inst), evaluate(inst)) for inst in insts]
    all_zero = all(v.is_zero() for _, _, v in rows)
    width = max(len(r[1]) for r in rows)
    lines = [f"mode {cfg.mode}" + (f", variant {cfg.variant}" if cfg.variant else "")]
    for name, text, v in rows:
        lines.append(f"  {name:<8} {text:<{width}}  = {format_element(v):<10} {'zero' if v.is_zero() else 'NONZERO'}")
    _emit(
        cfg.format,
        "\n".join(lines),
        {
            "mode": cfg.mode,
            "variant": cfg.variant,
            "all_zero": all_zero,
            "identities": [{"id": n, "expression": t, "value": element_json(v), "zero": v.is_zero()} for n, t, v in rows],
        },
        [["id", "expression", "value", "zero"]] + [[n, t, format_element(v), str(v.is_zero()).lower()] for n, t, v in rows],
    )
    return EXIT_OK if all_zero else EXIT_VERIFY


def cmd_verify(args, cfg: RunConfig, alg: AlgebraTable) -> int:
    report = run(cfg.suite, alg, jobs=cfg.jobs)
    if cfg.format == "json":
        sys.stdout.write(report.dumps())
    elif cfg.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_classify(args, cfg: RunConfig, alg: AlgebraTable) -> int:
    r = classify_assoc(alg)
    kind = r.summary["class"]
    ws = {k: sort_witnesses(v.witnesses)[:5] for k, v in r.results.items()}
    lines = [kind]
    for key in ("associative", "antiassociative"):
        for w in ws[key][:3]:
            lines.append(f"  not {key}: ({','.join(w['args'])}) (xy)z = {w['lhs']}, delta x(yz) = {w['rhs']}")
    _emit(
        cfg.format,
        "\n".join(lines),
        {"algebra": alg.name, "class": kind, "witnesses": ws},
        [["algebra", "class"], [alg.name, kind]],
    )
    return EXIT_OK


def cmd_table(args, cfg: RunConfig, alg: AlgebraTable) -> int:
    cells = [[format_element(alg.entry(i, j)) for j in range(alg.dim)] for i in range(alg.dim)]
    _emit(
        cfg.format,
        format_table(alg),
        {"algebra": alg.name, "generators": alg.names, "parity": alg.parities, "rows": cells},
        [["*"] + alg.names] + [[g] + row for g, row in zip(alg.names, cells)],
    )
    return EXIT_OK


def cmd_rep(args, cfg: RunConfig, alg: AlgebraTable) -> int:
    if args.element not in alg.names:
        raise UnknownElement(f"{alg.name} has no generator {args.element!r}")
    x = alg.gen(args.element)
    sides = ["left", "right"] if args.side == "both" else [args.side]
    mats = {s: (left_matrix(x) if s == "left" else right_matrix(x)) for s in sides}
    text = "\n".join(f"{'L' if s == 'left' else 'R'}({args.element}) =\n{m}" for s, m in mats.items())
    rows = [["side", "row"] + alg.names]
    for s, m in mats.items():
        for g, r in zip(alg.names, m.to_json()):
            rows.append([s, g] + r)
    _emit(cfg.format, text, {"algebra": alg.name, "element": args.element, **{s: m.to_json() for s, m in mats.items()}}, rows)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "bracket": cmd_bracket,
    "normalize": cmd_normalize,
    "contract": cmd_contract,
    "jacobi": cmd_jacobi,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "table": cmd_table,
    "rep": cmd_rep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", default="A", help="A, H, C, or a path to an algebra JSON document")
    common.add_argument("--format", default="text", choices=["text", "json", "csv"])

    p = argparse.ArgumentParser(prog="gja", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"gja {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    s.add_argument("expr", nargs="+")
    s = sub.add_parser("bracket", parents=[common], help="parity-dispatched bracket <x,y>")
    s.add_argument("left")
    s.add_argument("right")
    s = sub.add_parser("normalize", parents=[common], help="normal-order a word")
    s.add_argument("word", nargs="+")
    s = sub.add_parser("contract", parents=[common], help="totally contract a word")
    s.add_argument("word", nargs="+")
    s.add_argument("--trace", action="store_true", help="print the contraction chain")
    s = sub.add_parser("jacobi", parents=[common], help="evaluate the eight super-Jacobi identities")
    s.add_argument("--mode", default="fito", choices=["fito", "foti"])
    s.add_argument("--variant", choices=["commutator"])
    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("--suite", default="all", choices=["all", *SUITES])
    s.add_argument("--jobs", type=int, default=1)
    sub.add_parser("classify", parents=[common], help="associativity class with witnesses")
    sub.add_parser("table", parents=[common], help="print the multiplication table")
    s = sub.add_parser("rep", parents=[common], help="left/right regular matrices of a generator")
    s.add_argument("--element", required=True)
    s.add_argument("--side", default="left", choices=["left", "right", "both"])
    return p


def _protect_negative(argv: list[str]) -> list[str]:
    # All options are long; a single-dash token such as "-3/2 cbcb" or "-a" is an
    # expression. A leading space keeps argparse from reading it as a flag.
    return [" " + t if len(t) > 1 and t[0] == "-" and t[1] != "-" and t != "-h" else t for t in argv]


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_protect_negative(list(argv)))
    for key in ("expr", "word"):
        if isinstance(getattr(args, key, None), list):
            setattr(args, key, " ".join(t.strip() for t in getattr(args, key)))
    cfg = RunConfig(
        command=args.command,
        algebra=args.algebra,
        format=args.format,
        mode=getattr(args, "mode", "fito"),
        suite=getattr(args, "suite", "all"),
        variant=getattr(args, "variant", None),
        jobs=getattr(args, "jobs", 1),
    )
    try:
        alg = load_algebra(cfg.algebra)
        return COMMANDS[cfg.command](args, cfg, alg)
    except (ExprSyntaxError, AlgebraLoadError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        if isinstance(e, ExprSyntaxError) and e.text:
            print(f"  {e.text}\n  {' ' * e.pos}^", file=sys.stderr)
        return EXIT_PARSE
    except GJAError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ENGINE
    except KeyError as e:
        print(f"error: {e.args[0] if e.args else e}", file=sys.stderr)
        return EXIT_ENGINE
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
