"""
Command-line front end.

Exit codes: 0 success, 1 diagnostics or a "distinct" verdict, 2 usage,
parse or lookup errors, 3 an "unknown" verdict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import corpus
from .diagram import BoundaryMismatch, DiagramError, normalize, to_json
from .fincat.category import TableError
from .render import FORMATS, render
from .rewrite import DEFAULT_SEARCH_BOUND, bounded_eq, default_depth, theory_rules
from .semantics import (InternalValue, MissingInterpretation, SemanticsError,
                        check_interpretation, distinct_witness, evaluate, interpretation_of,
                        interpretations_for)
from .syntax import CollageSyntaxError, format_diagram, parse_file

OK, FAILED, USAGE, UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path.startswith("corpus:"):
        return corpus.source(path[len("corpus:"):])
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise UsageError(f"{path}: {err.strerror or err}") from None


def _parse(path: str):
    try:
        return parse_file(_read(path))
    except CollageSyntaxError as err:
        raise UsageError(f"{path}:{err}") from None


def _lookup(doc, ref: str, path: str):
    try:
        return doc.find_diagram(ref)
    except (CollageSyntaxError, DiagramError) as err:
        raise UsageError(f"{path}: {err}") from None


def _int_in(lo, hi):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if not lo <= v <= hi:
            raise argparse.ArgumentTypeError(f"{v} is outside {lo}..{hi}")
        return v
    return parse


# check

def _check_one(path: str) -> tuple[int, list[str]]:
    try:
        doc = _parse(path)
    except UsageError as err:
        return USAGE, [f"error: {err}"]
    lines = []
    for theory in doc.theories.values():
        for dg in theory.check():
            where = f"{path}:{dg.pos}" if dg.pos else path
            lines.append(f"{where}: {theory.name}: {dg.invariant}: {dg.item}: {dg.message}")
    for decl in doc.interpretations.values():
        try:
            interp = interpretation_of(doc, decl)
            theory = doc.theory(decl.theory)
            diags = check_interpretation(theory, interp)
        except (SemanticsError, TableError, CollageSyntaxError) as err:
            lines.append(f"{path}:{decl.pos}: {decl.name}: interpretation: {err}")
            continue
        for dg in diags:
            lines.append(f"{path}:{decl.pos}: {decl.name}: {dg.invariant}: {dg.item}: {dg.message}")
    return (FAILED if lines else OK), lines


def run_check(args) -> int:
    with ThreadPoolExecutor(max_workers=max(1, min(8, len(args.files)))) as pool:
        results = list(pool.map(_check_one, args.files))
    for path, (status, lines) in zip(args.files, results):
        for line in lines:
            print(line, file=sys.stderr if status == USAGE else sys.stdout)
        if status == OK:
            print(f"{path}: ok")
    return max(status for status, _ in results)


# normalize

def run_normalize(args) -> int:
    doc = _parse(args.file)
    refs = args.diagrams or [f"{t.name}.{n}" for t in doc.theories.values() for n in t.diagrams]
    for ref in refs:
        theory, d = _lookup(doc, ref, args.file)
        nf = normalize(d)
        if args.json:
            print(json.dumps({"diagram": ref, "normal_form": to_json(nf)}, sort_keys=True,
                             ensure_ascii=False))
        else:
            print(f"{ref} = {format_diagram(nf)}")
    return OK


# eq

def run_eq(args) -> int:
    doc = _parse(args.file)
    t1, d1 = _lookup(doc, args.lhs, args.file)
    t2, d2 = _lookup(doc, args.rhs, args.file)
    if t1 is not t2:
        raise UsageError("both diagrams must belong to the same theory")
    if (d1.domain, d1.codomain) != (d2.domain, d2.codomain):
        raise UsageError(f"{args.lhs} and {args.rhs} have different boundaries")
    depth = default_depth() if args.depth is None else args.depth
    interps = interpretations_for(doc, t1.name)
    try:
        verdict = bounded_eq(d1, d2, theory_rules(t1), depth, args.search_bound,
                             witness=distinct_witness(t1, interps))
    except BoundaryMismatch as err:
        raise UsageError(str(err)) from None
    out = {"verdict": verdict.verdict, "lhs": args.lhs, "rhs": args.rhs, "depth": depth}
    if verdict.verdict == "equal":
        steps = verdict.trace.to_json()
        out["steps"] = len(steps)
        target = args.trace_out or f"{args.lhs}--{args.rhs}.trace.json".replace("/", "_")
        data = {"file": args.file, "theory": t1.name, "from": args.lhs.split(".")[-1],
                "to": args.rhs.split(".")[-1], "steps": steps}
        if target != "-":
            Path(target).write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n",
                                    encoding="utf-8")
            out["trace"] = target
        else:
            out["trace_steps"] = steps
    if verdict.witness:
        out["witness"] = verdict.witness
    if args.json:
        print(json.dumps(out, sort_keys=True, ensure_ascii=False))
    else:
        line = verdict.verdict
        if "steps" in out:
            line += f" ({out['steps']} steps, trace in {out.get('trace', 'stdout')})"
        if verdict.witness:
            line += f": {verdict.witness}"
        print(line)
        if out.get("trace_steps") is not None:
            print(json.dumps(out["trace_steps"], indent=2, ensure_ascii=False))
    return {"equal": OK, "distinct": FAILED, "unknown": UNKNOWN}[verdict.verdict]


# eval

def _choose_interpretation(doc, theory, name):
    decls = [d for d in doc.interpretations.values() if d.theory == theory.name]
    if name is not None:
        picked = [d for d in decls if name in (d.name, d.target)]
        if len(picked) != 1:
            have = ", ".join(sorted(d.name for d in decls)) or "none"
            raise UsageError(f"no unique interpretation of {theory.name} for {name!r} (have: {have})")
        return interpretation_of(doc, picked[0])
    if len(decls) != 1:
        have = ", ".join(sorted(d.name for d in decls)) or "none"
        raise UsageError(f"choose a model with --model (interpretations of {theory.name}: {have})")
    return interpretation_of(doc, decls[0])


def _plugs(theory, interp, value: InternalValue, explicit):
    if explicit:
        return [interp.mor(p) if p in interp.morphisms else p for p in explicit]
    out = []
    for sock in value.sockets:
        cands = [e.name for e in theory.signature.edges
                 if e.dom == (sock.names[0],) and e.cod == (sock.names[1],)
                 and e.name in interp.morphisms]
        if len(cands) != 1:
            return None
        out.append(interp.morphisms[cands[0]])
    return out


def run_eval(args) -> int:
    doc = _parse(args.file)
    theory, d = _lookup(doc, args.diagram, args.file)
    interp = _choose_interpretation(doc, theory, args.model)
    try:
        r = evaluate(theory, d, interp)
    except MissingInterpretation as err:
        print(f"error: {interp.name}: missing entries: {', '.join(err.gaps)}", file=sys.stderr)
        return USAGE
    except (SemanticsError, TableError, DiagramError) as err:
        print(f"error: {interp.name}: {err}", file=sys.stderr)
        return FAILED
    if isinstance(r, InternalValue):
        out = {"diagram": args.diagram, "model": interp.name, **r.to_json()}
        gs = _plugs(theory, interp, r, args.plug)
        if gs is not None:
            try:
                out["plugged"] = r.plug(gs)
            except (SemanticsError, TableError) as err:
                print(f"error: plug: {err}", file=sys.stderr)
                return USAGE
            if r.sockets:
                out["plugs"] = list(gs)
    else:
        out = {"diagram": args.diagram, "model": interp.name, **r.to_json(),
               "witness": r.witness()}
    if args.json:
        print(json.dumps(out, sort_keys=True, ensure_ascii=False, default=repr))
    elif isinstance(r, InternalValue):
        print(f"{args.diagram} in {interp.name}: point {out['point']} "
              f"({out['classes']} classes)")
        if "plugged" in out:
            via = f" with {', '.join(map(str, out.get('plugs', [])))}" if out.get("plugs") else ""
            print(f"plugged{via}: {out['plugged']}")
    else:
        print(f"{args.diagram} in {interp.name}: {r.value} : {r.source} -> {r.target}")
        print(f"  {r.witness()}")
    return OK


# render

def run_render(args) -> int:
    if args.format not in FORMATS:
        raise UsageError(f"unknown format {args.format!r}; expected one of {', '.join(FORMATS)}")
    doc = _parse(args.file)
    theory, d = _lookup(doc, args.diagram, args.file)
    text = render(d, args.format, theory.graph.zero_cells)
    if args.output and args.output != "-":
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return OK


# oracle

def run_oracle(args) -> int:
    from . import oracles
    if args.subtask == "coend-closure":
        if args.seed is None:
            raise UsageError("coend-closure needs --seed")
        rep = oracles.coend_closure(args.seed, args.count)
    else:
        doc = _parse(args.file or "corpus:twograph")
        theory = doc.theory(args.theory) if args.theory else next(
            t for t in doc.theories.values() if t.kind == "two")
        if args.subtask == "exchange-bfs":
            rep = oracles.exchange_bfs(theory.graph, args.max_layers or 4)
        else:
            rep = oracles.hom_count(theory.graph, args.max_layers or 3)
    print("\n".join(rep.lines()))
    return OK if rep.ok else FAILED


def run_examples(args) -> int:
    sys.stdout.write(corpus.index())
    return OK


# parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="collage", description=(
        "Check, normalize, prove, evaluate and render string diagrams for bimodular "
        "categories, functor boxes and internal diagrams. A file argument may also be "
        "corpus:NAME for a shipped example."))
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    c = sub.add_parser("check", help="parse, validate and typecheck files")
    c.add_argument("files", nargs="+")
    c.set_defaults(func=run_check)

    n = sub.add_parser("normalize", help="print exchange normal forms")
    n.add_argument("file")
    n.add_argument("diagrams", nargs="*", help="diagram names (default: all)")
    n.add_argument("--json", action="store_true")
    n.set_defaults(func=run_normalize)

    e = sub.add_parser("eq", help="decide equality by bounded rewriting")
    e.add_argument("file")
    e.add_argument("lhs")
    e.add_argument("rhs")
    e.add_argument("--depth", type=_int_in(0, 10_000), default=None,
                   help="rewrite depth (default: $COLLAGE_DEPTH or 32)")
    e.add_argument("--search-bound", type=_int_in(0, 64), default=DEFAULT_SEARCH_BOUND,
                   help="exchange moves used to expose a match (default: %(default)s)")
    e.add_argument("--trace-out", help="trace file to write on 'equal' ('-' for stdout)")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=run_eq)

    v = sub.add_parser("eval", help="evaluate a diagram in a finite model")
    v.add_argument("file")
    v.add_argument("diagram")
    v.add_argument("--model", help="interpretation or model name")
    v.add_argument("--plug", action="append", help="morphism to plug into the next socket")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=run_eval)

    r = sub.add_parser("render", help="draw a diagram")
    r.add_argument("file")
    r.add_argument("diagram")
    r.add_argument("--format", default="svg", help=f"one of {', '.join(FORMATS)}")
    r.add_argument("-o", "--output")
    r.set_defaults(func=run_render)

    o = sub.add_parser("oracle", help="compare a fast path with its brute-force oracle")
    o.add_argument("subtask", choices=("exchange-bfs", "coend-closure", "hom-count"))
    o.add_argument("--seed", type=int)
    o.add_argument("--count", type=_int_in(1, 100_000), default=100)
    o.add_argument("--max-layers", type=_int_in(0, 6))
    o.add_argument("--file", help="file holding a two theory (default: corpus:twograph)")
    o.add_argument("--theory")
    o.set_defaults(func=run_oracle)

    x = sub.add_parser("examples", help="list the shipped corpus")
    x.set_defaults(func=run_examples)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if os.environ.get("COLLAGE_DEPTH"):
        try:
            default_depth()
        except ValueError:
            print("error: COLLAGE_DEPTH must be an integer", file=sys.stderr)
            return USAGE
    try:
        return args.func(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE
    except MissingInterpretation as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
