"""Command-line front end.

Every subcommand takes ``--H`` and ``--G`` (a preset name or a JSON group
file) and ``--json`` for line-delimited JSON output.  Exit status is 0 on
success, 1 on domain errors and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .conjugacy import ClassKind, are_conjugate, canonical_class, enumerate_U_classes
from .errors import FreeProdError
from .groups import load_group_file, preset
from .homology import assemble_reduced_HC, assemble_reduced_PHC, parse_ring
from .roots import FiniteSide, FullGroup, InfiniteCyclic, centralizer, class_invariants, primitive_root
from .words import FreeProduct, classify_type

MAX_CLI_ORDER = 64


class GroupSourceError(FreeProdError):
    pass


def resolve_group(source):
    try:
        t = preset(source)
    except KeyError:
        path = Path(source)
        if not path.is_file():
            raise GroupSourceError(f"{source!r} is neither a preset nor a group file") from None
        t = load_group_file(path)
    if t.order > MAX_CLI_ORDER:
        raise GroupSourceError(f"{t.name} has order {t.order}; the CLI accepts at most {MAX_CLI_ORDER}")
    return t


def _fmt_n(n):
    return "inf" if n == math.inf else n


class Output:
    def __init__(self, structured, stream):
        self.structured = structured
        self.stream = stream

    def emit(self, text, record):
        if self.structured:
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def _module_json(m):
    return {"text": str(m), **m.to_json()}


def cmd_reduce(ctx, args, out):
    w = ctx.parse(args.word)
    out.emit(str(w), {"word": str(w), "length": len(w)})


def cmd_mul(ctx, args, out):
    w = ctx.identity
    for text in args.words:
        w = w * ctx.parse(text)
    out.emit(str(w), {"word": str(w), "length": len(w)})


def cmd_inv(ctx, args, out):
    w = ~ctx.parse(args.word)
    out.emit(str(w), {"word": str(w), "length": len(w)})


def cmd_pow(ctx, args, out):
    w = ctx.parse(args.word) ** args.exponent
    out.emit(str(w), {"word": str(w), "length": len(w)})


def cmd_type(ctx, args, out):
    w = ctx.parse(args.word)
    t = classify_type(w)
    name = "Empty" if t.value == 0 else f"Type{t.value}"
    out.emit(name, {"word": str(w), "type": name})


def _class_record(c):
    n, k = class_invariants(c)
    return {"kind": c.kind.value, "word": str(c.rep), "index": c.index, "n": _fmt_n(n), "k": k}


def cmd_class(ctx, args, out):
    c = canonical_class(ctx.parse(args.word))
    rec = _class_record(c)
    out.emit(f"{c}  n={rec['n']} k={rec['k'] if rec['k'] is not None else '-'}", rec)


def cmd_conjugate(ctx, args, out):
    ans = are_conjugate(ctx.parse(args.word1), ctx.parse(args.word2))
    out.emit(str(ans).lower(), {"conjugate": ans})


def cmd_root(ctx, args, out):
    data = primitive_root(ctx.parse(args.word))
    out.emit(
        f"root: {data.root}\nk: {data.multiplicity}",
        {"root": str(data.root), "k": data.multiplicity, "canonical": str(data.canonical)},
    )


def cmd_centralizer(ctx, args, out):
    c = centralizer(ctx.parse(args.word))
    if isinstance(c, FullGroup):
        out.emit("full group", {"variant": "full"})
    elif isinstance(c, FiniteSide):
        side = c.side.letter.upper()
        elems = sorted(c.elements)
        out.emit(
            f"finite {side}-centralizer {{{', '.join(c.side.letter + str(i) for i in elems)}}}"
            f" conjugated by {c.conjugator}",
            {"variant": "finite", "side": side, "elements": elems, "conjugator": str(c.conjugator)},
        )
    else:
        assert isinstance(c, InfiniteCyclic)
        out.emit(
            f"infinite cyclic generated by {c.generator}, index k={c.k}",
            {"variant": "infinite_cyclic", "generator": str(c.generator), "k": c.k},
        )


def cmd_classes(ctx, args, out):
    for w in enumerate_U_classes(ctx, args.max_pairs):
        c = canonical_class(w)
        assert c.kind is ClassKind.MIXED
        rec = _class_record(c)
        out.emit(f"{w}\tk={rec['k']}\tn={rec['n']}", rec)


def _report(report, out, title):
    ring = report.ring
    cols = report.columns
    label = (lambda c: f"deg{c}") if report.theory == "HC" else str
    out.emit(
        f"{title}, R = {ring}\n{report.truncation}",
        {"record": "header", "theory": report.theory, "ring": str(ring),
         "columns": list(cols), "truncation": report.truncation},
    )
    rows = []
    for side in report.sides:
        vals = ["symbolic"] * len(cols) if side.symbolic else [str(v) for v in side.values]
        rows.append((side.label, vals))
        out_rec = {"record": "side", "label": side.label, "symbolic": side.symbolic}
        if not side.symbolic:
            out_rec["values"] = [_module_json(v) for v in side.values]
        if out.structured:
            out.emit("", out_rec)
    for row in report.rows:
        rows.append((f"U[{row.word}] k={row.k}", [str(v) for v in row.values]))
        if out.structured:
            out.emit("", {"record": "class", "word": str(row.word), "k": row.k, "n": "inf",
                          "values": [_module_json(v) for v in row.values]})
    total = report.total()
    if total is not None:
        rows.append(("total", [str(v) for v in total]))
        if out.structured:
            out.emit("", {"record": "total", "values": [_module_json(v) for v in total]})
    if not out.structured:
        width = max([len(r[0]) for r in rows] + [8])
        colw = max([len(v) for r in rows for v in r[1]] + [len(label(c)) for c in cols])
        lines = [" " * width + "  " + "  ".join(label(c).ljust(colw) for c in cols)]
        for name, vals in rows:
            lines.append(name.ljust(width) + "  " + "  ".join(v.ljust(colw) for v in vals))
        if total is None:
            lines.append("(total not evaluated: symbolic side summands)")
        out.emit("\n".join(line.rstrip() for line in lines), None)


def cmd_hc(ctx, args, out):
    ring = parse_ring(args.ring)
    report = assemble_reduced_HC(ctx.h, ctx.g, ring, args.max_degree, args.class_bound)
    _report(report, out, f"reduced HC_*(R[{ctx.h.name} * {ctx.g.name}])")


def cmd_phc(ctx, args, out):
    ring = parse_ring(args.ring)
    parity = None if args.parity == "both" else args.parity
    report = assemble_reduced_PHC(ctx.h, ctx.g, ring, parity, args.class_bound)
    _report(report, out, f"reduced PHC_*(R[{ctx.h.name} * {ctx.g.name}])")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--H", dest="h", required=True, help="preset name or group JSON file")
    common.add_argument("--G", dest="g", required=True, help="preset name or group JSON file")
    common.add_argument("--json", action="store_true", help="line-delimited JSON output")

    parser = argparse.ArgumentParser(prog="freeprod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("reduce", cmd_reduce, "reduced form of a word").add_argument("word")
    add("mul", cmd_mul, "product of words").add_argument("words", nargs="+")
    add("inv", cmd_inv, "inverse of a word").add_argument("word")
    p = add("pow", cmd_pow, "integer power of a word")
    p.add_argument("word")
    p.add_argument("exponent", type=int)
    add("type", cmd_type, "syllable type of a word").add_argument("word")
    add("class", cmd_class, "canonical conjugacy class").add_argument("word")
    p = add("conjugate", cmd_conjugate, "test conjugacy of two words")
    p.add_argument("word1")
    p.add_argument("word2")
    add("root", cmd_root, "primitive root and multiplicity").add_argument("word")
    add("centralizer", cmd_centralizer, "centralizer structure").add_argument("word")
    p = add("classes", cmd_classes, "enumerate mixed conjugacy classes")
    p.add_argument("--max-pairs", type=_positive, required=True, metavar="L")
    for name, func in (("hc", cmd_hc), ("phc", cmd_phc)):
        p = add(name, func, f"reduced {name.upper()} of the group ring")
        p.add_argument("--ring", default="Q", help="Z, Z/<m>, Q or F<p>")
        p.add_argument("--class-bound", type=_positive, default=2, metavar="L")
        if name == "hc":
            p.add_argument("--max-degree", type=_nonnegative, default=4, metavar="D")
        else:
            p.add_argument("--parity", choices=("even", "odd", "both"), default="both")
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    out = Output(args.json, stdout)
    try:
        ctx = FreeProduct(resolve_group(args.h), resolve_group(args.g))
        args.func(ctx, args, out)
    except FreeProdError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run())
