"""Command-line frontend.

Subcommands: nf (normal form of an expression), construct (change of
scalars, tensor, tensor-k, opposite, enveloping), check (classification
and confluence reports), iso (homomorphism / degree-bounded isomorphism
certification), growth (standard-monomial counts).

Reports are deterministic `key: value` lines under `[section]` headers;
exit status 0 = all requested checks passed, 1 = a check failed (witness
in the report), 2 = input error.
"""

from __future__ import annotations

import argparse
import sys

from . import classify, constructors, homcheck, presfile
from .commring import PolyRing
from .errors import SkewPBWError
from .pbwcore import Presentation


class Report:
    """Accumulates deterministic report text."""

    def __init__(self):
        self.lines = []

    def section(self, name):
        if self.lines:
            self.lines.append("")
        self.lines.append(f"[{name}]")

    def kv(self, key, value):
        self.lines.append(f"{key}: {value}")

    def render(self):
        return "\n".join(self.lines) + "\n"


def _bool(b):
    return "true" if b else "false"


def _load(path) -> Presentation:
    return presfile.parse_presentation_file(path)


def cmd_nf(args) -> int:
    pres = _load(args.file)
    if not args.no_warn and "diamond" not in pres.flags:
        print(
            "warning: presentation not confluence-checked; "
            "normal forms assume it (run: skewpbw check --diamond 4)",
            file=sys.stderr,
        )
    value = presfile.parse_expression(pres, args.expression)
    print(value)
    return 0


def cmd_construct(args) -> int:
    if args.kind == "scalars":
        if len(args.inputs) != 1:
            raise SkewPBWError("scalars takes one input file")
        if not args.gens:
            raise SkewPBWError("scalars needs --gens with new scalar names")
        out = constructors.change_of_scalars(_load(args.inputs[0]), PolyRing(tuple(args.gens)))
    elif args.kind in ("tensor", "tensor-k"):
        if len(args.inputs) != 2:
            raise SkewPBWError(f"{args.kind} takes two input files")
        a, b = _load(args.inputs[0]), _load(args.inputs[1])
        out = (
            constructors.tensor_same_ring(a, b)
            if args.kind == "tensor"
            else constructors.tensor_k(a, b)
        )
    elif args.kind == "op":
        if len(args.inputs) != 1:
            raise SkewPBWError("op takes one input file")
        out, _ = constructors.opposite(_load(args.inputs[0]))
    elif args.kind == "env":
        if len(args.inputs) != 1:
            raise SkewPBWError("env takes one input file")
        out = constructors.enveloping(_load(args.inputs[0]))
    else:  # pragma: no cover - argparse restricts choices
        raise SkewPBWError(f"unknown construction {args.kind!r}")
    presfile.write_presentation_file(out, args.output)
    return 0


def cmd_check(args) -> int:
    pres = _load(args.file)
    rep = Report()
    rep.section("algebra")
    rep.kv("name", pres.name)
    rep.kv("ring", repr(pres.ring))
    rep.kv("vars", " ".join(pres.var_names))

    do_classify = args.classify
    do_diamond = args.diamond is not None
    do_graded = args.graded
    do_cy = args.cy
    if not (do_classify or do_diamond or do_graded or do_cy):
        do_classify, do_diamond = True, True
        args.diamond = 4

    failed = False
    if do_classify or do_cy:
        flags = classify.classify_flags(pres)
        rep.section("classify")
        rep.kv("constant", _bool(flags.constant))
        rep.kv("quasi_commutative", _bool(flags.quasi_commutative))
        rep.kv("bijective", _bool(flags.bijective))

    if do_diamond:
        ok, witness = classify.diamond_check(pres, args.diamond)
        rep.section("diamond")
        rep.kv("degree", args.diamond)
        rep.kv("ok", _bool(ok))
        rep.kv("witness", "-" if ok else witness)
        failed = failed or not ok

    if do_graded or do_cy:
        try:
            graded_ok, reasons = classify.graded_check(pres)
        except SkewPBWError as exc:
            graded_ok, reasons = False, (str(exc),)
        connected = classify.connected_check(pres)
        if do_graded:
            rep.section("graded")
            rep.kv("ok", _bool(graded_ok))
            for k, reason in enumerate(reasons):
                rep.kv(f"reason{k}", reason)
            rep.kv("connected", _bool(connected))
            failed = failed or not graded_ok

    if do_cy:
        verdict = classify.cy_precondition(pres, args.assert_base_cy)
        rep.section("cy")
        rep.kv("cy_precondition", verdict)
        rep.kv("note", verdict.note)
        failed = failed or not verdict.satisfied

    sys.stdout.write(rep.render())
    return 1 if failed else 0


def _parse_images_file(path, src: Presentation, dst: Presentation) -> homcheck.GeneratorImages:
    var_imgs = {}
    coeff_imgs = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            keyword, _, rest = line.partition(" ")
            name, arrow, expr = rest.partition("->")
            name = name.strip()
            if keyword not in ("var", "coeff") or not arrow:
                raise SkewPBWError(
                    f"images file line {line_no}: expected 'var|coeff <name> -> <expr>'"
                )
            if keyword == "var":
                var_imgs[name] = presfile.parse_expression(dst, expr)
            else:
                coeff_imgs[name] = presfile.eval_poly(
                    presfile._tokenize(expr, line_no), dst.ring, line_no=line_no
                )
    try:
        vi = tuple(var_imgs[v] for v in src.var_names)
        ci = tuple(coeff_imgs[g] for g in src.ring.names)
    except KeyError as exc:
        raise SkewPBWError(f"images file missing image for {exc.args[0]!r}") from None
    return homcheck.GeneratorImages(vi, ci)


def cmd_iso(args) -> int:
    src = _load(args.src)
    dst = _load(args.dst)
    phi = _parse_images_file(args.images, src, dst)
    report = homcheck.check_graded_iso(src, dst, phi, args.degree)
    rep = Report()
    rep.section("hom")
    rep.kv("ok", _bool(report.hom.ok))
    rep.kv("witness", report.hom.failing_relation or "-")
    if report.hom.ok:
        rep.section("iso")
        rep.kv("degree", args.degree)
        rep.kv("ok", _bool(report.ok))
        rep.section("ranks")
        for p, src_count, dst_count, rank in report.table:
            rep.kv(p, f"src={src_count} dst={dst_count} rank={rank}")
    sys.stdout.write(rep.render())
    return 0 if (report.hom.ok and report.ok) else 1


def cmd_growth(args) -> int:
    pres = _load(args.file)
    counts = classify.growth(pres, args.degree)
    rep = Report()
    rep.section("growth")
    rep.kv("vars", pres.n)
    rep.kv("counts", " ".join(f"{p}:{c}" for p, c in enumerate(counts)))
    sys.stdout.write(rep.render())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skewpbw",
        description="Exact normal-form arithmetic and structure checks "
        "for skew PBW extension presentations.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("file")
    p.add_argument("expression")
    p.add_argument("--no-warn", action="store_true", help="suppress the confluence warning")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("construct", help="build a derived presentation")
    p.add_argument("kind", choices=["scalars", "tensor", "tensor-k", "op", "env"])
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--gens", nargs="*", default=None, help="scalar generator names (scalars)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="classification / confluence / CY reports")
    p.add_argument("file")
    p.add_argument("--diamond", type=int, default=None, metavar="D")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--graded", action="store_true")
    p.add_argument("--cy", action="store_true")
    p.add_argument("--assert-base-cy", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("iso", help="certify a homomorphism / bounded isomorphism")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("images")
    p.add_argument("--degree", type=int, default=6)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("growth", help="standard-monomial counts by degree")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=8)
    p.set_defaults(func=cmd_growth)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SkewPBWError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
