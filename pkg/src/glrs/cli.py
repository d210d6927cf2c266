"""The `glrs` command: check, derive, export."""

from __future__ import annotations

import argparse
import sys

from .errors import GlrsError, ParseError
from .presets import PRESETS, load_preset
from .workbench import (SUITES, InputError, Record, Report, emit_report, export_spec, resolve_targets,
                        run_suite, Context)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="glrs", description="Exact verification workbench for GL_{r,s}(2) x GL(1).")
    sub = ap.add_subparsers(dest="verb", required=True)

    chk = sub.add_parser("check", help="run verification suites")
    chk.add_argument("suites", nargs="+", metavar="SUITE", help=f"all or any of: {', '.join(SUITES)}")
    src = chk.add_mutually_exclusive_group()
    src.add_argument("--spec", metavar="FILE", help="spec file (JSON)")
    src.add_argument("--preset", action="append", metavar="NAME",
                     help=f"built-in preset, repeatable: all, {', '.join(PRESETS)} (default all)")
    chk.add_argument("--max-degree", type=int, default=4)
    chk.add_argument("--report", choices=("text", "json"), default="text")
    chk.add_argument("--out", metavar="FILE")

    der = sub.add_parser("derive", help="print derived relations or tables")
    der.add_argument("what", choices=("rtt", "rll", "calculus"))
    der.add_argument("--spec", metavar="FILE")
    der.add_argument("--preset", metavar="NAME")
    der.add_argument("--report", choices=("text", "json"), default="text")
    der.add_argument("--out", metavar="FILE")

    exp = sub.add_parser("export", help="write a preset as a spec file")
    exp.add_argument("--preset", required=True, metavar="NAME")
    exp.add_argument("--out", metavar="FILE")
    return ap


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc.strerror}") from None


def _derive_target(what: str, args):
    default = "ars" if what == "rtt" else "ars-dual"
    targets = resolve_targets([args.preset or default], args.spec)
    p = targets[0]
    if what == "rtt" and (p.rmatrix is None or p.tpattern is None):
        raise InputError(f"{p.name} has no R-matrix")
    if what != "rtt" and p.kind != "dual":
        raise InputError(f"{p.name} is not a dual preset")
    return p


def derive(what: str, args) -> Report:
    """Derived objects as records (suite = `what`, status pass, value in detail)."""
    p = _derive_target(what, args)
    ctx = Context(p, 4)
    rep = Report()
    if what == "rtt":
        from .frt import rtt_relations
        order = [g.name for g in p.presentation.generators]
        for i, rel in enumerate(rtt_relations(p.rmatrix, p.tpattern, order=order)):
            rep.records.append(Record("rtt", f"relation[{i}]", p.name, "pass", f"{rel} = 0"))
    elif what == "rll":
        rll = ctx.rll()
        for block in ("plus", "minus", "mixed"):
            for i, rel in enumerate(getattr(rll, block)):
                rep.records.append(Record("rll", f"{block}[{i}]", p.name, "pass", f"{rel} = 0"))
    else:
        F = ctx.calculus()
        for name in ("sigma", "chi", "conv", "d"):
            for key, val in getattr(F, name).items():
                label = ",".join(key) if isinstance(key, tuple) else key
                rep.records.append(Record("calculus", f"{name}[{label}]", p.name, "pass", str(val)))
    return rep


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.verb == "export":
            if args.preset not in PRESETS:
                raise InputError(f"unknown preset {args.preset!r}; choose from {', '.join(PRESETS)}")
            _write(export_spec(args.preset), args.out)
            return 0
        if args.verb == "derive":
            rep = derive(args.what, args)
            if args.report == "json":
                _write(emit_report(rep, "json"), args.out)
            else:
                _write("".join(f"{r.check}: {r.detail}\n" for r in rep.records), args.out)
            return 0
        targets = resolve_targets(args.preset or (), args.spec)
        rep = run_suite(targets, args.suites, args.max_degree)
        _write(emit_report(rep, args.report), args.out)
        return rep.exit_code
    except (InputError, ParseError) as exc:
        print(f"glrs: error: {exc}", file=sys.stderr)
        return 2
    except GlrsError as exc:
        print(f"glrs: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
