"""Command line: ``mhopf verify | double | report``.

Exit codes: 0 all checks pass, 1 a verification failed, 2 parse or usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from typing import Optional

from . import catalog
from .double import VerificationFailed, build_double, double_report, opposite_double_iso
from .mha import Mha, SuiteConfig, mha_suite
from .pairing import Pairing, pairing_full_report
from .report import Report
from .specfile import ParseError, csv_rows, dump_double, dumps, load_path, mha_tables

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def default_window() -> int:
    raw = os.environ.get("MHOPF_DEFAULT_WINDOW", "8")
    try:
        w = int(raw)
    except ValueError:
        raise ParseError("MHOPF_DEFAULT_WINDOW", f"not an integer: {raw!r}") from None
    if w < 1:
        raise ParseError("MHOPF_DEFAULT_WINDOW", "must be positive")
    return w


def load(source: str, window: Optional[int]):
    """A spec file, or a catalog example name such as ``S3`` or ``Z``."""
    if os.path.exists(source):
        return load_path(source, window)
    if source in catalog.EXAMPLES:
        if source == "Z":
            return catalog.lazy_int_group_pair(window or default_window(), verify=False)
        return catalog.EXAMPLES[source]()
    raise ParseError("", f"no such file or catalog example: {source}")


def _window(obj, args) -> Optional[int]:
    if args.window is not None:
        return args.window
    return None if obj.is_finite else default_window()


def _cfg(args, window) -> SuiteConfig:
    return SuiteConfig(window=window, sample=args.sample, seed=args.seed)


def verify_report(obj, cfg: SuiteConfig) -> Report:
    if isinstance(obj, Mha):
        return mha_suite(obj, cfg)
    return pairing_full_report(obj, cfg)


def full_report(obj, cfg: SuiteConfig, double: bool = True) -> Report:
    rep = verify_report(obj, cfg)
    if isinstance(obj, Pairing):
        rep.title = f"report: {obj.name}"
        if double and obj.status == "pairing-verified":
            D = build_double(obj, verify="none")
            dcfg = cfg if cfg.sample is not None or not D.mha.is_finite or len(D.labels()) <= 16 \
                else SuiteConfig(cfg.window, 200, cfg.seed)
            rep.extend(double_report(D, dcfg))
            rep.extend(opposite_double_iso(D, dcfg))
    return rep


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(rep: Report, fmt: str) -> str:
    return rep.to_json() + "\n" if fmt == "json" else rep.render()


def cmd_verify(args) -> int:
    obj = load(args.spec, args.window)
    w = _window(obj, args)
    rep = verify_report(obj, _cfg(args, w))
    _emit(_render(rep, args.format), args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_report(args) -> int:
    obj = load(args.spec, args.window)
    w = _window(obj, args)
    rep = full_report(obj, _cfg(args, w), double=not args.no_double)
    _emit(_render(rep, args.format), args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_double(args) -> int:
    obj = load(args.spec, args.window)
    if not isinstance(obj, Pairing):
        raise ParseError("", "double needs a pairing spec")
    w = _window(obj, args)
    cfg = _cfg(args, w)
    pre = pairing_full_report(obj, cfg)
    if not pre.ok:
        sys.stderr.write(pre.render())
        return EXIT_FAIL
    try:
        D = build_double(obj, verify=args.verify, cfg=cfg if args.sample is not None else None)
    except VerificationFailed as exc:
        sys.stderr.write(exc.report.render())
        return EXIT_FAIL
    if not D.mha.is_finite:
        raise ParseError("", "structure constants of a lazy double cannot be exported")
    if args.format == "csv":
        buf = io.StringIO()
        w_ = csv.writer(buf, lineterminator="\n")
        w_.writerow(["map", "labels...", "coeff"])
        w_.writerows(csv_rows(mha_tables(D.mha)))
        text = buf.getvalue()
    else:
        text = dumps(dump_double(D)) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mhopf", description="Multiplier Hopf algebras, pairings and quantum doubles.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, fmts, default_fmt):
        sp.add_argument("spec", help="spec file (JSON) or catalog example name")
        sp.add_argument("--window", type=int, default=None, help="window for lazy bases (default $MHOPF_DEFAULT_WINDOW or 8)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--sample", type=int, default=None, help="random sample size instead of exhaustive checks")
        sp.add_argument("--format", choices=fmts, default=default_fmt)
        sp.add_argument("--out", default=None, help="write output here instead of stdout")

    common(sub.add_parser("verify", help="run the suites for the spec's level"), ("text", "json"), "text")
    rp = sub.add_parser("report", help="full invariant report, including the double")
    common(rp, ("text", "json"), "text")
    rp.add_argument("--no-double", action="store_true", help="skip the double")
    dp = sub.add_parser("double", help="export structure constants of the double")
    common(dp, ("json", "csv"), "json")
    dp.add_argument("--verify", choices=("full", "sample", "none"), default="sample")
    return p


def main(argv=None) -> int:
    p = parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.window is not None and args.window < 1:
        sys.stderr.write("mhopf: --window must be positive\n")
        return EXIT_USAGE
    cmds = {"verify": cmd_verify, "report": cmd_report, "double": cmd_double}
    try:
        return cmds[args.cmd](args)
    except ParseError as exc:
        sys.stderr.write(f"mhopf: parse error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"mhopf: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

