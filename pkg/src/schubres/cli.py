"""Command-line interface: classify a group, resolve or certify a
single element, regenerate the embedded expected tables, and evaluate
Hecke-algebra expressions.

Exit codes: 0 success / counts match, 1 verified mismatch or
not-small, 2 usage error or unsupported input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__
from .coxeter import SymmetricGroup, parse_subset, subset_str, weyl_group_c2
from .hecke import HeckeContext, default_bits, p_str, smallness
from . import resolution as rsl
from . import tables


class UsageError(ValueError):
    pass


def make_group(type_: str, rank: int):
    type_ = type_.upper()
    if type_ == "A":
        return SymmetricGroup(rank + 1)
    if type_ == "C" and rank == 2:
        return weyl_group_c2()
    raise UsageError(f"unsupported group type {type_} rank {rank}")


def parse_perm(text: str) -> tuple:
    try:
        perm = tuple(int(p) for p in text.split())
    except ValueError:
        raise UsageError(f"cannot parse permutation {text!r}")
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise UsageError(f"{text!r} is not a permutation in one-line notation")
    return perm


def parse_data(text: str) -> tuple:
    try:
        return tuple(parse_subset(part) for part in text.split("|"))
    except ValueError:
        raise UsageError(f"cannot parse subset sequence {text!r}")


def data_json(subsets) -> list:
    return [sorted(J) for J in subsets]


def certificate_json(cert) -> dict:
    return {
        "verdict": cert.verdict,
        "positive_cells": [
            {"u": cert.w.group.key_str(key), "len": length, "deg": deg}
            for key, length, deg in cert.positive_cells
        ],
    }


def profile_json(profile) -> dict:
    group = profile.w.group
    cells = [
        {"u": group.key_str(key), "len": group.length_key(key), "N": list(n)}
        for key, n in sorted(
            profile.cells.items(),
            key=lambda kv: (group.length_key(kv[0]), kv[0]),
        )
    ]
    verdict = smallness(profile).verdict
    return {"w": str(profile.w), "cells": cells, "verdict": verdict}


def element_report_json(report) -> dict:
    out = {
        "w": str(report.w),
        "status": report.status,
        "route": report.route,
    }
    if report.resolution is not None:
        out["data"] = data_json(report.resolution.data.subsets)
        out["certificate"] = certificate_json(report.resolution.certificate)
    else:
        out["data"] = None
        out["certificate"] = None
    return out


def _emit(payload: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2)
    else:
        text = _render_text(payload)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def _render_text(payload, indent: str = "") -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_render_text(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(_render_text(item, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines)


# -- disk cache -----------------------------------------------------------------

def cache_dir() -> Path:
    override = os.environ.get("SCHUBERT_CACHE_DIR")
    if override:
        return Path(override)
    return Path.home() / ".cache" / "schubres"


def _classify_cache_path(type_: str, rank: int, budget: int) -> Path:
    key = f"{type_}-{rank}-{budget}-{__version__}"
    digest = hashlib.sha256(key.encode()).hexdigest()[:16]
    return cache_dir() / f"classify-{digest}.json"


def _classification_payload(group, report) -> dict:
    return {
        "group": f"symmetric group on {group.n} letters"
        if isinstance(group, SymmetricGroup)
        else str(group),
        "counts": report.counts,
        "elements": [element_report_json(e) for e in report.elements],
    }


# -- subcommands ----------------------------------------------------------------

def cmd_classify(args) -> int:
    group = make_group(args.type, args.rank)
    if not isinstance(group, SymmetricGroup):
        raise UsageError("classification is implemented for type A only")
    path = _classify_cache_path(args.type.upper(), args.rank, args.budget)
    payload = None
    if path.exists():
        payload = json.loads(path.read_text())
    if payload is None:
        report = rsl.classify(group, budget=args.budget, workers=args.workers)
        payload = _classification_payload(group, report)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload))
    expected = tables.EXPECTED_COUNTS.get(("A", args.rank))
    payload["expected"] = expected
    matches = expected is None or all(
        payload["counts"].get(k) == v for k, v in expected.items()
    )
    payload["matches_expected"] = matches
    _emit(payload, args)
    return 0 if matches else 1


def cmd_resolve(args) -> int:
    perm = parse_perm(args.perm)
    group = SymmetricGroup(len(perm))
    w = group.element_from_one_line(perm)
    found = rsl.search_small(w, budget=args.budget)
    smooth = bp_is_smooth(group, w)
    payload = {
        "w": str(w),
        "status": "none"
        if found is None
        else ("smooth" if smooth else "small"),
        "route": found.route if found else "",
        "data": data_json(found.data.subsets) if found else None,
        "certificate": certificate_json(found.certificate) if found else None,
        "profile": profile_json(found.profile) if found else None,
    }
    _emit(payload, args)
    return 0


def bp_is_smooth(group, w) -> bool:
    from . import bp

    return group.is_simply_laced() and bp.is_smooth(w)


def cmd_certify(args) -> int:
    perm = parse_perm(args.perm)
    group = SymmetricGroup(len(perm))
    w = group.element_from_one_line(perm)
    subsets = parse_data(args.data)
    ctx = HeckeContext(group, default_bits(group))
    try:
        result = rsl.evaluate(ctx, w, subsets)
    except rsl.NotAResolution as exc:
        payload = {
            "w": str(w),
            "data": data_json(subsets),
            "error": type(exc).__name__,
            "detail": str(exc),
        }
        _emit(payload, args)
        return 2
    cert = result.certificate
    payload = {
        "w": str(w),
        "data": data_json(result.data.subsets),
        "verdict": cert.verdict,
        "birational": result.profile.is_birational(),
        "certificate": certificate_json(cert),
        "profile": profile_json(result.profile),
    }
    _emit(payload, args)
    return 0 if cert.verdict == "small" else 1


def cmd_tables(args) -> int:
    which = args.which.upper()
    if which == "A4":
        rows = tables.regenerate_s5()
    elif which == "A5":
        rows = tables.regenerate_s6()
    else:
        raise UsageError(f"unknown table {args.which!r}; expected A4 or A5")
    failures = 0
    out_rows = []
    for r in rows:
        ok = (
            r.resolution is not None
            and r.resolution.certificate.verdict == "small"
            and r.tau_match
        )
        if not ok:
            failures += 1
        out_rows.append(
            {
                "w": " ".join(str(p) for p in r.w),
                "w1": " ".join(str(p) for p in r.w1),
                "certified": ok,
                "variant": r.variant,
                "data": data_json(r.resolution.data.subsets)
                if r.resolution
                else None,
            }
        )
    payload = {"table": which, "rows": out_rows, "failures": failures}
    _emit(payload, args)
    return 0 if failures == 0 else 1


def cmd_hecke(args) -> int:
    group = make_group(args.type, args.rank)
    ctx = HeckeContext(group, default_bits(group))
    if args.word:
        try:
            word = tuple(int(p) for p in args.word.split(","))
        except ValueError:
            raise UsageError(f"cannot parse word {args.word!r}")
        acc = ctx.unit()
        for s in word:
            acc = ctx.mul_Ts(acc, s)
        payload = {"word": list(word), "element": _hecke_str(ctx, acc)}
    elif args.xj:
        J = parse_subset(args.xj)
        payload = {
            "J": sorted(J),
            "element": _hecke_str(ctx, ctx.x_parabolic(J)),
        }
    elif args.data:
        subsets = parse_data(args.data)
        profile = ctx.parabolic_chain_profile(subsets)
        payload = profile_json(profile)
    else:
        raise UsageError("hecke needs one of --word, --xj, --data")
    _emit(payload, args)
    return 0


def _hecke_str(ctx, element) -> str:
    group = ctx.group
    parts = []
    for key, poly in sorted(
        ctx.to_tuples(element).items(),
        key=lambda kv: (-group.length_key(kv[0]), kv[0]),
    ):
        parts.append(f"({p_str(poly)})*T[{group.key_str(key)}]")
    return " + ".join(parts) if parts else "0"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubres",
        description="Search and certify small resolutions of Schubert "
        "varieties via parabolic resolution data.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", default="A", help="group type (A, or C)")
        p.add_argument("--rank", type=int, default=4, help="group rank")
        p.add_argument("--budget", type=int, default=rsl.DEFAULT_BUDGET)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out", help="write the report to this file")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("classify", help="classify every element of a group")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("resolve", help="search a small resolution of one element")
    common(p)
    p.add_argument("--perm", required=True, help='one-line notation, e.g. "4 2 3 1"')
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("certify", help="certify given resolution data")
    common(p)
    p.add_argument("--perm", required=True)
    p.add_argument("--data", required=True, help='subset sequence, e.g. "1,3|2,3|1,3"')
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("tables", help="regenerate an embedded expected table")
    common(p)
    p.add_argument("--which", default="A4", help="A4 or A5")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("hecke", help="evaluate Hecke products and profiles")
    common(p)
    p.add_argument("--word", help='generator word, e.g. "1,2,1"')
    p.add_argument("--xj", help='parabolic subset, e.g. "1,2"')
    p.add_argument("--data", help="subset sequence for a fiber profile")
    p.set_defaults(func=cmd_hecke)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
