"""Command-line front end.

Subcommands:

    kbound bound {castelnuovo,halphen,pi1,pi2,propagate} ...
    kbound scroll {scan,class,extremal,minimize} ...
    kbound verify {all,r2,r3,r4,r5,r6,appendix,sharpness} --from A --to B

All numbers are printed exactly (integers or "num/den"); ``--floor`` renders
integer floors for bounds. Output is deterministic: identical invocations
produce byte-identical output, except for the JSON timestamp field, which
``--no-timestamp`` suppresses.

Exit codes: 0 all requested checks verified (or pure queries), 1 a
certificate holds a counterexample or an exact invariant failed, 2 bad
arguments or out-of-domain inputs, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import bounds, scroll, verify
from .exact import (
    FrameRangeError,
    InconsistencyError,
    OutOfDomainError,
    rat_str,
)

FORMATS = ("table", "json", "csv")

BOUNDS_CSV_HEADER = ["formula", "d", "bound", "floor", "is_integer", "params"]
SCAN_CSV_HEADER = [
    "d", "a", "alpha", "beta", "degree", "k2", "genus", "admissible", "extremal",
]
VERIFY_CSV_HEADER = ["claim_id", "status", "params", "witness"]


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _kv_table(pairs: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in pairs)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _params_text(params: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in sorted(params.items()))


# ---------------------------------------------------------------------------
# bound

def _bound_one(args, d: int):
    profile = None
    if args.kind == "castelnuovo":
        result = bounds.castelnuovo_bound(args.r, d)
        profile = bounds.castelnuovo_profile(args.r, d)
    elif args.kind == "halphen":
        result = bounds.halphen_bound(d, args.s)
    elif args.kind == "pi1":
        result = bounds.pi1_bound(d)
        profile = bounds.pi1_profile(d)
    elif args.kind == "pi2":
        result = bounds.pi2_bound(d)
        profile = bounds.pi2_profile(d)
    else:  # propagate
        seed = [int(v) for v in args.seed.split(",")]
        profile = bounds.propagate_profile(seed, d)
        g = bounds.genus_from_profile(profile)
        result = bounds.GenusBoundResult(
            formula_id="propagated",
            d=d,
            bound=Fraction(g),
            params={"seed": args.seed},
        )
    return result, profile


def _bound_csv_row(result, floor_flag: bool) -> list:
    return [
        result.formula_id,
        result.d,
        str(result.floor) if floor_flag else rat_str(result.bound),
        result.floor,
        result.is_integer,
        _params_text(result.params),
    ]


def _cmd_bound(args) -> int:
    if args.d_to is not None:
        # (d, bound) table over the requested degree range
        if args.d_to < args.d:
            raise ValueError("--d-to must be >= --d")
        pairs = [_bound_one(args, d) for d in range(args.d, args.d_to + 1)]
        if args.format == "json":
            text = _json_text([r.to_json_dict() for r, _ in pairs])
        elif args.format == "csv":
            text = _csv_text(BOUNDS_CSV_HEADER, [_bound_csv_row(r, args.floor) for r, _ in pairs])
        else:
            lines = ["d  bound"]
            for r, _ in pairs:
                lines.append(f"{r.d}  {r.floor if args.floor else rat_str(r.bound)}")
            text = "\n".join(lines) + "\n"
        _emit(text, args.out)
        return 0

    result, profile = _bound_one(args, args.d)
    payload = result.to_json_dict()
    if profile is not None:
        payload["profile"] = profile.to_json_dict()

    if args.format == "json":
        text = _json_text(payload)
    elif args.format == "csv":
        text = _csv_text(BOUNDS_CSV_HEADER, [_bound_csv_row(result, args.floor)])
    else:
        pairs = [
            ("formula", result.formula_id),
            ("d", result.d),
            ("bound", str(result.floor) if args.floor else rat_str(result.bound)),
        ]
        if not args.floor:
            pairs.append(("floor", result.floor))
        pairs.append(("integer", "yes" if result.is_integer else "no"))
        pairs.extend((k, v) for k, v in result.params.items())
        if profile is not None:
            shown = list(profile.prefix)
            pairs.append(("profile", " ".join(str(v) for v in shown) + " ..."))
            pairs.append(("stabilizes_at", profile.stabilization_index))
        text = _kv_table(pairs)
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# scroll

def _class_row(d: int, a, c: scroll.DivisorClass) -> dict:
    admissible = scroll.is_admissible(c)
    return {
        "d": d,
        "a": a,
        "alpha": c.alpha,
        "beta": c.beta,
        "degree": c.degree(),
        "k2": scroll._k2_raw(c),
        "genus": scroll.sectional_genus(c) if admissible else None,
        "admissible": admissible,
        "extremal": (
            c.degree() % 2 == 0
            and c == scroll.DivisorClass(c.degree() // 2, -c.degree() // 2)
        ),
    }


def _rows_text(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return _json_text(rows)
    if fmt == "csv":
        return _csv_text(
            SCAN_CSV_HEADER,
            [
                [
                    r["d"], r["a"], r["alpha"], r["beta"], r["degree"], r["k2"],
                    "" if r["genus"] is None else r["genus"],
                    r["admissible"], r["extremal"],
                ]
                for r in rows
            ],
        )
    head = SCAN_CSV_HEADER
    widths = [
        max(len(h), max((len(str(r[h] if r[h] is not None else "")) for r in rows), default=0))
        for h in head
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip()]
    for r in rows:
        lines.append(
            "  ".join(
                str(r[h] if r[h] is not None else "").ljust(w)
                for h, w in zip(head, widths)
            ).rstrip()
        )
    return "\n".join(lines) + "\n"


def _cmd_scroll(args) -> int:
    if args.action == "scan":
        rows = scroll.frame_scan(args.d)
        _emit(_rows_text(rows, args.format), args.out)
        return 0
    if args.action == "class":
        c = scroll.DivisorClass(args.alpha, args.beta)
        admissible = scroll.is_admissible(c)
        row = {
            "d": c.degree(),
            "a": None,
            "alpha": c.alpha,
            "beta": c.beta,
            "degree": c.degree(),
            "k2": scroll._k2_raw(c),
            "genus": scroll.sectional_genus(c) if admissible else None,
            "admissible": admissible,
            "extremal": False,
        }
        reasons = []
        if c.alpha <= 0:
            reasons.append("alpha <= 0")
        if c.alpha + c.beta < 0:
            reasons.append("alpha + beta < 0")
        if c.degree() < 4:
            reasons.append(f"degree {c.degree()} < 4 (degenerate: the class would be a hyperplane section or worse)")
        if admissible:
            f = scroll.frame_from_class(c, c.degree())
            row["a"] = f.a
            row["extremal"] = (
                c.degree() % 2 == 0
                and c == scroll.DivisorClass(c.degree() // 2, -c.degree() // 2)
            )
        if args.format == "table" and reasons:
            text = _rows_text([row], args.format)
            text += "inadmissible: " + "; ".join(reasons) + "\n"
        elif args.format == "json":
            payload = dict(row)
            if reasons:
                payload["inadmissible_reasons"] = reasons
            text = _json_text(payload)
        else:
            text = _rows_text([row], args.format)
        _emit(text, args.out)
        return 0
    if args.action == "extremal":
        ext = scroll.extremal_class(args.d)
        f = scroll.frame_from_class(ext.cls, args.d)
        if args.format == "json":
            text = _json_text(
                {
                    "d": args.d,
                    "alpha": ext.cls.alpha,
                    "beta": ext.cls.beta,
                    "a": f.a,
                    "k2": ext.k2,
                    "genus": ext.genus,
                }
            )
        elif args.format == "csv":
            text = _csv_text(
                SCAN_CSV_HEADER,
                [[args.d, f.a, ext.cls.alpha, ext.cls.beta, args.d, ext.k2, ext.genus, True, True]],
            )
        else:
            text = _kv_table(
                [
                    ("d", args.d),
                    ("class", ext.cls.text()),
                    ("alpha", ext.cls.alpha),
                    ("beta", ext.cls.beta),
                    ("a", f.a),
                    ("k2", ext.k2),
                    ("genus", ext.genus),
                ]
            )
        _emit(text, args.out)
        return 0
    # minimize
    res = scroll.minimize_k2(args.d)
    payload = res.to_json_dict()
    payload["k2_min_closed_form"] = rat_str(scroll.k2_min_closed_form(args.d))
    if args.format == "json":
        text = _json_text(payload)
    elif args.format == "csv":
        text = _csv_text(sorted(payload), [[payload[k] for k in sorted(payload)]])
    else:
        text = _kv_table(sorted(payload.items()))
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify

def _gather_certificates(case: str, d_from: int, d_to: int, jobs: int):
    if case == "all":
        return verify.verify_theorem(d_from, d_to, jobs)
    certs = []
    if case == "r2":
        certs = [verify.verify_r2()]
    elif case == "r3":
        certs = [verify.verify_r3()]
    elif case == "r4":
        certs = verify.verify_r4(d_from, d_to)
    elif case == "r5":
        certs = [verify.verify_r5_remark()] + verify.verify_r5_exclusion(d_from, d_to, jobs)
    elif case == "r6":
        certs = [verify.verify_r_ge6_spanned(r) for r in (5, 6, 7, 8)]
        certs.append(verify.verify_r_ge6_spanned(9, cover_tail=True))
        certs.append(verify.verify_r_ge6_scroll(6))
        certs.append(verify.verify_r_ge6_scroll(7, cover_tail=True))
    elif case == "appendix":
        certs = [verify.verify_appendix(d_from, d_to, jobs)]
    elif case == "sharpness":
        certs = [verify.verify_sharpness(d_from, d_to, jobs)]
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown case {case!r}")
    certs.sort(key=verify.Certificate.sort_key)
    return verify.CaseVerdict(d_from=d_from, d_to=d_to, certificates=certs)


def _cmd_verify(args) -> int:
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("KBOUND_JOBS", "1"))
    if jobs < 1:
        raise ValueError("--jobs must be >= 1")
    verdict = _gather_certificates(args.case, args.d_from, args.d_to, jobs)

    timestamp = None
    if not args.no_timestamp:
        timestamp = datetime.now(timezone.utc).isoformat()

    if args.format == "json":
        text = verdict.to_json(timestamp)
    elif args.format == "csv":
        rows = [
            [
                c.claim_id,
                c.status,
                json.dumps(verify._jsonable(c.params), sort_keys=True),
                json.dumps(verify._jsonable(c.witness), sort_keys=True),
            ]
            for c in verdict.certificates
        ]
        text = _csv_text(VERIFY_CSV_HEADER, rows)
    else:
        width = max(len(c.claim_id) for c in verdict.certificates)
        lines = [f"degree range [{verdict.d_from}, {verdict.d_to}]"]
        for c in verdict.certificates:
            lines.append(f"{c.claim_id.ljust(width)}  {c.status}")
        lines.append(f"overall: {'verified' if verdict.overall else 'FAILED'}")
        text = "\n".join(lines) + "\n"

    _emit(text, args.out)

    skipped = [c for c in verdict.certificates if c.status == verify.OUT_OF_RANGE]
    if skipped:
        sys.stderr.write(
            f"warning: {len(skipped)} claim(s) outside their asserted range;"
            " reported, not asserted\n"
        )
    return 0 if verdict.overall else 1


# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kbound",
        description="Exact genus/K^2 bounds, scroll divisor classes, and"
        " certificate-producing verification of the lower bound K^2 >= -d(d-6).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="evaluate one of the genus bounds")
    bsub = b.add_subparsers(dest="kind", required=True)
    for kind in ("castelnuovo", "halphen", "pi1", "pi2", "propagate"):
        bp = bsub.add_parser(kind)
        bp.add_argument("--d", type=int, required=True)
        bp.add_argument("--d-to", dest="d_to", type=int, default=None,
                        help="sweep d..d-to and emit a (d, bound) table")
        if kind == "castelnuovo":
            bp.add_argument("--r", type=int, required=True)
        if kind == "halphen":
            bp.add_argument("--s", type=int, required=True)
        if kind == "propagate":
            bp.add_argument("--seed", required=True, help="three values, e.g. 4,9,16")
        bp.add_argument("--floor", action="store_true", help="print the integer floor")
        _add_common(bp)
        bp.set_defaults(func=_cmd_bound)

    s = sub.add_parser("scroll", help="divisor classes on the degree-3 scroll")
    ssub = s.add_subparsers(dest="action", required=True)
    sp = ssub.add_parser("scan")
    sp.add_argument("--d", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(func=_cmd_scroll)
    sp = ssub.add_parser("class")
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--beta", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(func=_cmd_scroll)
    for action in ("extremal", "minimize"):
        sp = ssub.add_parser(action)
        sp.add_argument("--d", type=int, required=True)
        _add_common(sp)
        sp.set_defaults(func=_cmd_scroll)

    v = sub.add_parser("verify", help="produce certificates for the named case")
    v.add_argument(
        "case",
        choices=("all", "r2", "r3", "r4", "r5", "r6", "appendix", "sharpness"),
    )
    v.add_argument("--from", dest="d_from", type=int, default=36)
    v.add_argument("--to", dest="d_to", type=int, default=500)
    v.add_argument("--jobs", type=int, default=None, help="parallel degree sweeps (default: KBOUND_JOBS or 1)")
    v.add_argument("--no-timestamp", action="store_true", help="omit the generated_at field for byte-identical output")
    _add_common(v)
    v.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OutOfDomainError, FrameRangeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except InconsistencyError as exc:
        sys.stderr.write(f"inconsistency: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
