"""Batch front-end: verification, discovery, order, zeros, suites, moments.

Reports are canonical JSON (sorted keys, sorted claim ids, no timestamps), so
identical inputs produce byte-identical files at any parallelism degree.
Zero tables are CSV with exact box endpoints plus decimal midpoints that are
explicitly labeled approximate.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .exactnum import format_scalar
from .families import (
    FAMILY_IDS,
    FamilySpec,
    canonical_family,
    discrete_moment,
    gauss_moment,
    load_family_config,
    monic_poly,
    region_check,
    support_interval,
)
from .polyalg import refine_root, sturm_isolate
from .quasi import quasi_order, suite_exit_status, theorem_suite
from .recurrences import (
    CATALOG,
    ShiftSpec,
    catalog_coeffs,
    catalog_manifest,
    discover_coeffs,
    entries_for,
    verify_entry,
)
from .refcases import REFERENCE, catalog_instance

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


def _parse_width(text: str) -> Fraction:
    """Widths are positive rational powers of 1/2 or 1/10: "1e-12", "2^-40"."""
    text = text.strip().lower()
    if text.startswith("2^-"):
        return Fraction(1, 2 ** int(text[3:]))
    if "e-" in text:
        mant, _, exp = text.partition("e-")
        if mant in ("", "1"):
            return Fraction(1, 10 ** int(exp))
    raise argparse.ArgumentTypeError(
        f"width must look like 1e-12 or 2^-40, got {text!r}"
    )


def _parse_n_range(text: str):
    if ".." in text:
        a, _, b = text.partition("..")
        return int(a), int(b)
    n = int(text)
    return n, n


def _decimal_str(value: Fraction, digits: int) -> str:
    """Deterministic fixed-point decimal rendering (round half away from 0)."""
    sign = "-" if value < 0 else ""
    num, den = abs(value.numerator), value.denominator
    scaled = (num * 10**digits * 2 + den) // (2 * den)
    int_part, frac_part = divmod(scaled, 10**digits)
    return f"{sign}{int_part}.{str(frac_part).zfill(digits)}"


def _resolve_spec(args) -> FamilySpec:
    if getattr(args, "spec", None):
        return load_family_config(args.spec)
    if getattr(args, "family", None):
        return REFERENCE[canonical_family(args.family)]
    raise SystemExit("need --family or --spec")


def _write_json(path: Path, payload) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _verify_task(task):
    entry_id, spec, n = task
    entry = CATALOG[entry_id]
    try:
        res = verify_entry(entry, n, spec)
        sigmas = catalog_coeffs(entry, n, spec)
        disc = discover_coeffs(spec, entry.shift, n, entry.depth)
        agree = disc.found and tuple(disc.coefficients) == tuple(sigmas)
        return {
            "entry": entry_id,
            "family": entry.family,
            "n": n,
            "holds": bool(res.holds),
            "discovery_agrees": bool(agree),
            "sigma": [format_scalar(s) for s in sigmas],
        }
    except Exception as exc:
        return {"entry": entry_id, "family": entry.family, "n": n, "error": str(exc)}


def cmd_verify(args) -> int:
    lo, hi = _parse_n_range(args.n)
    if args.entry:
        entries = [CATALOG[e] for e in args.entry]
    elif args.family or args.spec:
        spec = _resolve_spec(args)
        entries = entries_for(spec.family)
    else:
        entries = list(CATALOG.values())
    tasks = []
    for entry in sorted(entries, key=lambda e: e.id):
        spec = (
            load_family_config(args.spec) if args.spec else catalog_instance(entry.family)
        )
        n_lo = max(lo, entry.depth + 1)
        n_hi = min(hi, spec.N) if spec.is_finite() else hi
        for n in range(n_lo, n_hi + 1):
            tasks.append((entry.id, spec, n))
    results = _run_tasks(_verify_task, tasks, args.jobs)
    results.sort(key=lambda r: (r["entry"], r["n"]))
    ok = all(r.get("holds") and r.get("discovery_agrees") for r in results)
    report = {
        "command": "verify",
        "catalog": catalog_manifest(),
        "results": results,
        "summary": {"checks": len(results), "all_hold": ok},
    }
    _write_json(Path(args.out) / "report.json", report)
    for r in results:
        status = "ok" if r.get("holds") and r.get("discovery_agrees") else "FAIL"
        print(f"{status} {r['entry']} n={r['n']}")
    return EXIT_OK if ok else EXIT_FAIL


def _run_tasks(fn, tasks, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, tasks))
    return [fn(t) for t in tasks]


# ---------------------------------------------------------------------------
# discover / order
# ---------------------------------------------------------------------------


def cmd_discover(args) -> int:
    spec = _resolve_spec(args)
    shift = ShiftSpec.parse(args.shift)
    result = discover_coeffs(spec, shift, args.n_single, args.depth)
    payload = {
        "command": "discover",
        "family": spec.family,
        "params": spec.as_dict(),
        "shift": shift.describe(),
        "n": args.n_single,
        "depth": args.depth,
        "outcome": "Coefficients" if result.found else "NoConstantCombination",
    }
    if result.found:
        payload["sigma"] = [format_scalar(s) for s in result.coefficients]
    else:
        payload["first_offending_index"] = result.first_offending
    _write_json(Path(args.out) / "report.json", payload)
    print(json.dumps(payload, indent=2, sort_keys=True))
    if args.expect_negative:
        return EXIT_OK if not result.found else EXIT_FAIL
    return EXIT_OK if result.found else EXIT_FAIL


def cmd_order(args) -> int:
    spec = _resolve_spec(args)
    shift = ShiftSpec.parse(args.shift)
    verdict = quasi_order(spec, shift, args.n_single)
    payload = {
        "command": "order",
        "family": spec.family,
        "params": spec.as_dict(),
        "shift": shift.describe(),
        "n": args.n_single,
        **verdict.as_dict(),
    }
    _write_json(Path(args.out) / "report.json", payload)
    print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------------
# zeros
# ---------------------------------------------------------------------------


def cmd_zeros(args) -> int:
    spec = _resolve_spec(args)
    target = ShiftSpec.parse(args.shift).apply(spec) if args.shift else spec
    lo_n, hi_n = _parse_n_range(args.n)
    width = args.width
    digits = max(2, len(str(width.denominator)) + 1)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = ["family,n,index,lo,hi,width,midpoint_approx"]
    sweep = ["# n  zero-midpoint (midpoints approximate at the configured width)"]
    for n in range(lo_n, hi_n + 1):
        poly = monic_poly(target, n)
        if not poly.is_real():
            raise SystemExit(f"degree-{n} member has complex coefficients")
        boxes = [refine_root(poly, b, width) for b in sturm_isolate(poly)]
        for idx, box in enumerate(boxes, start=1):
            mid = _decimal_str(box.mid, digits)
            rows.append(
                f"{target.family},{n},{idx},{format_scalar(box.lo)},"
                f"{format_scalar(box.hi)},{format_scalar(box.width)},{mid}"
            )
            sweep.append(f"{n} {mid}")
    (out / "zeros.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")
    if hi_n > lo_n:
        (out / f"sweep-{target.family}.dat").write_text(
            "\n".join(sweep) + "\n", encoding="utf-8"
        )
    print(f"wrote {len(rows) - 1} zero rows to {out / 'zeros.csv'}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------


def _suite_entry_task(task):
    spec, n, width, entry_id = task
    from .quasi import _depth1_claims, _depth2_claims, _moment_claims, _order_claims
    from .quasi import _verify_claims

    entry = CATALOG[entry_id]
    claims = []
    try:
        claims.extend(_verify_claims(spec, entry, n))
        claims.extend(_order_claims(spec, entry, n))
        if entry.depth == 1:
            claims.extend(_depth1_claims(spec, entry, n, width))
        else:
            claims.extend(_depth2_claims(spec, entry, n, width))
        if spec.is_finite():
            claims.extend(_moment_claims(spec, entry, n))
    except Exception as exc:
        from .quasi import Claim

        claims.append(Claim(f"error/{entry_id}", entry_id, "fail", {"error": str(exc)}))
    return [c.as_dict() for c in claims]


def cmd_suite(args) -> int:
    spec = _resolve_spec(args)
    n = args.n_single
    width = args.width
    if args.jobs and args.jobs > 1:
        from .quasi import structural_claims

        verdict = region_check(spec)
        if not verdict.is_orthogonal():
            raise SystemExit(f"suite needs an orthogonal base: {verdict.notes}")
        claims = [c.as_dict() for c in structural_claims(spec, n)]
        tasks = [
            (spec, n, width, e.id)
            for e in sorted(entries_for(spec.family), key=lambda e: e.id)
        ]
        for chunk in _run_tasks(_suite_entry_task, tasks, args.jobs):
            claims.extend(chunk)
        claims.sort(key=lambda c: c["id"])
        report = {
            "family": spec.family,
            "params": spec.as_dict(),
            "n": n,
            "width": format_scalar(width),
            "claims": claims,
        }
    else:
        report = theorem_suite(spec, n, width)
    _write_json(Path(args.out) / "report.json", report)
    for claim in report["claims"]:
        print(f"{claim['verdict']:13s} {claim['id']}")
    return suite_exit_status(report)


# ---------------------------------------------------------------------------
# moments
# ---------------------------------------------------------------------------


def cmd_moments(args) -> int:
    spec = _resolve_spec(args)
    n = args.n_single
    target = ShiftSpec.parse(args.shift).apply(spec) if args.shift else spec
    poly = monic_poly(target, n)
    m_max = args.m_max if args.m_max is not None else n
    table = []
    if spec.is_finite():
        for m in range(m_max + 1):
            value = discrete_moment(spec, poly, m)
            table.append({"m": m, "value": format_scalar(value), "exact": True})
    else:
        for m in range(m_max + 1):
            est = gauss_moment(spec, poly, m, args.width)
            table.append(
                {
                    "m": m,
                    "value": _decimal_str(est.value, 24),
                    "bound": _decimal_str(est.bound, 24),
                    "exact": False,
                    "nodes": est.nodes,
                }
            )
    payload = {
        "command": "moments",
        "family": spec.family,
        "params": spec.as_dict(),
        "shift": args.shift or "",
        "n": n,
        "moments": table,
    }
    _write_json(Path(args.out) / "report.json", payload)
    print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------


def _add_common(sub, n_range=False, shift=False, depth=False, needs_n=False):
    sub.add_argument("--family", choices=FAMILY_IDS, help="use the reference instance")
    sub.add_argument("--spec", help="key=value config file with exact parameters")
    sub.add_argument("--out", default=".", help="output directory")
    sub.add_argument(
        "--width", type=_parse_width, default=Fraction(1, 10**12),
        help="refinement width, e.g. 1e-12 or 2^-40",
    )
    sub.add_argument("--jobs", type=int, default=1, help="parallel workers")
    if n_range:
        sub.add_argument("--n", default="1..8", help="degree or range A..B")
    if needs_n:
        sub.add_argument(
            "--n", dest="n_single", type=int, required=True, help="degree n"
        )
    if shift:
        sub.add_argument(
            "--shift",
            required=depth,
            help="shift descriptor, e.g. alpha/q^2 or a-1 or alpha/q,beta/q",
        )
    if depth:
        sub.add_argument("--depth", type=int, required=True, help="expansion depth J")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasiortho",
        description="exact shift-relation verification and zero certification "
        "for quasi-orthogonal polynomial families",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", help="check catalog identities exactly")
    _add_common(p, n_range=True)
    p.add_argument("--entry", action="append", help="restrict to catalog entry ids")
    p.add_argument("--all", action="store_true", help="whole catalog (default)")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("discover", help="re-derive shift coefficients exactly")
    _add_common(p, shift=True, depth=True, needs_n=True)
    p.add_argument(
        "--expect-negative",
        action="store_true",
        help="exit 0 when NO constant-coefficient combination exists",
    )
    p.set_defaults(func=cmd_discover)

    p = subs.add_parser("order", help="quasi-orthogonality order of a shift")
    _add_common(p, shift=True, needs_n=True)
    p.set_defaults(func=cmd_order)

    p = subs.add_parser("zeros", help="isolate and refine zeros; write CSV/sweep")
    _add_common(p, n_range=True, shift=True)
    p.set_defaults(func=cmd_zeros)

    p = subs.add_parser("suite", help="run every catalogued theorem claim")
    _add_common(p, needs_n=True)
    p.set_defaults(func=cmd_suite)

    p = subs.add_parser("moments", help="exact or enclosed weighted moments")
    _add_common(p, shift=True, needs_n=True)
    p.add_argument("--m-max", type=int, help="largest moment order (default n)")
    p.set_defaults(func=cmd_moments)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
