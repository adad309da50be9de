"""Command-line front end.

Every command produces ``{command, params, rows, verdicts}``; ``--format``
picks JSON, CSV (header row plus one line per row) or an aligned text table.
The default is ``table`` on a terminal and ``json`` otherwise, overridable
through the ``DIRICHLET_FORMAT`` environment variable. Exit status is 0 iff
every verdict passed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from .arith import euler_phi
from .characters import (
    character_from_label,
    classify,
    enumerate_characters,
    orthogonality_over_characters,
    orthogonality_over_group,
    weighted_orthogonality,
)
from .cyclotomic import to_complex
from .lseries import (
    EvalOptions,
    character_weighted_logl,
    prime_census,
    series_report,
    zeta,
)
from .resolvent import cyclotomy_round_trip
from .unit_group import units

FORMATS = ("json", "csv", "table")
FLOAT_TOL = 1e-9


def _num(x: float) -> float:
    """Round to 12 significant digits so output is byte-stable."""
    x = float(x)
    if not math.isfinite(x):
        return x
    return float(f"{x:.12g}")


def _cnum(z: complex) -> str:
    return f"{_num(z.real):.12g}{_num(z.imag):+.12g}j"


def _result(command: str, params: dict, rows: list[dict], verdicts: dict[str, bool]) -> dict:
    return {"command": command, "params": params, "rows": rows, "verdicts": verdicts}


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(str(x) for x in v) + ")"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


_RESULT_KEYS = ("command", "params", "rows", "verdicts")


def render(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2) + "\n"
    rows = result["rows"]
    header = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_cell(r[h]) for h in header])
        return buf.getvalue()
    cells = [[_cell(r[h]) for h in header] for r in rows]
    widths = [max([len(h)] + [len(c[i]) for c in cells]) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    for key, value in result.items():
        if key not in _RESULT_KEYS:
            lines.append(f"{key}: {_cell(value)}")
    for name, ok in result["verdicts"].items():
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}")
    return "\n".join(lines) + "\n"


# -- commands ---------------------------------------------------------------

def cmd_characters(args) -> dict:
    k = args.modulus
    rows = []
    for chi in enumerate_characters(k):
        row = {"label": list(chi.label), "class": str(classify(chi))}
        for n in range(1, k + 1):
            v = chi(n)
            row[f"chi({n})"] = str(v)
            row[f"chi({n})_num"] = _cnum(to_complex(v))
        rows.append(row)
    return _result("characters", {"modulus": k}, rows, {"count_equals_phi": len(rows) == euler_phi(k)})


def cmd_orthogonality(args) -> dict:
    k = args.modulus
    chars = enumerate_characters(k)
    us = units(k)
    phi = euler_phi(k)
    if args.exact:
        group = [orthogonality_over_group(chi).holds for chi in chars]
        dual = [orthogonality_over_characters(k, g).holds for g in us]
        weighted = [weighted_orthogonality(k, g, h).holds for g in us for h in us]
    else:
        tables = [chi.complex_table for chi in chars]
        group = [
            abs(sum(t[g] for g in us) - (phi if chi.is_principal else 0)) < FLOAT_TOL
            for chi, t in zip(chars, tables)
        ]
        dual = [abs(sum(t[g] for t in tables) - (phi if g == 1 % k else 0)) < FLOAT_TOL for g in us]
        weighted = [
            abs(sum(t[g] * t[h].conjugate() for t in tables) - (phi if g == h else 0)) < FLOAT_TOL
            for g in us
            for h in us
        ]
    rows = []
    verdicts = {}
    for name, results in (
        ("sum_over_group", group),
        ("sum_over_characters", dual),
        ("weighted_sum_over_characters", weighted),
    ):
        ok = all(results)
        rows.append({"identity": name, "checked": len(results), "failures": results.count(False), "verdict": "PASS" if ok else "FAIL"})
        verdicts[name] = ok
    params = {"modulus": k, "exact": bool(args.exact)}
    return _result("orthogonality", params, rows, verdicts)


def _parse_grid(text: str) -> list[float]:
    try:
        grid = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise SystemExit(f"error: bad --s-grid {text!r}")
    if not grid or any(s <= 1 for s in grid):
        raise SystemExit("error: every s in --s-grid must exceed 1")
    return grid


def cmd_progression_demo(args) -> dict:
    k, m = args.modulus, args.residue
    if math.gcd(m, k) != 1:
        raise SystemExit(
            f"error: residue {m} shares a factor with {k}; such a progression holds at most one prime"
        )
    grid = _parse_grid(args.s_grid)
    opts = EvalOptions(prime_bound=args.prime_bound)
    rows = []
    reports = []
    for s in grid:
        rep = character_weighted_logl(s, k, m, opts)
        reports.append(rep)
        rows.append(
            {
                "s": _num(s),
                "lhs": _num(rep.value.real),
                "lhs_imag": _num(rep.value.imag),
                "prime_side": _num(rep.prime_side),
                "discrepancy": _num(rep.discrepancy),
                "certified_bound": _num(rep.envelope),
            }
        )
    by_s = sorted(reports, key=lambda r: -r.s)
    increasing = all(a.value.real < b.value.real for a, b in zip(by_s, by_s[1:]))
    within = all(abs(r.discrepancy) <= r.envelope for r in reports)
    real = all(r.imaginary <= r.truncation_bound for r in reports)
    params = {"modulus": k, "residue": m, "s_grid": [_num(s) for s in grid], "prime_bound": args.prime_bound}
    verdicts = {
        "lhs_increases_as_s_decreases": increasing,
        "discrepancy_within_envelope": within,
        "imaginary_part_within_bound": real,
    }
    return _result("progression-demo", params, rows, verdicts)


def cmd_census(args) -> dict:
    counts = prime_census(args.limit, args.modulus)
    total = sum(counts.values())
    rows = [
        {"residue": m, "unit": math.gcd(m, args.modulus) == 1, "count": c, "share": _num(c / total)}
        for m, c in counts.items()
    ]
    verdicts = {"non_unit_classes_at_most_one": all(r["count"] <= 1 for r in rows if not r["unit"])}
    return _result("census", {"modulus": args.modulus, "limit": args.limit}, rows, verdicts)


def cmd_lseries(args) -> dict:
    label = tuple(int(x) for x in args.label.split(",") if x.strip()) if args.label else ()
    try:
        chi = character_from_label(args.modulus, label)
        rep = series_report(args.s, chi)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    row = {k: (_num(v) if isinstance(v, float) else v) for k, v in rep.as_row().items()}
    row["class"] = str(classify(chi))
    return _result("lseries", {"modulus": args.modulus, "label": list(label), "s": _num(args.s)}, [row], {})


def cmd_resolvent_demo(args) -> dict:
    try:
        expected, recovered = cyclotomy_round_trip(args.p)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    errors = abs(expected - recovered)
    rows = [
        {"k": i, "root": _cnum(e), "recovered": _cnum(r), "error": float(f"{err:.3g}")}
        for i, (e, r, err) in enumerate(zip(expected, recovered, errors))
    ]
    max_err = float(errors.max())
    out = _result("resolvent-demo", {"p": args.p}, rows, {"max_recovery_error_below_1e-8": max_err < 1e-8})
    out["max_recovery_error"] = float(f"{max_err:.3g}")
    return out


def cmd_zeta(args) -> dict:
    try:
        z = zeta(args.s)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    row = {"s": _num(args.s), "value": _num(z.value.real), "truncation_bound": _num(z.truncation_bound)}
    return _result("zeta", {"s": _num(args.s)}, [row], {})


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if v < 1:
        raise argparse.ArgumentTypeError(f"modulus must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dirichlet", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=FORMATS, default=None)
    parser.add_argument("--out", default=None, help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("characters", help="table of all characters mod k")
    p.add_argument("--modulus", "-k", type=_positive, required=True)
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("orthogonality", help="check both orthogonality relations and the weighted form")
    p.add_argument("--modulus", "-k", type=_positive, required=True)
    p.add_argument("--exact", action="store_true", help="exact cyclotomic arithmetic instead of floats")
    p.set_defaults(func=cmd_orthogonality)

    p = sub.add_parser("progression-demo", help="character-weighted log L against the prime sum")
    p.add_argument("--modulus", "-k", type=_positive, required=True)
    p.add_argument("--residue", "-m", type=int, required=True)
    p.add_argument("--s-grid", default="1.5,1.2,1.1,1.05,1.01")
    p.add_argument("--prime-bound", type=_positive, default=10**5)
    p.set_defaults(func=cmd_progression_demo)

    p = sub.add_parser("census", help="count primes per residue class")
    p.add_argument("--modulus", "-k", type=_positive, required=True)
    p.add_argument("--limit", "-Q", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("lseries", help="L(s, chi) for one character given by its label")
    p.add_argument("--modulus", "-k", type=_positive, required=True)
    p.add_argument("--label", default="", help="comma-separated exponents, e.g. 1,0")
    p.add_argument("--s", type=float, required=True)
    p.set_defaults(func=cmd_lseries)

    p = sub.add_parser("resolvent-demo", help="recover the p-th roots of unity from their resolvents")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_resolvent_demo)

    p = sub.add_parser("zeta", help="Riemann zeta at real s > 1")
    p.add_argument("--s", type=float, required=True)
    p.set_defaults(func=cmd_zeta)
    return parser


def _default_format(stream) -> str:
    env = os.environ.get("DIRICHLET_FORMAT")
    if env in FORMATS:
        return env
    return "table" if stream.isatty() else "json"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "census" and args.limit < 2:
        print("error: --limit must be at least 2", file=sys.stderr)
        return 2
    try:
        result = args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        raise
    fmt = args.format or _default_format(sys.stdout if args.out is None else io.StringIO())
    text = render(result, fmt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(result["verdicts"].values()) else 1


if __name__ == "__main__":
    sys.exit(main())
