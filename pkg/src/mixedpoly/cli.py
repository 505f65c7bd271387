"""Command-line interface: analyze, roots, lkn, degree, invariants, scan, demo.

Every command assembles a deterministic report {command, inputs,
results, warnings}; complex numbers appear as [re, im] pairs.  Reports
can be written as JSON, and the roots command can emit an SVG scatter
of the isolated roots with their indices.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional

from . import invariants as inv
from .errors import MixedPolyError, ParseError
from .grammar import format_poly, parse
from .homogeneity import analyze
from .poly import MixedPolynomial
from .projective import scan_point_counts, verify_degree
from .roots import count_projective_points_detailed, solve
from .winding import degree_at_infinity


def _cnum(c: complex) -> list[float]:
    return [c.real, c.imag]


def _parse_param_value(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    poly = parse(f"({text})")
    if poly.is_zero():
        return 0j
    ((nu, mu), c) = poly.terms[0]
    if any(nu) or any(mu) or len(poly.terms) > 1:
        raise ParseError(f"parameter value {text!r} is not a constant", 0)
    return c


def _parse_params(text: Optional[str]) -> dict:
    params = {}
    if not text:
        return params
    for chunk in text.split(","):
        if "=" not in chunk:
            raise ParseError(f"expected K=V, got {chunk!r}", 0)
        key, value = chunk.split("=", 1)
        params[key.strip()] = _parse_param_value(value.strip())
    return params


_FAMILY_ALIASES = {
    "f2": "simplicial_f2", "f2p": "simplicial_f2p",
    "f3": "simplicial_f3", "f3p": "simplicial_f3p",
}


def _input_poly(args) -> tuple[MixedPolynomial, dict]:
    if getattr(args, "poly", None):
        return parse(args.poly), {"poly": args.poly}
    if getattr(args, "family", None):
        kind = _FAMILY_ALIASES.get(args.family, args.family)
        params = _parse_params(getattr(args, "params", None))
        f = inv.build_family(inv.FamilySpec(kind, params))
        return f, {"family": kind,
                   "params": {k: _cnum(complex(v)) if isinstance(v, complex)
                              else v for k, v in params.items()}}
    raise ParseError("one of --poly or --family is required", 0)


def _write_json(path: Optional[str], report: dict) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _svg_roots(path: str, inventory) -> None:
    """800x800 scatter of root estimates, labeled with their indices."""
    size = 800
    margin = 40
    span = inventory.search_radius
    scale = (size / 2 - margin) / span

    def px(x: float) -> float:
        return size / 2 + x * scale

    def py(y: float) -> float:
        return size / 2 - y * scale

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="{margin}" y1="{size / 2}" x2="{size - margin}" '
        f'y2="{size / 2}" stroke="#888"/>',
        f'<line x1="{size / 2}" y1="{margin}" x2="{size / 2}" '
        f'y2="{size - margin}" stroke="#888"/>',
        f'<circle cx="{size / 2}" cy="{size / 2}" r="{span * scale:.2f}" '
        'fill="none" stroke="#ccc" stroke-dasharray="4 4"/>',
        f'<text x="{size - margin + 4}" y="{size / 2 + 4}" font-size="12" '
        f'fill="#555">{span:.3g}</text>',
    ]
    for root in inventory.roots:
        x, y = px(root.estimate.real), py(root.estimate.imag)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="5" '
                     'fill="#1f77b4" fill-opacity="0.8"/>')
        lines.append(f'<text x="{x + 7:.2f}" y="{y - 7:.2f}" font-size="14" '
                     f'fill="#d62728">{root.index}</text>')
    lines.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


# -- commands -----------------------------------------------------------


def _cmd_analyze(args) -> tuple[dict, list[str]]:
    f, inputs = _input_poly(args)
    wa = analyze(f)
    results = {
        "polynomial": format_poly(f),
        "radial_weights": list(wa.radial_weights) if wa.radial_weights else None,
        "radial_degree": wa.radial_degree,
        "polar_weights": list(wa.polar_weights) if wa.polar_weights else None,
        "polar_degree": wa.polar_degree,
        "strongly_polar_weighted": wa.strongly_polar_weighted,
        "strongly_polar_homogeneous": wa.strongly_polar_homogeneous,
        "class_q": wa.class_q,
        "class_r": wa.class_r,
        "weights_unique": wa.weights_unique,
    }
    warnings = [] if wa.weights_unique else ["weight system is not unique"]
    return {"inputs": inputs, "results": results}, warnings


def _cmd_roots(args) -> tuple[dict, list[str]]:
    f, inputs = _input_poly(args)
    if f.n != 1:
        f = f.dehomogenize(1) if f.n == 2 else f
    inventory = solve(f)
    results = {
        "search_radius": inventory.search_radius,
        "index_sum": inventory.index_sum,
        "degree_at_infinity": degree_at_infinity(f),
        "roots": [{
            "estimate": _cnum(r.estimate),
            "index": r.index,
            "residual": r.residual,
            "box_center": _cnum(r.box.center),
            "box_half_width": r.box.half_width,
        } for r in inventory.roots],
    }
    warnings = [f"index-0 cluster at {r.estimate:.6g}"
                for r in inventory.roots if r.index == 0]
    if args.svg:
        _svg_roots(args.svg, inventory)
    return {"inputs": inputs, "results": results}, warnings


def _cmd_lkn(args) -> tuple[dict, list[str]]:
    f, inputs = _input_poly(args)
    detail = count_projective_points_detailed(f)
    results = {
        "count": detail.count,
        "infinity_is_point": detail.infinity_is_point,
        "chart_roots": [{"estimate": _cnum(r.estimate), "index": r.index}
                        for r in detail.chart_inventory.roots],
    }
    return {"inputs": inputs, "results": results}, list(detail.warnings)


def _cmd_degree(args) -> tuple[dict, list[str]]:
    f, inputs = _input_poly(args)
    verdict = verify_degree(f, trials=args.trials, seed=args.seed)
    results = {
        "polar_degree": verdict.polar_degree,
        "agree": verdict.agree,
        "rejections": verdict.rejections,
        "sections": [{
            "coeffs": [[_cnum(a) for a in row] for row in s.coeffs],
            "total_index": s.total_index,
            "n_roots": len(s.inventory.roots),
        } for s in verdict.sections],
    }
    warnings = ([] if verdict.agree else
                ["section index sums disagree with the polar degree"])
    if verdict.rejections:
        warnings.append(f"{verdict.rejections} line samples rejected")
    return {"inputs": inputs, "results": results}, warnings


def _parse_q_range(text: str) -> list[int]:
    if ".." in text:
        a, b = text.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(text)]


def _cmd_invariants(args) -> tuple[dict, list[str]]:
    kind = _FAMILY_ALIASES.get(args.family, args.family)
    qs = _parse_q_range(args.q)
    r = args.r
    inputs = {"family": kind, "q": args.q, "r": r}
    if len(qs) > 1 or kind == "h_join":
        rows = inv.genus_table(kind, qs, r)
        results = {"table": rows}
        if kind == "h_join":
            results["attainable_genera"] = [
                {"q": q, "genera": list(inv.attainable_genera(q, r))}
                for q in qs]
    else:
        ci = inv.curve_invariants(kind, qs[0], r)
        results = {
            "q": ci.q, "r": ci.r, "chi_F": ci.chi_F, "milnor": ci.milnor,
            "genus": ci.genus, "chi_V": ci.chi_V,
            "chi_complement": ci.chi_complement,
            "zeta_exponent": ci.zeta_exponent,
            "zeta": inv.zeta_string(ci.chi_F, ci.q),
            "homology": list(ci.homology),
        }
    return {"inputs": inputs, "results": results}, []


def _cmd_scan(args) -> tuple[dict, list[str]]:
    result = scan_point_counts(q=args.q_int, r=args.r, trials=args.trials,
                               seed=args.seed)
    results = {
        "histogram": {str(k): v for k, v in result.histogram.items()},
        "failures": result.failures,
        "conjectured_range": list(result.conjectured_range()),
        "out_of_range": {str(k): v for k, v in result.out_of_range.items()},
    }
    warnings = []
    if result.out_of_range:
        warnings.append(
            f"POINT COUNTS OUTSIDE THE EXPECTED RANGE: {result.out_of_range} "
            "-- please report this instance")
    if result.failures:
        warnings.append(f"solver failures: {result.failures}")
    return {"inputs": {"q": args.q_int, "r": args.r, "trials": args.trials,
                       "seed": args.seed},
            "results": results}, warnings


def _demo_items() -> list[tuple[str, bool, str]]:
    items = []

    g_small = parse("-2*z1^2*conj(z1) + 1")
    inv_small = solve(g_small)
    target = 2.0 ** (-1.0 / 3.0)
    ok = (len(inv_small.roots) == 1 and inv_small.index_sum == 1
          and abs(inv_small.roots[0].estimate - target) < 1e-6)
    items.append(("single-root regime (t = 0)", ok,
                  f"root {inv_small.roots[0].estimate:.6f}, expected {target:.6f}"))

    g_large = parse("-2*z1^2*conj(z1) + 3*z1^2 + 1")
    inv_large = solve(g_large)
    expect = [complex(1 / 9, math.sqrt(26) / 9), complex(1 / 9, -math.sqrt(26) / 9)]
    found = [min(abs(r.estimate - e) for r in inv_large.roots) < 1e-6
             for e in expect]
    ok = (len(inv_large.roots) == 3 and inv_large.index_sum == 1 and all(found))
    items.append(("three-root regime (t = 3)", ok,
                  f"{len(inv_large.roots)} roots, index sum {inv_large.index_sum}"))

    from .projective import lkn
    table_ok = True
    details = []
    for q in (1, 2, 3):
        for j in (0, 1, 2):
            got = lkn(inv.build_f_qj(q, j))
            table_ok &= got == q
            details.append(f"f[{q},{j}]={got}")
    for ell in (1, 2, 3):
        got = lkn(inv.build_k_ell(ell))
        table_ok &= got == 2 * ell
    items.append(("point-count table", table_ok, ", ".join(details[:4]) + ", ..."))

    f_s1 = inv.build_family("s1", q=2, r=1)
    verdict = verify_degree(f_s1, trials=3, seed=0)
    items.append(("degree equals polar degree on random lines",
                  verdict.agree and verdict.polar_degree == 2,
                  f"3 sections, all index sums = {verdict.polar_degree}"))

    tbl_ok = True
    for q in range(2, 6):
        chi = inv.family_chi("s1", q)
        tbl_ok &= chi == q ** 3 - 3 * q ** 2 + 3 * q
        tbl_ok &= inv.genus_from_chi(chi, q) == (q - 1) * (q - 2) // 2
        chi4 = inv.family_chi("s4", q)
        tbl_ok &= inv.euler_simplicial("f2p", q + 1, q + 1, q)[0] == chi4
        tbl_ok &= inv.genus_from_chi(chi4, q) == q * (q + 1) // 2
        chi5 = inv.family_chi("s5", q)
        tbl_ok &= inv.euler_simplicial("f3p", q + 1, q + 1, q + 1)[0] == chi5
        tbl_ok &= inv.genus_from_chi(chi5, q) == (q + 2) * (q + 1) // 2
    items.append(("curve invariant table (q = 2..5)", tbl_ok, "exact integer identities"))
    return items


def _cmd_demo(args) -> tuple[dict, list[str]]:
    items = _demo_items()
    results = {"items": [{"name": n, "passed": ok, "detail": d}
                         for n, ok, d in items]}
    warnings = [f"FAILED: {n}" for n, ok, _ in items if not ok]
    return {"inputs": {}, "results": results}, warnings


def _print_summary(command: str, report: dict, warnings: list[str]) -> None:
    if command == "demo":
        for item in report["results"]["items"]:
            status = "PASS" if item["passed"] else "FAIL"
            print(f"[{status}] {item['name']}: {item['detail']}")
    else:
        print(json.dumps(report["results"], indent=2, sort_keys=True))
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mixedpoly",
        description="Mixed polynomial curves: homogeneity, roots, degrees, invariants")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, poly=True):
        if poly:
            p.add_argument("--poly", help="polynomial text, e.g. 'z1^2*conj(z1) + 1'")
            p.add_argument("--family", help="family kind, e.g. s1, f_qj, k_ell, h_join")
            p.add_argument("--params", help="family parameters K=V,...")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=1e-8)
        p.add_argument("--json", dest="json_path", help="write the report to this path")

    p = sub.add_parser("analyze", help="radial/polar weight systems")
    add_common(p)
    p = sub.add_parser("roots", help="isolate roots of a one-variable polynomial")
    add_common(p)
    p.add_argument("--svg", help="write a root scatter plot to this path")
    p = sub.add_parser("lkn", help="points of a two-variable curve on the projective line")
    add_common(p)
    p = sub.add_parser("degree", help="verify degree = polar degree on random lines")
    add_common(p)
    p.add_argument("--trials", type=int, default=10)
    p = sub.add_parser("invariants", help="closed-form curve invariants")
    p.add_argument("--family", required=True)
    p.add_argument("--q", required=True, help="polar degree, or a range like 2..6")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--json", dest="json_path")
    p = sub.add_parser("scan", help="histogram point counts over random coefficients")
    p.add_argument("--q", dest="q_int", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", dest="json_path")
    p = sub.add_parser("demo", help="run the built-in verification items")
    p.add_argument("--json", dest="json_path")
    return ap


_HANDLERS = {
    "analyze": _cmd_analyze,
    "roots": _cmd_roots,
    "lkn": _cmd_lkn,
    "degree": _cmd_degree,
    "invariants": _cmd_invariants,
    "scan": _cmd_scan,
    "demo": _cmd_demo,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    command = args.command
    inputs_echo = {k: v for k, v in vars(args).items()
                   if k not in ("command",) and v is not None}
    try:
        body, warnings = _HANDLERS[command](args)
    except MixedPolyError as err:
        report = {
            "command": command,
            "inputs": inputs_echo,
            "error": {"type": type(err).__name__, "message": str(err)},
            "warnings": [],
        }
        _write_json(getattr(args, "json_path", None), report)
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    report = {
        "command": command,
        "inputs": {**inputs_echo, **body["inputs"]},
        "results": body["results"],
        "warnings": warnings,
    }
    _write_json(getattr(args, "json_path", None), report)
    _print_summary(command, report, warnings)
    if command == "demo" and any(not i["passed"]
                                 for i in report["results"]["items"]):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
