"""Command-line front end: analyze rings, run the claim suite, export graphs.

Exit codes: 0 success / all checks pass, 1 verification or runtime failure,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import graphs, rings, solvers, verify
from .rings import CapExceededError, RingSpec, RingSpecError


def _env_max_cardinality() -> int:
    raw = os.environ.get("COZERO_MAX_CARDINALITY")
    if raw is None:
        return rings.DEFAULT_MAX_CARDINALITY
    try:
        return int(raw)
    except ValueError:
        return rings.DEFAULT_MAX_CARDINALITY


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cozero",
        description="Cozero-divisor graphs of finite rings: exact clique and "
                    "chromatic numbers, perfection certificates, claim suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("specs", nargs="*", metavar="RING",
                       help='ring specs like "Z2xZ3xZ5"')
        p.add_argument("--rings", help="comma-separated ring specs")
        p.add_argument("--out", metavar="PATH", help="write output to PATH")
        p.add_argument("--max-cardinality", type=int,
                       default=_env_max_cardinality())
        p.add_argument("--max-vertices", type=int,
                       default=solvers.DEFAULT_VERTEX_CAP)

    p_an = sub.add_parser("analyze", help="per-ring graph summary")
    add_common(p_an)
    p_an.add_argument("--format", choices=["text", "json"], default="text")

    p_ve = sub.add_parser("verify", help="run claim checks, emit JSON reports")
    add_common(p_ve)
    p_ve.add_argument("--suite", help="comma-separated claim ids "
                                      f"(default: all of {', '.join(sorted(verify.CLAIMS))})")

    p_ex = sub.add_parser("export", help="export a graph as DOT or JSON")
    add_common(p_ex)
    p_ex.add_argument("--format", choices=["dot", "json"], default="dot")
    p_ex.add_argument("--quotient", action="store_true",
                      help="export the associate-class quotient instead")
    p_ex.add_argument("--complement", action="store_true",
                      help="export the complement instead")
    return parser


def _gather_specs(args, parser) -> list[RingSpec]:
    texts = list(args.specs)
    if args.rings:
        texts.extend(t for t in args.rings.split(",") if t)
    try:
        return [rings.parse_spec(t) for t in texts]
    except RingSpecError as exc:
        parser.exit(2, f"cozero: error: {exc}\n")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _analyze_one(spec: RingSpec, max_cardinality: int, max_vertices: int) -> dict:
    g = graphs.build_cozero_graph(spec, max_cardinality=max_cardinality)
    vnr = rings.is_von_neumann_regular(spec)
    units = sum(1 for a in spec.elements() if rings.is_unit(spec, a))
    info: dict = {
        "spec": str(spec),
        "cardinality": spec.cardinality,
        "units": units,
        "vertices": g.n,
        "edges": g.edge_count(),
        "vnr": vnr,
    }
    clique = solvers.max_clique(g, max_vertices=max_vertices)
    coloring = solvers.chromatic_number(g, max_vertices=max_vertices)
    info["omega"] = clique.size
    info["clique_witness"] = list(clique.witness)
    info["chi"] = coloring.count
    perfect, cert = solvers.is_perfect_desk_scale(g, max_vertices=max_vertices)
    info["perfect"] = perfect
    if cert is not None:
        info["odd_cycle"] = {"where": cert.where, "cycle": list(cert.cycle)}
    if vnr:
        n = rings.min_prime_count(spec)
        info["field_factors"] = n
        if n >= 2:
            formula = math.comb(n, n // 2)
            info["formula"] = formula
            info["formula_match"] = (clique.size == formula == coloring.count)
    info["associate_classes"] = len(rings.associate_classes(spec).classes)
    return info


def _format_analysis(info: dict) -> str:
    lines = [f"{info['spec']}:"]
    lines.append(f"  |R|={info['cardinality']} units={info['units']} "
                 f"vertices={info['vertices']} edges={info['edges']}")
    lines.append(f"  vnr={str(info['vnr']).lower()}"
                 + (f" field-factors={info['field_factors']}"
                    if "field_factors" in info else ""))
    lines.append(f"  omega={info['omega']} chi={info['chi']} "
                 f"perfect={str(info['perfect']).lower()}")
    if "formula" in info:
        n = info["field_factors"]
        verdict = "match" if info["formula_match"] else "MISMATCH"
        lines.append(f"  formula C({n},{n // 2})={info['formula']}: {verdict}")
    if info["edges"] == 0:
        lines.append("  null graph")
    return "\n".join(lines) + "\n"


def cmd_analyze(args, parser) -> int:
    specs = _gather_specs(args, parser)
    if not specs:
        parser.exit(2, "cozero: error: no ring specs given\n")
    chunks = []
    status = 0
    for spec in specs:
        try:
            info = _analyze_one(spec, args.max_cardinality, args.max_vertices)
        except CapExceededError as exc:
            if args.format == "json":
                chunks.append({"spec": str(spec), "error": str(exc)})
            else:
                chunks.append(f"{spec}: error: {exc}\n")
            status = 1
            continue
        chunks.append(info if args.format == "json" else _format_analysis(info))
    if args.format == "json":
        _emit(json.dumps(chunks, indent=2) + "\n", args.out)
    else:
        _emit("".join(chunks), args.out)
    return status


def cmd_verify(args, parser) -> int:
    names = sorted(verify.CLAIMS)
    if args.suite:
        names = [t for t in args.suite.split(",") if t]
    specs = _gather_specs(args, parser)
    if not specs:
        specs = verify.default_ring_set()
    caps = verify.Caps(max_cardinality=args.max_cardinality,
                       max_vertices=args.max_vertices)
    try:
        reports = verify.run_suite(names, specs, caps)
    except verify.UnknownClaimError as exc:
        parser.exit(2, f"cozero: error: {exc}\n")
    _emit(verify.reports_to_json(reports), args.out)
    failed = any(not r.passed and not r.skipped for r in reports)
    return 1 if failed else 0


def cmd_export(args, parser) -> int:
    specs = _gather_specs(args, parser)
    if len(specs) != 1:
        parser.exit(2, "cozero: error: export takes exactly one ring spec\n")
    if args.quotient and args.complement:
        parser.exit(2, "cozero: error: choose one of --quotient/--complement\n")
    try:
        g = graphs.build_cozero_graph(specs[0], max_cardinality=args.max_cardinality)
        if args.quotient:
            g = graphs.quotient_by_associates(g).graph
        elif args.complement:
            g = graphs.complement(g)
    except CapExceededError as exc:
        sys.stderr.write(f"cozero: error: {exc}\n")
        return 1
    text = graphs.to_dot(g) if args.format == "dot" else graphs.to_json(g)
    _emit(text, args.out)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {"analyze": cmd_analyze, "verify": cmd_verify, "export": cmd_export}
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
