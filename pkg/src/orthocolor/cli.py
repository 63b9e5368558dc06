"""Command-line front end.

Every command prints one JSON report on stdout (``graph --format dot`` and
``gen-rational`` print their artifact instead).  Exit status: 0 when the
property holds or the computation succeeded, 1 when it is refuted, 2 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import coloring, graph, octahedral, spherical, valuation
from .exact import Vec, triple_sign
from .octahedral import STANDARD, OrthonormalBasis
from .report import EXIT_CODES, dumps, make_report
from .sphere import enumerate_points, orthogonal_pairs

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class EmptyFile(ValueError):
    pass


def parse_rational(token: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise ValueError(f"not a rational: {token!r}")
    return Fraction(token)


def parse_vectors(text: str) -> graph.VectorConfig:
    """Parse the vector file format: three rationals per line, ``#`` comments.

    Labels are the 1-based line numbers.
    """
    rows, labels = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(lineno, f"expected 3 rationals, found {len(tokens)}")
        try:
            v = Vec.of(parse_rational(t) for t in tokens)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(lineno, str(exc)) from None
        if v.is_zero():
            raise ParseError(lineno, "zero vector")
        rows.append(v)
        labels.append(str(lineno))
    if not rows:
        raise EmptyFile("no vectors in input")
    return graph.VectorConfig(tuple(rows), tuple(labels))


def format_vectors(vectors: Sequence[Vec], header: str | None = None) -> str:
    lines = [f"# {header}"] if header else []
    lines.extend(" ".join(str(c) for c in v) for v in vectors)
    return "\n".join(lines) + "\n"


def parse_basis(text: str | None) -> OrthonormalBasis:
    if text is None:
        return STANDARD
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    if len(tokens) != 9:
        raise ValueError(f"--basis needs nine rationals, got {len(tokens)}")
    vals = [parse_rational(t) for t in tokens]
    return OrthonormalBasis.from_rows([vals[0:3], vals[3:6], vals[6:9]])


def _vec(v: Vec) -> list[str]:
    return [str(c) for c in v]


def _load_config(args) -> tuple[graph.VectorConfig, dict]:
    if getattr(args, "builtin", None):
        return graph.builtin_decorte13(), {"builtin": args.builtin}
    if not args.file:
        raise ValueError("one of --file or --builtin is required")
    return parse_vectors(Path(args.file).read_text()), {"file": args.file}


def cmd_chromatic(args) -> dict:
    config, inputs = _load_config(args)
    inputs["projective"] = args.projective
    g = graph.build_graph(config, projective=args.projective)
    res = coloring.chromatic_number(g)
    check = coloring.validate_coloring(g, res.witness)
    return make_report(
        "chromatic",
        inputs,
        "ok" if check.valid else "error",
        {"coloring": list(res.witness.labels), "clique": coloring.greedy_clique(g)},
        {"vertices": g.n, "edges": len(g.edges), "witness_valid": check.valid,
         **{k: v for k, v in res.to_dict().items() if k != "witness"}},
    )


def cmd_ks_color(args) -> dict:
    config, inputs = _load_config(args)
    res = coloring.ks_search(config)
    witnesses = {"assignment": None if res.assignment is None else list(res.assignment.bits)}
    stats = {"vectors": len(config), "lines": res.lines, "triangles": res.triangles,
             "nodes_explored": res.nodes_explored, "colorable": res.colorable}
    return make_report("ks-color", inputs, "ok" if res.colorable else "refuted", witnesses, stats)


def cmd_graph(args) -> dict | str:
    config, inputs = _load_config(args)
    g = graph.build_graph(config, projective=args.projective)
    if args.format == "dot":
        labels = [",".join(config.labels[i] for i in m) for m in g.members]
        return g.to_dot(labels)
    inputs.update(projective=args.projective, format=args.format)
    return make_report("graph", inputs, "ok", {"graph": g.to_dict()}, {"vertices": g.n, "edges": len(g.edges)})


def cmd_gen_rational(args) -> str:
    pts = enumerate_points(args.height)
    return format_vectors([p.vec() for p in pts], f"rational unit vectors of height <= {args.height}: {len(pts)}")


def cmd_gz_verify(args) -> dict:
    pts = enumerate_points(args.height)
    probe = None
    if args.probe_caps:
        probe = {"centers": args.probe_caps, "radius": args.probe_radius, "seed": args.seed}
    rep = valuation.verify_gz(pts, probe=probe)
    stats = {k: v for k, v in rep.to_dict().items() if k not in ("violations", "density_probe")}
    witnesses = {"violations": rep.violations}
    if probe:
        witnesses["density_probe"] = rep.extra["density_probe"]
    return make_report("gz-verify", {"height": args.height}, "ok" if rep.ok else "refuted",
                       witnesses, stats, args.seed if probe else None)


def cmd_baek_verify(args) -> dict:
    basis = parse_basis(args.basis)
    pts = enumerate_points(args.height)
    rep = valuation.verify_baek(pts, basis)
    return make_report(
        "baek-verify",
        {"height": args.height, "basis": basis.rows()},
        "ok" if rep.ok else "refuted",
        {"violations": rep.violations, "coverage_holes": rep.coverage_holes},
        {"points": rep.points, "pairs_checked": rep.pairs_checked},
    )


def cmd_octa_classify(args) -> dict:
    basis = parse_basis(args.basis)
    config = parse_vectors(Path(args.file).read_text())
    classes = [octahedral.octa_class(v, basis) for v in config.vectors]
    return make_report(
        "octa-classify",
        {"file": args.file, "basis": basis.rows()},
        "ok",
        {"classes": [{"label": lab, "vector": _vec(v), "class": c}
                     for lab, v, c in zip(config.labels, config.vectors, classes)]},
        {"vectors": len(classes), "counts": {str(k): classes.count(k) for k in (1, 2, 3, 4)}},
    )


def cmd_locally_octahedral(args) -> dict:
    config = parse_vectors(Path(args.file).read_text())
    pts = list(config.vectors)
    verdict = octahedral.is_locally_octahedral(pts)
    witnesses: dict = {"triple": None}
    if not verdict.holds:
        witnesses["triple"] = [{"label": config.labels[i], "vector": _vec(pts[i])} for i in verdict.witness]
    elif len(pts) <= octahedral.SEARCH_LIMIT:
        basis = octahedral.search_octahedral_basis(pts)
        witnesses["octahedral_basis"] = None if basis is None else basis.rows()
    return make_report("locally-octahedral", {"file": args.file}, "ok" if verdict.holds else "refuted",
                       witnesses, {"vectors": len(pts)})


def cmd_negative_triple(args) -> dict:
    basis = parse_basis(args.basis)
    pts = enumerate_points(args.height)
    vecs = [p.vec() for p in pts]
    if args.coloring == "gz":
        labels = [valuation.gz_color(p) for p in pts]
    else:
        labels = [octahedral.octa_class(v, basis) for v in vecs]
    found = octahedral.find_negative_triple(vecs, labels)
    witnesses: dict = {"class": None, "triple": None}
    if found is not None:
        cls, (i, j, k) = found
        triple = [vecs[i], vecs[j], vecs[k]]
        witnesses = {"class": cls, "triple": [[*pts[x].coords, pts[x].n] for x in (i, j, k)],
                     "triple_sign": triple_sign(*triple)}
    inputs = {"height": args.height, "coloring": args.coloring}
    if args.coloring == "octa":
        inputs["basis"] = basis.rows()
    return make_report("negative-triple", inputs, "ok", witnesses,
                       {"points": len(pts), "found": found is not None})


def cmd_dominate(args) -> dict:
    d = spherical.Region.load(args.d_region)
    s = spherical.Region.load(args.s_region)
    res = spherical.dominates(d, s, args.samples, args.seed)
    witnesses = {"circle_normal": None}
    if res.refuted:
        witnesses["circle_normal"] = _vec(res.witness.normal)
        witnesses["meets_d"] = spherical.circle_meets_region(res.witness, d)
        witnesses["meets_s"] = spherical.circle_meets_region(res.witness, s)
    return make_report(
        "dominate",
        {"d_region": d.to_dict(), "s_region": s.to_dict(), "samples": args.samples},
        "refuted" if res.refuted else "ok",
        witnesses,
        {"result": "REFUTED" if res.refuted else "UNREFUTED", "samples": res.samples,
         "rejected_candidates": res.rejected_candidates},
        args.seed,
    )


def load_arcs(path: str) -> tuple[spherical.ArcUnion, spherical.ArcUnion, dict]:
    data = json.loads(Path(path).read_text())
    scale = {"radians": 1.0, "degrees": math.pi / 180, "turns": spherical.TAU}[data.get("unit", "radians")]
    b1 = spherical.ArcUnion.of([(a * scale, b * scale) for a, b in data["B1"]])
    b2 = spherical.ArcUnion.of([(a * scale, b * scale) for a, b in data["B2"]])
    return b1, b2, data


def cmd_circle2(args) -> dict:
    b1, b2, data = load_arcs(args.arcs)
    res = spherical.circle2_structure(b1, b2, grid=args.grid)
    return make_report(
        "circle2",
        {"arcs": data, "grid": args.grid},
        "ok" if res.confirmed else "refuted",
        res.to_dict(),
        {"hypothesis_holds": res.hypothesis_holds, "structure_holds": res.structure_holds},
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orthocolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def config_args(sp, builtin=True):
        sp.add_argument("--file", help="vector file")
        if builtin:
            sp.add_argument("--builtin", choices=["decorte13"])

    sp = sub.add_parser("chromatic", help="exact chromatic number of an orthogonality graph")
    config_args(sp)
    sp.add_argument("--projective", action="store_true", help="identify v with -v")
    sp.set_defaults(func=cmd_chromatic)

    sp = sub.add_parser("ks-color", help="search for an 010 (Kochen-Specker) coloring")
    config_args(sp)
    sp.set_defaults(func=cmd_ks_color)

    sp = sub.add_parser("graph", help="export the orthogonality graph")
    config_args(sp)
    sp.add_argument("--format", choices=["dot", "json"], default="dot")
    sp.add_argument("--projective", action="store_true")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("gen-rational", help="rational unit vectors up to a height, vector-file format")
    sp.add_argument("--height", type=int, required=True)
    sp.set_defaults(func=cmd_gen_rational)

    sp = sub.add_parser("gz-verify", help="check the 2-adic 3-coloring on rational points")
    sp.add_argument("--height", type=int, required=True)
    sp.add_argument("--probe-caps", type=int, default=0, help="random caps for the density probe")
    sp.add_argument("--probe-radius", type=float, default=0.2)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gz_verify)

    sp = sub.add_parser("baek-verify", help="check the nine-set orthogonal covering")
    sp.add_argument("--height", type=int, required=True)
    sp.add_argument("--basis", help="nine rationals, row-major")
    sp.set_defaults(func=cmd_baek_verify)

    sp = sub.add_parser("octa-classify", help="octahedral 4-coloring class of each vector")
    sp.add_argument("--file", required=True)
    sp.add_argument("--basis")
    sp.set_defaults(func=cmd_octa_classify)

    sp = sub.add_parser("locally-octahedral", help="triple-product test on a vector file")
    sp.add_argument("--file", required=True)
    sp.set_defaults(func=cmd_locally_octahedral)

    sp = sub.add_parser("negative-triple", help="monochromatic triple with negative triple product")
    sp.add_argument("--height", type=int, required=True)
    sp.add_argument("--coloring", choices=["gz", "octa"], required=True)
    sp.add_argument("--basis")
    sp.set_defaults(func=cmd_negative_triple)

    sp = sub.add_parser("dominate", help="sampling falsifier for domination")
    sp.add_argument("--d-region", required=True)
    sp.add_argument("--s-region", required=True)
    sp.add_argument("--samples", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_dominate)

    sp = sub.add_parser("circle2", help="two closed sets covering the circle")
    sp.add_argument("--arcs", required=True, help="JSON file with B1 and B2 arc lists")
    sp.add_argument("--grid", type=int, default=720)
    sp.set_defaults(func=cmd_circle2)
    return p


_INPUT_ERRORS = (
    OSError, ValueError, KeyError, TypeError, json.JSONDecodeError,
)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"orthocolor {args.command}: {exc}", file=sys.stderr)
        out.write(dumps(make_report(args.command, {}, "error", {}, {"error": str(exc)})))
        return EXIT_CODES["error"]
    if isinstance(result, str):
        out.write(result)
        return 0
    out.write(dumps(result))
    return EXIT_CODES[result["verdict"]]


def main() -> None:
    sys.exit(run())
