"""Command line interface.

Every verb reads polytopes either from a JSON document or by catalog name
(``square``, ``triangle``, ``hexagon``, ...).  Documents go to stdout unless
``-o`` is given.  Exit codes: 0 success, 1 a requested check is false,
2 invalid input.
"""
import argparse
import json
import os
import sys

from . import exact
from .catalog import NAMES, named_polytope
from .classify import AdmissibleQuadruple, check_admissible, classify, dh_eval, dh_function, dh_polytope, enumerate_admissible
from .enumeration import build_atlas, enumerate_reflexive_polygons
from .errors import FormatError, PolytopeError
from .extension import build_extension, verify_extension
from .io import (
    dumps,
    polytope_from_document,
    polytope_to_document,
    report_to_document,
    write_atlas,
    write_document,
)
from .lattice import is_delzant, is_integral, is_reflexive, normal_form, weight_sum_holds

MAX_DIM = 4


class UsageError(Exception):
    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError("arguments", message)


def _load(spec, field="polytope", only=None):
    """Polytope from a file path or a catalog name.

    ``only`` restricts which description of a document is used
    ("vertices" or "halfspaces").
    """
    if os.path.exists(spec):
        try:
            with open(spec) as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(field, f"invalid JSON: {exc}") from exc
        if only is not None:
            if not isinstance(doc, dict) or only not in doc:
                raise FormatError(only, "missing")
            doc = {k: v for k, v in doc.items() if k in ("dim", only)}
        # refuse oversized input before any hull computation
        dim = doc.get("dim") if isinstance(doc, dict) else None
        if isinstance(dim, int) and not isinstance(dim, bool) and dim > MAX_DIM:
            raise FormatError("dim", f"dimension {dim} exceeds the supported maximum {MAX_DIM}")
        p = polytope_from_document(doc)
    elif spec in NAMES:
        p = named_polytope(spec)
    else:
        raise FormatError(field, f"no such file or catalog polytope: {spec!r}")
    if p.dim > MAX_DIM:
        raise FormatError("dim", f"dimension {p.dim} exceeds the supported maximum {MAX_DIM}")
    return p


def _emit(doc, args):
    text = dumps(doc)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(rows, header):
    cols = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cols]
    return "\n".join(lines) + "\n"


def _quadruple(p, args):
    q = AdmissibleQuadruple(p, args.facet, args.s, args.k)
    if not 0 <= args.facet < p.n_facets:
        raise FormatError("--facet", f"index {args.facet} outside 0..{p.n_facets - 1}")
    verdict = check_admissible(p, args.facet, args.s, args.k)
    if not verdict:
        raise FormatError("quadruple", f"not admissible, {verdict}")
    return q


def cmd_check(args):
    p = _load(args.polytope)
    if args.list_facets:
        doc = {
            "facets": [
                {"index": i, "normal": list(h.normal), "c": exact.format_rational(h.c),
                 "vertices": [[exact.format_rational(x) for x in p.vertices[j]] for j in sorted(inc)]}
                for i, (h, inc) in enumerate(zip(p.halfspaces, p.facet_vertex_incidence))
            ]
        }
        if args.table:
            rows = [(f["index"], f["normal"], f["c"], len(f["vertices"])) for f in doc["facets"]]
            sys.stdout.write(_table(rows, ["index", "normal", "c", "vertices"]))
        else:
            _emit(doc, args)
        return 0
    wanted = [name for name in ("integral", "reflexive", "delzant", "weight_sum") if getattr(args, name)]
    if not wanted:
        wanted = ["integral", "reflexive", "delzant"]
    report = {}
    for name in wanted:
        if name == "weight_sum":
            report[name] = weight_sum_holds(p) if is_delzant(p) else False
        else:
            report[name] = {"integral": is_integral, "reflexive": is_reflexive, "delzant": is_delzant}[name](p)
    if args.table:
        sys.stdout.write(_table(sorted(report.items()), ["check", "value"]))
    else:
        _emit(report, args)
    return 0 if all(report.values()) else 1


def cmd_normal_form(args):
    p = _load(args.polytope)
    nf = normal_form(p)
    _emit({
        "canonical_vertices": [list(v) for v in nf.canonical_vertices],
        "witness": [list(r) for r in nf.witness],
    }, args)
    return 0


def cmd_hull(args):
    _emit(polytope_to_document(_load(args.polytope, only="vertices")), args)
    return 0


def cmd_vertices(args):
    _emit(polytope_to_document(_load(args.polytope, only="halfspaces")), args)
    return 0


def cmd_admissible(args):
    p = _load(args.polytope)
    given = [x is not None for x in (args.facet, args.s, args.k)]
    if any(given) and not all(given):
        raise FormatError("--facet/--s/--k", "give all three or none")
    if all(given):
        if not 0 <= args.facet < p.n_facets:
            raise FormatError("--facet", f"index {args.facet} outside 0..{p.n_facets - 1}")
        verdict = check_admissible(p, args.facet, args.s, args.k)
        _emit({"admissible": verdict.ok, "verdict": str(verdict), "failed": verdict.failed}, args)
        return 0 if verdict else 1
    quads = enumerate_admissible(p)
    _emit({"quadruples": [{"facet": q.facet, "nu": list(q.nu), "s": q.s, "k": q.k} for q in quads]}, args)
    return 0


def cmd_classify(args):
    report = classify(_load(args.polytope))
    if args.table:
        rows = [
            (i, list(c.nu), c.s, c.k, c.m, c.isolated_fixed_points,
             exact.format_rational(c.dh_min), [q.facet for q in c.realizing_quadruples])
            for i, c in enumerate(report.classes)
        ]
        sys.stdout.write(_table(rows, ["class", "nu", "s", "k", "m", "fixed", "dh_min", "facets"]))
    else:
        _emit(report_to_document(report), args)
    return 0


def cmd_dh_eval(args):
    p = _load(args.polytope)
    q = _quadruple(p, args)
    w = exact.parse_point(args.point, "--point")
    if len(w) != p.dim:
        raise FormatError("--point", f"expected {p.dim} coordinates")
    f = dh_function(q)
    _emit({"point": [exact.format_rational(x) for x in w], "value": exact.format_rational(dh_eval(f, w))}, args)
    return 0


def cmd_dh_polytope(args):
    p = _load(args.polytope)
    _emit(polytope_to_document(dh_polytope(_quadruple(p, args))), args)
    return 0


def cmd_extend(args):
    p = _load(args.polytope)
    _emit(polytope_to_document(build_extension(_quadruple(p, args))), args)
    return 0


def cmd_verify_extension(args):
    ext = _load(args.extension, field="extension")
    p = _load(args.polytope)
    verdict = verify_extension(ext, _quadruple(p, args))
    _emit({"verified": verdict.ok, "verdict": str(verdict), "failed": verdict.failed}, args)
    return 0 if verdict else 1


def cmd_enumerate_reflexive(args):
    polygons = enumerate_reflexive_polygons()
    doc = {
        "count": len(polygons),
        "delzant_count": sum(is_delzant(p) for p in polygons),
        "polygons": [
            {"index": i, "delzant": is_delzant(p),
             "vertices": [[exact.format_rational(x) for x in v] for v in p.vertices]}
            for i, p in enumerate(polygons)
        ],
    }
    if args.output_dir:
        os.makedirs(args.output_dir, exist_ok=True)
        for i, p in enumerate(polygons):
            write_document(polytope_to_document(p), os.path.join(args.output_dir, f"polygon_{i:02d}.json"))
        write_document(doc, os.path.join(args.output_dir, "summary.json"))
    if args.table:
        rows = [(e["index"], len(e["vertices"]), e["delzant"], e["vertices"]) for e in doc["polygons"]]
        sys.stdout.write(_table(rows, ["index", "n", "delzant", "vertices"]))
    else:
        _emit(doc, args)
    return 0


def cmd_atlas(args):
    summary = write_atlas(build_atlas(), args.output_dir)
    _emit({k: summary[k] for k in ("reflexive_polygons", "delzant_polygons", "total_classes")}, args)
    return 0


def _add_quadruple(parser, required=True):
    parser.add_argument("--facet", type=int, required=required, help="facet index (see check --list-facets)")
    parser.add_argument("--s", type=int, required=required)
    parser.add_argument("--k", type=int, required=required)


def build_parser():
    parser = _Parser(prog="reflexive-polytopes", description=__doc__.splitlines()[0])
    parser.add_argument("--dim", type=int, help="expected dimension of every input polytope (at most 4)")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help_text, polytope=True, output=True):
        sp = sub.add_parser(name, help=help_text)
        if polytope:
            sp.add_argument("polytope", help="JSON document or catalog name")
        if output:
            sp.add_argument("-o", "--output", help="write the document here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    sp = verb("check", cmd_check, "integrality, reflexivity and Delzant checks")
    for flag in ("integral", "reflexive", "delzant", "weight-sum"):
        sp.add_argument(f"--{flag}", action="store_true")
    sp.add_argument("--list-facets", action="store_true", help="print the facet index mapping")
    sp.add_argument("--table", action="store_true")

    verb("normal-form", cmd_normal_form, "GL(2,Z) normal form of a lattice polygon")
    verb("hull", cmd_hull, "canonical polytope from the vertices field")
    verb("vertices", cmd_vertices, "canonical polytope from the halfspaces field")

    sp = verb("admissible", cmd_admissible, "check one quadruple, or list all admissible ones")
    _add_quadruple(sp, required=False)

    sp = verb("classify", cmd_classify, "distinct DH classes over a reflexive Delzant polytope")
    sp.add_argument("--table", action="store_true")

    sp = verb("dh-eval", cmd_dh_eval, "evaluate the abstract DH function at a point")
    _add_quadruple(sp)
    sp.add_argument("--point", required=True, help='comma-separated rationals, e.g. "1,-1/2"')

    sp = verb("dh-polytope", cmd_dh_polytope, "region under the graph of the DH function")
    _add_quadruple(sp)

    sp = verb("extend", cmd_extend, "toric extension of an admissible quadruple")
    _add_quadruple(sp)

    sp = sub.add_parser("verify-extension", help="verify an extension against a quadruple")
    sp.add_argument("extension")
    sp.add_argument("polytope")
    sp.add_argument("-o", "--output")
    _add_quadruple(sp)
    sp.set_defaults(func=cmd_verify_extension)

    sp = verb("enumerate-reflexive", cmd_enumerate_reflexive, "all reflexive polygons up to GL(2,Z)", polytope=False)
    sp.add_argument("--output-dir", help="also write one document per polygon here")
    sp.add_argument("--table", action="store_true")

    sp = verb("atlas", cmd_atlas, "classify and verify every reflexive Delzant polygon", polytope=False)
    sp.add_argument("--output-dir", required=True)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.dim is not None and not 1 <= args.dim <= MAX_DIM:
            raise FormatError("--dim", f"must be between 1 and {MAX_DIM}")
        if args.dim is not None:
            for attr in ("polytope", "extension"):
                spec = getattr(args, attr, None)
                if spec is not None:
                    expected = args.dim + (attr == "extension")
                    dim = _load(spec, field=attr).dim
                    if dim != expected:
                        raise FormatError(attr, f"has dimension {dim}, expected {expected}")
        return args.func(args)
    except (UsageError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolytopeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
