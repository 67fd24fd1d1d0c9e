"""JSON documents for polytopes, classification reports and atlases.

Rationals are written as ``"p/q"`` strings (or plain integer strings) and
lattice normals as JSON integers.  Output is fully determined by the input:
keys keep a fixed order and nothing time- or host-dependent is recorded.
"""
import json
import os

from . import exact
from .errors import FormatError
from .polytope import HalfSpace, from_halfspaces, from_vertices

__all__ = [
    "polytope_to_document",
    "polytope_from_document",
    "report_to_document",
    "dumps",
    "load_polytope",
    "write_document",
    "write_atlas",
]


def _point(v):
    return [exact.format_rational(x) for x in v]


def polytope_to_document(p):
    return {
        "dim": p.dim,
        "vertices": [_point(v) for v in p.vertices],
        "halfspaces": [
            {"normal": list(h.normal), "c": exact.format_rational(h.c)} for h in p.halfspaces
        ],
    }


def _parse_int(x, field):
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(field, f"expected an integer, got {x!r}")
    return x


def polytope_from_document(doc):
    """Build a Polytope from a parsed document.

    When both descriptions are present the polytope is built from the
    vertices and the halfspaces must describe the same set.
    """
    if not isinstance(doc, dict):
        raise FormatError("<root>", "expected an object")
    if "dim" not in doc:
        raise FormatError("dim", "missing")
    dim = _parse_int(doc["dim"], "dim")
    if dim < 1:
        raise FormatError("dim", f"must be positive, got {dim}")
    unknown = set(doc) - {"dim", "vertices", "halfspaces"}
    if unknown:
        raise FormatError(sorted(unknown)[0], "unknown field")
    if "vertices" not in doc and "halfspaces" not in doc:
        raise FormatError("vertices", "need vertices or halfspaces")

    from_v = from_h = None
    if "vertices" in doc:
        verts = doc["vertices"]
        if not isinstance(verts, list) or not verts:
            raise FormatError("vertices", "expected a nonempty array")
        points = []
        for i, v in enumerate(verts):
            if not isinstance(v, list) or len(v) != dim:
                raise FormatError(f"vertices[{i}]", f"expected an array of {dim} rationals")
            points.append(tuple(exact.parse_rational(x, f"vertices[{i}][{j}]") for j, x in enumerate(v)))
        from_v = _construct(lambda: from_vertices(points), "vertices")
    if "halfspaces" in doc:
        hs_doc = doc["halfspaces"]
        if not isinstance(hs_doc, list) or not hs_doc:
            raise FormatError("halfspaces", "expected a nonempty array")
        hs = []
        for i, h in enumerate(hs_doc):
            field = f"halfspaces[{i}]"
            if not isinstance(h, dict) or set(h) != {"normal", "c"}:
                raise FormatError(field, "expected {normal, c}")
            normal = h["normal"]
            if not isinstance(normal, list) or len(normal) != dim:
                raise FormatError(f"{field}.normal", f"expected {dim} integers")
            normal = tuple(_parse_int(x, f"{field}.normal[{j}]") for j, x in enumerate(normal))
            if not any(normal):
                raise FormatError(f"{field}.normal", "must be nonzero")
            hs.append(HalfSpace(normal, exact.parse_rational(h["c"], f"{field}.c")))
        from_h = _construct(lambda: from_halfspaces(hs), "halfspaces")
    if from_v is not None and from_h is not None and from_v != from_h:
        raise FormatError("halfspaces", "do not describe the same polytope as vertices")
    return from_v if from_v is not None else from_h


def _construct(build, field):
    try:
        return build()
    except FormatError:
        raise
    except (ValueError, ArithmeticError) as exc:
        raise FormatError(field, f"{type(exc).__name__}: {exc}") from exc


def _dh_document(f):
    return {"nu": list(f.nu), "pieces": list(f.pieces)}


def report_to_document(report):
    classes = []
    for cls in report.classes:
        classes.append({
            "nu": list(cls.nu),
            "s": cls.s,
            "k": cls.k,
            "m": cls.m,
            "isolated_fixed_points": cls.isolated_fixed_points,
            "dh_min": exact.format_rational(cls.dh_min),
            "dh": _dh_document(cls.dh),
            "realizing_facets": [q.facet for q in cls.realizing_quadruples],
            "collision": cls.collides,
            "genus": cls.genus,
            "painting": cls.painting,
            "extension": polytope_to_document(cls.extension),
        })
    return {"polytope": polytope_to_document(report.polytope), "classes": classes}


def dumps(doc):
    return json.dumps(doc, indent=2) + "\n"


def load_polytope(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError("<root>", f"invalid JSON: {exc}") from exc
    return polytope_from_document(doc)


def write_document(doc, path):
    with open(path, "w") as fh:
        fh.write(dumps(doc))


def write_atlas(atlas, directory, names=None):
    """One polytope file per representative plus ``summary.json``."""
    from .lattice import is_delzant

    os.makedirs(directory, exist_ok=True)
    entries = []
    for i, p in enumerate(atlas.polygons):
        fname = f"polygon_{i:02d}.json"
        write_document(polytope_to_document(p), os.path.join(directory, fname))
        entry = {
            "index": i,
            "file": fname,
            "vertices": len(p.vertices),
            "delzant": is_delzant(p),
        }
        if i in atlas.reports:
            report = atlas.reports[i]
            rname = f"report_{i:02d}.json"
            write_document(report_to_document(report), os.path.join(directory, rname))
            entry["report"] = rname
            entry["classes"] = [
                {"s": c.s, "k": c.k, "m": c.m, "nu": list(c.nu),
                 "realizing_facets": [q.facet for q in c.realizing_quadruples]}
                for c in report.classes
            ]
        entries.append(entry)
    summary = {
        "reflexive_polygons": len(atlas.polygons),
        "delzant_polygons": len(atlas.delzant_subset),
        "total_classes": atlas.total_classes,
        "polygons": entries,
    }
    write_document(summary, os.path.join(directory, "summary.json"))
    return summary
