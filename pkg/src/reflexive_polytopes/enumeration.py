"""Reflexive polygons up to GL(2, Z), and the classification atlas.

Candidates are convex lattice polygons with vertices in a box, grown
counterclockwise from their lowest-then-leftmost vertex; a partial polygon is
dropped as soon as its hull has a nonzero interior lattice point.  Every
closed candidate whose only interior lattice point is the origin is then
tested for reflexivity on its canonical H-representation, and survivors are
deduplicated by normal form.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .classify import classify
from .extension import verify_extension
from .errors import AssertionViolation
from .lattice import is_delzant, is_reflexive, normal_form
from .polytope import from_vertices

__all__ = [
    "Atlas",
    "candidate_polygons",
    "enumerate_reflexive_polygons",
    "build_atlas",
    "polygon_name",
]

BOX = 3

_NAMES = {
    3: "triangle",
    4: "square",
    5: "pentagon",
    6: "hexagon",
}


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _nonzero_interior_point(chain, grid):
    """True if the convex polygon ``chain`` (ccw) strictly contains a nonzero grid point."""
    n = len(chain)
    if n < 3:
        return False
    for x in grid:
        if x == (0, 0):
            continue
        if all(_cross(chain[i], chain[(i + 1) % n], x) > 0 for i in range(n)):
            return True
    return False


def _origin_is_unique_interior_point(chain, grid):
    n = len(chain)
    inside = [
        x for x in grid
        if all(_cross(chain[i], chain[(i + 1) % n], x) > 0 for i in range(n))
    ]
    return inside == [(0, 0)]


def candidate_polygons(box=BOX, reverse=False):
    """Convex lattice polygons in [-box, box]^2 whose only interior lattice point is 0.

    Yields vertex tuples in counterclockwise order starting from the
    lowest-then-leftmost vertex.  ``reverse`` flips the search order, which
    changes the order of the output but not the set.
    """
    for s in _starts(box, reverse):
        yield from _from_start(s, box, reverse)


def _grid(box):
    return [(x, y) for y in range(-box, box + 1) for x in range(-box, box + 1)]


def _starts(box, reverse):
    starts = _grid(box)
    if reverse:
        starts.reverse()
    return starts


def _from_start(s, box, reverse):
    grid = _grid(box)
    above = [p for p in grid if p[1] > s[1] or (p[1] == s[1] and p[0] > s[0])]
    if reverse:
        above.reverse()
    yield from _grow([s], above, grid)


def _grow(chain, pool, grid):
    last = chain[-1]
    start = chain[0]
    if len(chain) >= 3:
        # closing edge last -> start must turn left at both ends
        if (_cross(chain[-2], last, start) > 0 and _cross(last, start, chain[1]) > 0
                and _origin_is_unique_interior_point(chain, grid)):
            yield tuple(chain)
    for p in pool:
        if p in chain:
            continue
        if len(chain) >= 2 and _cross(chain[-2], last, p) <= 0:
            continue
        # polar angle around the start vertex strictly increases
        if len(chain) >= 2 and _cross(start, last, p) <= 0:
            continue
        nxt = chain + [p]
        if _nonzero_interior_point(nxt, grid):
            continue
        yield from _grow(nxt, pool, grid)


def _reflexive_keys(s, box, reverse):
    """Normal forms of the reflexive candidates grown from start vertex ``s``."""
    keys = set()
    for verts in _from_start(s, box, reverse):
        p = from_vertices(verts)
        if is_reflexive(p):
            keys.add(normal_form(p).canonical_vertices)
    return keys


def enumerate_reflexive_polygons(box=BOX, reverse=False, workers=None):
    """One normal-form representative per GL(2, Z)-class of reflexive polygons.

    With ``workers`` > 1 the start vertices are shared out over a process
    pool; the merged result is the same list in the same order.
    """
    starts = _starts(box, reverse)
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_reflexive_keys, starts, [box] * len(starts), [reverse] * len(starts)))
    else:
        parts = [_reflexive_keys(s, box, reverse) for s in starts]
    keys = set().union(*parts)
    return [from_vertices(k) for k in sorted(keys, key=lambda k: (len(k), k))]


def polygon_name(p, index=None):
    base = _NAMES.get(len(p.vertices), f"{len(p.vertices)}-gon")
    return base if index is None else f"{base}-{index}"


@dataclass(frozen=True)
class Atlas:
    polygons: tuple
    delzant_subset: tuple
    reports: dict = field(default_factory=dict)

    @property
    def total_classes(self):
        return sum(len(r) for r in self.reports.values())


def build_atlas(polygons=None):
    """Classify every reflexive Delzant polygon and verify every extension."""
    if polygons is None:
        polygons = enumerate_reflexive_polygons()
    polygons = tuple(polygons)
    delzant = tuple(i for i, p in enumerate(polygons) if is_delzant(p))
    reports = {}
    for i in delzant:
        report = classify(polygons[i])
        for cls in report.classes:
            for q in cls.realizing_quadruples:
                verdict = verify_extension(cls.extension, q)
                if not verdict:
                    raise AssertionViolation(f"polygon {i}, {q}: {verdict}")
        reports[i] = report
    return Atlas(polygons, delzant, reports)

