"""Full-dimensional rational polytopes in both descriptions at once.

A :class:`Polytope` always carries its minimal H-representation (primitive
inward normals, one halfspace per facet, sorted by normal), its vertices in
lexicographic order and the facet/vertex incidences.  Two polytopes are equal
exactly when they are the same point set, so ``==`` is geometric equality.

Vertex enumeration intersects every ``dim``-subset of bounding hyperplanes
and keeps the feasible solutions.  That is quadratic-to-quartic in the number
of facets, which is fine for the small polytopes this package deals with
(dimension at most four, a few dozen facets).
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor, gcd

from . import exact
from .errors import (
    DimensionMismatch,
    Empty,
    IndexOutOfRange,
    NotFullDimensional,
    SingularMatrix,
    Unbounded,
)

__all__ = [
    "HalfSpace",
    "Edge",
    "Polytope",
    "from_vertices",
    "from_halfspaces",
    "edges",
    "lattice_points",
    "interior_lattice_points",
    "facet_of",
    "facet_index",
    "contains",
    "affine_dimension",
    "transform",
    "translate",
]


@dataclass(frozen=True, order=True)
class HalfSpace:
    """The set {w : <w, normal> >= c}."""

    normal: tuple
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", exact.int_vec(self.normal))
        object.__setattr__(self, "c", exact.as_rational(self.c))
        if not any(self.normal):
            raise exact.ZeroVector("halfspace normal must be nonzero")

    def value(self, w):
        return exact.dot(w, self.normal)

    def normalized(self):
        """Same halfspace with a primitive normal."""
        g = 0
        for x in self.normal:
            g = gcd(g, x)
        return HalfSpace(tuple(x // g for x in self.normal), self.c / g)


@dataclass(frozen=True)
class Edge:
    """The segment {vertex + t * direction : 0 <= t <= length}."""

    vertex: tuple
    direction: tuple
    length: Fraction

    @property
    def end(self):
        return exact.add(self.vertex, exact.scale(self.length, self.direction))


@dataclass(frozen=True)
class Polytope:
    dim: int
    halfspaces: tuple
    vertices: tuple
    facet_vertex_incidence: tuple

    def __repr__(self):
        verts = ", ".join(
            "(" + ",".join(exact.format_rational(x) for x in v) + ")"
            for v in self.vertices
        )
        return f"Polytope(dim={self.dim}, vertices=[{verts}])"

    @property
    def n_facets(self):
        return len(self.halfspaces)

    def vertex_index(self, v):
        v = exact.rat_vec(v)
        try:
            return self.vertices.index(v)
        except ValueError:
            return None

    def facets_at(self, vertex_idx):
        """Indices of the facets containing vertex ``vertex_idx``."""
        return tuple(
            i for i, inc in enumerate(self.facet_vertex_incidence) if vertex_idx in inc
        )


def affine_dimension(points):
    points = list(points)
    if not points:
        return -1
    base = points[0]
    return exact.rank([exact.sub(p, base) for p in points[1:]], len(base)) if len(points) > 1 else 0


def from_vertices(points):
    """Convex hull of a finite point set, canonicalized.

    Raises :class:`NotFullDimensional` when the points lie in a hyperplane.
    """
    pts = sorted({exact.rat_vec(p) for p in points})
    if not pts:
        raise Empty("no points given")
    d = len(pts[0])
    if d == 0 or any(len(p) != d for p in pts):
        raise DimensionMismatch("points must share one positive dimension")
    if affine_dimension(pts) < d:
        raise NotFullDimensional(f"points span less than dimension {d}")
    facets = set()
    for subset in combinations(pts, d):
        base = subset[0]
        diffs = [exact.sub(q, base) for q in subset[1:]]
        normals = exact.nullspace(diffs, d)
        if len(normals) != 1:
            continue
        normal = normals[0]
        values = [exact.dot(p, normal) for p in pts]
        c = exact.dot(base, normal)
        lo, hi = min(values), max(values)
        if lo == c:
            facets.add(HalfSpace(normal, c))
        if hi == c:
            facets.add(HalfSpace(exact.neg(normal), -c))
    return _build(d, facets)


def from_halfspaces(halfspaces, dim=None):
    """Polytope cut out by the given halfspaces, with redundancy removed.

    Raises :class:`Empty`, :class:`Unbounded` or :class:`NotFullDimensional`
    (checked in that order) instead of ever returning a degenerate object.
    """
    hs = [h if isinstance(h, HalfSpace) else HalfSpace(*h) for h in halfspaces]
    if not hs:
        raise Unbounded("no halfspaces given")
    d = len(hs[0].normal)
    if dim is not None and dim != d:
        raise DimensionMismatch(f"halfspaces live in dimension {d}, not {dim}")
    if any(len(h.normal) != d for h in hs):
        raise DimensionMismatch("halfspace normals have different lengths")
    tightest = {}
    for h in hs:
        h = h.normalized()
        if h.normal not in tightest or h.c > tightest[h.normal]:
            tightest[h.normal] = h.c
    return _build(d, {HalfSpace(n, c) for n, c in tightest.items()})


def _feasible_points(d, hs):
    """All points where ``d`` independent bounding hyperplanes meet, if feasible."""
    found = set()
    for subset in combinations(hs, d):
        try:
            x = exact.solve_square([h.normal for h in subset], [h.c for h in subset])
        except SingularMatrix:
            continue
        if all(h.value(x) >= h.c for h in hs):
            found.add(x)
    return found


def _has_recession_direction(d, normals):
    """True iff some nonzero x has <x, n> >= 0 for every normal n."""
    if exact.rank(normals, d) < d:
        return True
    for subset in combinations(normals, d - 1):
        ker = exact.nullspace(subset, d)
        if len(ker) != 1:
            continue
        for r in (ker[0], exact.neg(ker[0])):
            if all(exact.dot(r, n) >= 0 for n in normals):
                return True
    return False


def _build(d, halfspaces):
    hs = sorted(halfspaces)
    normals = [h.normal for h in hs]
    lineality = exact.nullspace(normals, d) if exact.rank(normals, d) < d else []
    probe = hs + [HalfSpace(n, 0) for n in lineality] + [HalfSpace(exact.neg(n), 0) for n in lineality]
    verts = _feasible_points(d, probe)
    if not verts:
        raise Empty("halfspaces have empty intersection")
    if _has_recession_direction(d, normals):
        raise Unbounded("halfspaces do not bound a polytope")
    verts = sorted(verts)
    if affine_dimension(verts) < d:
        raise NotFullDimensional(f"intersection has dimension below {d}")
    facets = []
    for h in hs:
        tight = [v for v in verts if h.value(v) == h.c]
        if len(tight) >= d and affine_dimension(tight) == d - 1:
            facets.append(h)
    incidence = tuple(
        frozenset(i for i, v in enumerate(verts) if h.value(v) == h.c) for h in facets
    )
    return Polytope(d, tuple(facets), tuple(verts), incidence)


def contains(p, w, strict=False):
    w = exact.rat_vec(w)
    if len(w) != p.dim:
        raise DimensionMismatch(f"point has length {len(w)}, polytope dimension {p.dim}")
    if strict:
        return all(h.value(w) > h.c for h in p.halfspaces)
    return all(h.value(w) >= h.c for h in p.halfspaces)


def facet_of(p, i):
    """The halfspace of facet ``i`` and the indices of its vertices."""
    if not 0 <= i < p.n_facets:
        raise IndexOutOfRange(f"facet index {i} outside 0..{p.n_facets - 1}")
    return p.halfspaces[i], p.facet_vertex_incidence[i]


def facet_index(p, normal):
    """Index of the facet with the given primitive inward normal, or None."""
    normal = tuple(normal)
    for i, h in enumerate(p.halfspaces):
        if h.normal == normal:
            return i
    return None


def edges(p):
    """One :class:`Edge` per edge of ``p``.

    Two vertices span an edge exactly when the facets containing both have
    normals of rank ``dim - 1``.  The edge starts at the lexicographically
    smaller endpoint and its direction is the primitive lattice vector.
    """
    out = []
    at = [set(p.facets_at(i)) for i in range(len(p.vertices))]
    for i, j in combinations(range(len(p.vertices)), 2):
        common = at[i] & at[j]
        if len(common) < p.dim - 1:
            continue
        if exact.rank([p.halfspaces[f].normal for f in common], p.dim) != p.dim - 1:
            continue
        v, u = p.vertices[i], p.vertices[j]
        delta = exact.sub(u, v)
        direction = exact.primitive_integer_direction(delta)
        k = next(t for t, x in enumerate(direction) if x)
        out.append(Edge(v, direction, delta[k] / direction[k]))
    return out


def _bounding_box(p):
    lows = [floor(min(v[i] for v in p.vertices)) for i in range(p.dim)]
    highs = [ceil(max(v[i] for v in p.vertices)) for i in range(p.dim)]
    return lows, highs


def lattice_points(p):
    lows, highs = _bounding_box(p)
    ranges = [range(lo, hi + 1) for lo, hi in zip(lows, highs)]
    return [pt for pt in product(*ranges) if contains(p, pt)]


def interior_lattice_points(p):
    lows, highs = _bounding_box(p)
    ranges = [range(lo, hi + 1) for lo, hi in zip(lows, highs)]
    return [pt for pt in product(*ranges) if contains(p, pt, strict=True)]


def transform(p, matrix):
    """Image of ``p`` under the linear map given by an integer matrix (rows)."""
    matrix = [exact.int_vec(r) for r in matrix]
    return from_vertices([exact.mat_vec(matrix, v) for v in p.vertices])


def translate(p, shift):
    shift = exact.rat_vec(shift)
    return from_vertices([exact.add(v, shift) for v in p.vertices])
