"""Lattice-sensitive predicates on polytopes.

Integrality, reflexivity, smoothness and the Delzant condition, vertex
weights, the weight sum formula, and a GL(2, Z) normal form for polygons.
"""
from dataclasses import dataclass

from . import exact
from .errors import (
    AssertionViolation,
    IndexOutOfRange,
    NotAVertex,
    NotAVertexOfFacet,
    NotDelzant,
    NotIntegral,
    UnsupportedDimension,
)
from .polytope import edges, interior_lattice_points, transform

__all__ = [
    "VertexWeights",
    "NormalForm",
    "is_integral",
    "is_reflexive",
    "vertex_weights",
    "all_vertex_weights",
    "is_smooth",
    "is_delzant",
    "weight_sum_holds",
    "edge_out_of_facet",
    "normal_form",
    "gl_equivalent",
]


@dataclass(frozen=True)
class VertexWeights:
    vertex: tuple
    weights: tuple


@dataclass(frozen=True)
class NormalForm:
    canonical_vertices: tuple
    witness: tuple

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.canonical_vertices == other.canonical_vertices

    def __hash__(self):
        return hash(self.canonical_vertices)


def is_integral(p):
    return all(exact.is_integral_vector(v) for v in p.vertices)


def is_reflexive(p):
    """Every facet is {<w, nu> >= -1} with nu primitive, and p is integral.

    The halfspaces of a :class:`Polytope` are already minimal with primitive
    normals, so the constants are well defined.
    """
    if not all(h.c == -1 for h in p.halfspaces):
        return False
    if not is_integral(p):
        # primitive normals with c = -1 do not force integral vertices
        return False
    return True


def all_vertex_weights(p):
    """Map vertex index -> tuple of primitive outgoing edge directions."""
    weights = {i: [] for i in range(len(p.vertices))}
    for e in edges(p):
        weights[p.vertex_index(e.vertex)].append(e.direction)
        weights[p.vertex_index(e.end)].append(exact.neg(e.direction))
    return {i: tuple(sorted(ws)) for i, ws in weights.items()}


def vertex_weights(p, v):
    idx = p.vertex_index(v)
    if idx is None:
        raise NotAVertex(f"{v} is not a vertex")
    return VertexWeights(p.vertices[idx], all_vertex_weights(p)[idx])


def is_smooth(p):
    """Simple, with the edge directions at each vertex a basis of the lattice.

    Unlike :func:`is_delzant` this does not ask for integral vertices, so it
    also accepts blow-ups of non-integral size.
    """
    for ws in all_vertex_weights(p).values():
        if len(ws) != p.dim or not exact.is_unimodular_basis(ws, p.dim):
            return False
    return True


def is_delzant(p):
    return is_integral(p) and is_smooth(p)


def weight_sum_holds(p):
    """Check v == -(sum of the weights at v) at every vertex."""
    if not is_delzant(p):
        raise NotDelzant("the weight sum formula is only defined for Delzant polytopes")
    for i, ws in all_vertex_weights(p).items():
        total = tuple(sum(col) for col in zip(*ws))
        if p.vertices[i] != exact.neg(total):
            return False
    return True


def edge_out_of_facet(p, facet, v):
    """The weight at ``v`` leaving ``facet`` and the length of its edge.

    For a reflexive Delzant polytope the weight pairs to exactly 1 with the
    facet normal and the edge has positive integer length; both facts are
    checked and an :class:`AssertionViolation` is raised if they fail.
    """
    if not 0 <= facet < p.n_facets:
        raise IndexOutOfRange(f"facet index {facet} outside 0..{p.n_facets - 1}")
    idx = p.vertex_index(v)
    if idx is None or idx not in p.facet_vertex_incidence[facet]:
        raise NotAVertexOfFacet(f"{v} is not a vertex of facet {facet}")
    nu = p.halfspaces[facet].normal
    leaving = [
        e for e in edges(p)
        if (e.vertex == p.vertices[idx] or e.end == p.vertices[idx])
    ]
    outgoing = []
    for e in leaving:
        alpha = e.direction if e.vertex == p.vertices[idx] else exact.neg(e.direction)
        if exact.dot(alpha, nu) != 0:
            outgoing.append((alpha, e.length))
    if len(outgoing) != 1:
        raise AssertionViolation(f"expected one edge leaving the facet, found {len(outgoing)}")
    alpha, length = outgoing[0]
    if exact.dot(alpha, nu) != 1:
        raise AssertionViolation(f"<alpha, nu> = {exact.dot(alpha, nu)}, expected 1")
    if length.denominator != 1 or length <= 0:
        raise AssertionViolation(f"edge length {length} is not a positive integer")
    return alpha, length.numerator


def _hermite_unimodular(a, b):
    """The unique U in GL(2, Z) with U [a b] upper triangular in Hermite form.

    ``a`` must be primitive and ``a``, ``b`` independent.  The result has
    U a = (1, 0) and U b = (h, d) with d > 0 and 0 <= h < d.
    """
    g, x, y = _xgcd(a[0], a[1])
    if g != 1:
        raise ValueError("first column must be primitive")
    u = [[x, y], [-a[1], a[0]]]
    b1 = u[0][0] * b[0] + u[0][1] * b[1]
    b2 = u[1][0] * b[0] + u[1][1] * b[1]
    if b2 < 0:
        u[1] = [-u[1][0], -u[1][1]]
        b2 = -b2
    q = b1 // b2
    u[0] = [u[0][0] - q * u[1][0], u[0][1] - q * u[1][1]]
    return (tuple(u[0]), tuple(u[1]))


def _xgcd(a, b):
    """(g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def normal_form(p):
    """Canonical representative of the GL(2, Z)-orbit of a lattice polygon.

    Each (vertex, ordered pair of edge directions at it) fixes exactly one
    unimodular map putting that pair into Hermite form.  Equivalent polygons
    produce the same set of images, so the lexicographically least sorted
    vertex list among them is an orbit invariant.
    """
    if p.dim != 2:
        raise UnsupportedDimension(f"normal form is implemented for polygons only, not dim {p.dim}")
    if not is_integral(p):
        raise NotIntegral("normal form needs a lattice polygon")
    verts = [exact.int_vec(v) for v in p.vertices]
    best = None
    for ws in all_vertex_weights(p).values():
        a, b = ws
        for first, second in ((a, b), (b, a)):
            u = _hermite_unimodular(first, second)
            image = tuple(sorted(exact.mat_vec(u, v) for v in verts))
            if best is None or image < best[0]:
                best = (image, u)
    return NormalForm(best[0], best[1])


def gl_equivalent(p, q):
    if p.dim != q.dim:
        return False
    if len(p.vertices) != len(q.vertices):
        return False
    return normal_form(p) == normal_form(q)


def unique_interior_point_is_origin(p):
    return interior_lattice_points(p) == [tuple([0] * p.dim)]


def apply_normal_form(p):
    """The polygon with vertices given by its normal form."""
    nf = normal_form(p)
    return transform(p, nf.witness)
