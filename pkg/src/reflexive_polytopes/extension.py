"""Combinatorial blow-ups and toric extensions of admissible quadruples.

The extension of ``(P, F, s, k)`` is a reflexive Delzant polytope one
dimension up whose projection is ``P`` and whose vertical fibres have length
``DH(w)``.  With ``nu`` the normal of ``F`` it is cut out by the lifted facets
of ``P`` and ``y >= -1`` together with

    k = 0:          -s <w, nu> - y >= -1          (y <= 1 - s <w, nu>)
    k = 1, 2:       -y >= -1 and <w, nu> - y >= -1
    k = 2 only:     -<w, nu> + y >= -1

The two k > 0 cases are blow-ups of size 1 of the previous stage, which the
test suite checks independently through :func:`blow_up`.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import exact
from .classify import Verdict, check_admissible, dh_eval, dh_function
from .errors import (
    AssertionViolation,
    EpsilonTooLarge,
    InvalidFace,
    NotAdmissible,
    NotDelzant,
    OutOfDomain,
)
from .lattice import is_delzant, is_reflexive, is_smooth
from .polytope import (
    HalfSpace,
    affine_dimension,
    edges,
    facet_index,
    from_halfspaces,
    from_vertices,
)

__all__ = [
    "BlowUpSpec",
    "blow_up",
    "face_vertices",
    "build_extension",
    "extension_halfspaces",
    "project",
    "height",
    "fiber",
    "verify_extension",
    "blow_up_face",
]


@dataclass(frozen=True)
class BlowUpSpec:
    """Blow up the face where the facets in ``face`` meet, by ``epsilon``."""

    face: frozenset
    epsilon: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "face", frozenset(self.face))
        object.__setattr__(self, "epsilon", exact.as_rational(self.epsilon))
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")


def face_vertices(p, facets):
    """Indices of the vertices lying on every facet in ``facets``."""
    facets = list(facets)
    idx = set(range(len(p.vertices)))
    for f in facets:
        idx &= p.facet_vertex_incidence[f]
    return frozenset(idx)


def blow_up(p, spec):
    """Cut ``p`` by <w, sum nu_i> >= epsilon + sum c_i over the facets at the face.

    The sum runs over every facet containing the face, not only the ones
    named in ``spec``.  Vertices off the face must stay strictly inside the
    new halfspace, otherwise :class:`EpsilonTooLarge` is raised.
    """
    if not is_smooth(p):
        raise NotDelzant("blow-ups are defined for smooth polytopes")
    if not spec.face or any(not 0 <= f < p.n_facets for f in spec.face):
        raise InvalidFace(f"bad facet set {sorted(spec.face)}")
    on_face = face_vertices(p, spec.face)
    if not on_face:
        raise InvalidFace("the facets do not meet")
    face_dim = affine_dimension([p.vertices[i] for i in on_face])
    if p.dim - face_dim < 2:
        raise InvalidFace(f"face has codimension {p.dim - face_dim}, need at least 2")
    containing = [
        i for i, inc in enumerate(p.facet_vertex_incidence) if on_face <= inc
    ]
    nu0 = tuple(sum(col) for col in zip(*(p.halfspaces[i].normal for i in containing)))
    c0 = spec.epsilon + sum(p.halfspaces[i].c for i in containing)
    for i, v in enumerate(p.vertices):
        if i not in on_face and exact.dot(v, nu0) <= c0:
            raise EpsilonTooLarge(f"vertex {v} would be cut: <v, nu0> = {exact.dot(v, nu0)} <= {c0}")
    result = from_halfspaces(p.halfspaces + (HalfSpace(nu0, c0),))
    if not is_smooth(result):
        raise AssertionViolation("blow-up of a smooth polytope is not smooth")
    return result


def extension_halfspaces(q):
    """Halfspaces of the toric extension of ``q``, before canonicalization."""
    d = q.polytope.dim
    nu = q.nu
    zero = (0,) * d
    hs = [HalfSpace(h.normal + (0,), h.c) for h in q.polytope.halfspaces]
    hs.append(HalfSpace(zero + (1,), -1))
    if q.k == 0:
        hs.append(HalfSpace(exact.scale(-q.s, nu) + (-1,), -1))
    else:
        hs.append(HalfSpace(zero + (-1,), -1))
        hs.append(HalfSpace(nu + (-1,), -1))
        if q.k == 2:
            hs.append(HalfSpace(exact.neg(nu) + (1,), -1))
    return hs


def build_extension(q):
    if not check_admissible(q.polytope, q.facet, q.s, q.k):
        raise NotAdmissible(str(check_admissible(q.polytope, q.facet, q.s, q.k)))
    ext = from_halfspaces(extension_halfspaces(q))
    if not (is_reflexive(ext) and is_delzant(ext)):
        raise AssertionViolation(f"extension of {q} is not reflexive Delzant")
    return ext


def project(p_prime):
    """Image under dropping the last coordinate."""
    return from_vertices([v[:-1] for v in p_prime.vertices])


def fiber(p_prime, w):
    """The interval [lo, hi] of heights y with (w, y) in ``p_prime``."""
    w = exact.rat_vec(w)
    if len(w) != p_prime.dim - 1:
        raise OutOfDomain(f"point {w} has the wrong length")
    lo = hi = None
    for h in p_prime.halfspaces:
        a = h.normal[-1]
        rest = h.c - exact.dot(w, h.normal[:-1])
        if a == 0:
            if rest > 0:
                raise OutOfDomain(f"{w} is outside the projection")
            continue
        bound = Fraction(rest, a)
        if a > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if lo is None or hi is None or lo > hi:
        raise OutOfDomain(f"{w} is outside the projection")
    return lo, hi


def height(p_prime, w):
    lo, hi = fiber(p_prime, w)
    return hi - lo


def _check_points(p_prime, q, f):
    """Points at which height and DH must agree for them to agree everywhere.

    Vertices of the base, its edge crossings with <w, nu> = 0 (together the
    vertices of both halves), and the vertices of every cell on which the
    upper envelope, lower envelope and DH are simultaneously affine.
    """
    base = q.polytope
    nu = q.nu
    points = set(base.vertices)
    for e in edges(base):
        a = exact.dot(e.vertex, nu)
        b = exact.dot(e.end, nu)
        if a * b < 0:
            t = Fraction(-a, b - a)
            points.add(exact.add(e.vertex, exact.scale(t * e.length, e.direction)))
    upper = [h for h in p_prime.halfspaces if h.normal[-1] < 0]
    lower = [h for h in p_prime.halfspaces if h.normal[-1] > 0]

    def graph(h):
        # y = (c - <w, n>) / a  as  (slope vector, constant)
        a = h.normal[-1]
        return tuple(Fraction(-x, a) for x in h.normal[:-1]), Fraction(h.c, a)

    pieces = [(exact.scale(-c, f.nu), Fraction(2)) for c in f.pieces]
    families = [
        ([graph(h) for h in upper], "min"),
        ([graph(h) for h in lower], "max"),
        (pieces, "min"),
    ]
    cells = [list(base.halfspaces)]
    for funcs, kind in families:
        refined = []
        for cell in cells:
            for i, (gi, ci) in enumerate(funcs):
                extra = []
                for j, (gj, cj) in enumerate(funcs):
                    if j == i:
                        continue
                    # min: g_i <= g_j  ->  <w, g_j - g_i> >= c_i - c_j
                    slope = exact.sub(gj, gi) if kind == "min" else exact.sub(gi, gj)
                    const = ci - cj if kind == "min" else cj - ci
                    if any(slope):
                        den = lcm(*(x.denominator for x in slope))
                        extra.append(HalfSpace(tuple(int(x * den) for x in slope), const * den))
                    elif const > 0:
                        extra = None
                        break
                if extra is not None:
                    refined.append(cell + extra)
        cells = refined
    for cell in cells:
        try:
            points.update(from_halfspaces(cell).vertices)
        except (ValueError, ArithmeticError):
            continue
    return sorted(points)


def verify_extension(p_prime, q):
    """Check reflexive Delzant, projection onto the base, and height == DH.

    Returns a :class:`Verdict` whose ``failed`` is one of ``"dimension"``,
    ``"reflexive-delzant"``, ``"projection"`` or ``"height"``; for a height
    failure ``witnesses`` lists every (point, height, DH) mismatch found.
    """
    if p_prime.dim != q.polytope.dim + 1:
        return Verdict("dimension", f"extension has dim {p_prime.dim}, base has {q.polytope.dim}")
    if not (is_reflexive(p_prime) and is_delzant(p_prime)):
        return Verdict("reflexive-delzant", "extension is not reflexive Delzant")
    if project(p_prime) != q.polytope:
        return Verdict("projection", "projection differs from the base polytope")
    f = dh_function(q)
    mismatches = []
    for w in _check_points(p_prime, q, f):
        hw, dw = height(p_prime, w), dh_eval(f, w)
        if hw != dw:
            mismatches.append((w, hw, dw))
    if mismatches:
        w, hw, dw = mismatches[0]
        shown = "(" + ",".join(exact.format_rational(x) for x in w) + ")"
        return Verdict(
            "height",
            f"at {shown}: height {exact.format_rational(hw)} != DH {exact.format_rational(dw)}",
            tuple(mismatches),
        )
    return Verdict()


def blow_up_face(q, stage):
    """Facet indices of the face blown up to reach the next stage.

    ``stage`` is the extension of (P, F, 0, 0) or of (P, F, -1, 1); the face
    is the copy of F at y = 1, respectively of the opposite facet at y = -1.
    """
    d = q.polytope.dim
    nu = q.nu
    zero = (0,) * d
    if q.k == 1:
        pair = (zero + (-1,), nu + (0,))
    else:
        pair = (zero + (1,), exact.neg(nu) + (0,))
    idx = [facet_index(stage, n) for n in pair]
    if None in idx:
        raise InvalidFace("the expected facets are missing from the previous stage")
    return frozenset(idx)

