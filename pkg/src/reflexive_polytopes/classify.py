"""Admissible quadruples, abstract Duistermaat-Heckman functions, classification.

A quadruple ``(polytope, facet, s, k)`` describes a monotone tall
complexity-one space combinatorially: ``facet`` is the minimal facet with
inward normal ``nu``, ``s`` the self-intersection invariant and ``k`` the
number of components of the exceptional set.  Its DH function is

    DH(w) = 2 - s <w, nu> - k max(0, <w, nu>)
          = min(2 - s <w, nu>, 2 - (s + k) <w, nu>)      (k >= 0)

so it is stored as the set of slopes ``{s, s + k}`` along ``nu``.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact
from .errors import IndexOutOfRange, NotReflexiveDelzant, OutOfDomain
from .lattice import is_delzant, is_reflexive
from .polytope import HalfSpace, Polytope, contains, from_halfspaces

__all__ = [
    "ALLOWED_SK",
    "AdmissibleQuadruple",
    "Verdict",
    "DHFunction",
    "DHClass",
    "ClassificationReport",
    "check_admissible",
    "enumerate_admissible",
    "dh_function",
    "dh_eval",
    "dh_polytope",
    "classify",
]

ALLOWED_SK = ((0, 0), (-1, 0), (-1, 1), (-1, 2))


@dataclass(frozen=True)
class AdmissibleQuadruple:
    polytope: Polytope
    facet: int
    s: int
    k: int

    @property
    def nu(self):
        return self.polytope.halfspaces[self.facet].normal

    def __repr__(self):
        return f"AdmissibleQuadruple(facet={self.facet}, nu={self.nu}, s={self.s}, k={self.k})"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a multi-step check: ``failed`` names the first failing step."""

    failed: str = None
    detail: str = ""
    witnesses: tuple = ()

    @property
    def ok(self):
        return self.failed is None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "pass"
        return f"fail({self.failed})" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class DHFunction:
    """w -> min over ``pieces`` of 2 - c <w, nu>, on ``domain``.

    Canonical form: ``pieces`` sorted and deduplicated; a function with the
    single slope 0 is constant and stores ``nu`` as the zero vector; otherwise
    of (nu, pieces) and (-nu, -pieces) the one with the smaller ``nu`` is kept.
    Dataclass equality is then equality of functions on ``domain``.
    """

    nu: tuple
    pieces: tuple
    domain: Polytope

    def __call__(self, w):
        return dh_eval(self, w)


def _canonical_dh(nu, slopes, domain):
    pieces = tuple(sorted(set(slopes)))
    if pieces == (0,):
        return DHFunction(tuple([0] * len(nu)), pieces, domain)
    flipped = exact.neg(nu)
    if flipped < tuple(nu):
        return DHFunction(flipped, tuple(sorted(-c for c in pieces)), domain)
    return DHFunction(tuple(nu), pieces, domain)


def check_admissible(p, facet, s, k):
    """Evaluate conditions (i)-(v) in order; the verdict names the first failure."""
    if not 0 <= facet < p.n_facets:
        raise IndexOutOfRange(f"facet index {facet} outside 0..{p.n_facets - 1}")
    if not (is_reflexive(p) and is_delzant(p)):
        return Verdict("i", "polytope is not reflexive Delzant")
    h = p.halfspaces[facet]
    if h.c != -1 or exact.primitive(h.normal) != h.normal:
        return Verdict("ii", f"facet {facet} is not supported on <w, nu> = -1")
    if (s, k) not in ALLOWED_SK:
        return Verdict("iii", f"(s, k) = ({s}, {k}) is not an allowed pair")
    nu = h.normal
    on_zero = tuple(v for v in p.vertices if exact.dot(v, nu) == 0)
    if on_zero and k != 0:
        return Verdict("iv", f"{len(on_zero)} vertices lie on <w, nu> = 0 but k = {k}", on_zero)
    if k == 2 and HalfSpace(exact.neg(nu), -1) not in p.halfspaces:
        return Verdict("v", "k = 2 but there is no opposite facet <w, -nu> >= -1")
    return Verdict()


def _require_reflexive_delzant(p):
    if not (is_reflexive(p) and is_delzant(p)):
        raise NotReflexiveDelzant("polytope must be reflexive and Delzant")


def enumerate_admissible(p):
    _require_reflexive_delzant(p)
    return [
        AdmissibleQuadruple(p, facet, s, k)
        for facet in range(p.n_facets)
        for s, k in ALLOWED_SK
        if check_admissible(p, facet, s, k)
    ]


def dh_function(q):
    return _canonical_dh(q.nu, (q.s, q.s + q.k), q.polytope)


def dh_eval(f, w):
    w = exact.rat_vec(w)
    if not contains(f.domain, w):
        raise OutOfDomain(f"{w} is not in the domain")
    x = exact.dot(w, f.nu)
    return min(2 - c * x for c in f.pieces)


def dh_polytope(q):
    """{(w, t) : w in the polytope, 0 <= t <= DH(w)}."""
    f = dh_function(q)
    d = q.polytope.dim
    hs = [HalfSpace(h.normal + (0,), h.c) for h in q.polytope.halfspaces]
    hs.append(HalfSpace((0,) * d + (1,), 0))
    for c in f.pieces:
        hs.append(HalfSpace(exact.scale(-c, f.nu) + (-1,), -2))
    return from_halfspaces(hs)


@dataclass(frozen=True)
class DHClass:
    dh: DHFunction
    realizing_quadruples: tuple
    m: int
    isolated_fixed_points: int
    dh_min: Fraction
    extension: Polytope
    genus: int = 0
    painting: str = "trivial"

    @property
    def s(self):
        return self.realizing_quadruples[0].s

    @property
    def k(self):
        return self.realizing_quadruples[0].k

    @property
    def nu(self):
        return self.realizing_quadruples[0].nu

    @property
    def collides(self):
        """More than one quadruple yields this DH function."""
        return len(self.realizing_quadruples) > 1


@dataclass(frozen=True)
class ClassificationReport:
    polytope: Polytope
    classes: tuple = field(default_factory=tuple)

    def __len__(self):
        return len(self.classes)


def classify(p):
    """One class per distinct DH function among the admissible quadruples."""
    from .extension import build_extension

    groups = {}
    for q in enumerate_admissible(p):
        groups.setdefault(dh_function(q), []).append(q)
    classes = []
    for dh, quads in groups.items():
        first = quads[0]
        m = len(p.facet_vertex_incidence[first.facet])
        classes.append(
            DHClass(
                dh=dh,
                realizing_quadruples=tuple(quads),
                m=m,
                isolated_fixed_points=first.k * m,
                dh_min=Fraction(2 + first.s),
                extension=build_extension(first),
            )
        )
    return ClassificationReport(p, tuple(classes))
