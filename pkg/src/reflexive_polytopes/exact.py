"""Exact scalars, lattice vectors and the small linear algebra used everywhere.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.  Lattice vectors are tuples of ``int`` and
rational vectors are tuples of ``Fraction``; both are immutable and hashable,
so they can be used as dictionary keys and shared freely.

Nothing in this module (or the package) ever touches a float.
"""
from fractions import Fraction
from math import gcd, lcm
import re

from .errors import DimensionMismatch, FormatError, SingularMatrix, ZeroVector

__all__ = [
    "Fraction",
    "as_rational",
    "rat_vec",
    "int_vec",
    "is_integral_vector",
    "dot",
    "add",
    "sub",
    "scale",
    "neg",
    "primitive",
    "primitive_integer_direction",
    "determinant",
    "rank",
    "nullspace",
    "is_unimodular_basis",
    "solve_square",
    "mat_vec",
    "format_rational",
    "parse_rational",
    "parse_point",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_rational(x):
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected on purpose: an inexact input would silently poison
    every downstream equality test.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rat_vec(xs):
    return tuple(as_rational(x) for x in xs)


def int_vec(xs):
    out = []
    for x in xs:
        x = as_rational(x)
        if x.denominator != 1:
            raise ValueError(f"{x} is not an integer")
        out.append(x.numerator)
    return tuple(out)


def is_integral_vector(v):
    return all(Fraction(x).denominator == 1 for x in v)


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)} differ")
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(t, v):
    return tuple(t * a for a in v)


def neg(v):
    return tuple(-a for a in v)


def primitive(v):
    """Divide an integer vector by the gcd of its entries.

    >>> primitive((2, 4))
    (1, 2)
    """
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector("the zero vector has no primitive multiple")
    return tuple(x // g for x in v)


def primitive_integer_direction(v):
    """Primitive integer vector positively parallel to a rational vector."""
    v = rat_vec(v)
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    return primitive(tuple(int(x * den) for x in v))


def determinant(rows):
    """Determinant of a square matrix.

    Integer matrices go through Bareiss' fraction-free elimination, so every
    intermediate value is an exact integer; anything else falls back to
    Gaussian elimination over the rationals.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("determinant needs a square matrix")
    if n == 0:
        return 1
    if all(isinstance(x, int) for r in rows for x in r):
        return _bareiss(rows)
    m = [list(map(Fraction, r)) for r in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] / m[col][col]
            if f:
                for j in range(col, n):
                    m[i][j] -= f * m[col][j]
    return det


def _bareiss(rows):
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _row_reduce(rows, ncols):
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows, ncols=None):
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(_row_reduce(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {x : rows . x = 0}, as primitive integer vectors."""
    rows = list(rows)
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    m, pivots = _row_reduce(rows, ncols)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -m[i][free]
        basis.append(primitive_integer_direction(x))
    return basis


def is_unimodular_basis(vs, dim=None):
    """True iff the integer vectors ``vs`` form a basis of Z^dim."""
    vs = [tuple(v) for v in vs]
    if dim is None:
        dim = len(vs[0]) if vs else 0
    if len(vs) != dim or any(len(v) != dim for v in vs):
        raise DimensionMismatch(f"need exactly {dim} vectors of length {dim}")
    return abs(determinant(vs)) == 1


def mat_vec(rows, x):
    return tuple(dot(r, x) for r in rows)


def solve_square(rows, b):
    """Exact solution of ``rows . x = b`` for a nonsingular square system."""
    n = len(rows)
    if len(b) != n or any(len(r) != n for r in rows):
        raise DimensionMismatch("solve_square needs an n x n system")
    aug = [list(map(Fraction, r)) + [as_rational(bi)] for r, bi in zip(rows, b)]
    m, pivots = _row_reduce(aug, n)
    if len(pivots) < n:
        raise SingularMatrix("matrix is singular")
    return tuple(m[i][n] for i in range(n))


def format_rational(x):
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s, field="value"):
    if isinstance(s, int) and not isinstance(s, bool):
        return Fraction(s)
    if not isinstance(s, str):
        raise FormatError(field, f"expected a rational string, got {s!r}")
    match = _RATIONAL_RE.match(s)
    if match is None:
        raise FormatError(field, f"invalid rational {s!r}")
    num, den = match.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise FormatError(field, f"zero denominator in {s!r}")
    return Fraction(int(num), den)


def parse_point(text, field="point"):
    """Parse a comma-separated point such as ``"1,-1/2"``."""
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise FormatError(field, f"malformed point {text!r}")
    return tuple(parse_rational(p, f"{field}[{i}]") for i, p in enumerate(parts))
