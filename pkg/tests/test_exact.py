import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from reflexive_polytopes import exact
from reflexive_polytopes.errors import DimensionMismatch, FormatError, SingularMatrix, ZeroVector

nonzero_vectors = st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=5).filter(any)


@pytest.mark.parametrize("v, expected", [((2, 4), (1, 2)), ((0, -3), (0, -1)), ((-6, 9, 15), (-2, 3, 5))])
def test_primitive(v, expected):
    assert exact.primitive(v) == expected


def test_primitive_of_zero():
    with pytest.raises(ZeroVector):
        exact.primitive((0, 0))


@given(nonzero_vectors)
def test_primitive_idempotent_and_divides(v):
    p = exact.primitive(v)
    assert exact.primitive(p) == p
    g = next(a // b for a, b in zip(v, p) if b)
    assert g >= 1
    assert tuple(g * x for x in p) == tuple(v)


@pytest.mark.parametrize("vs, expected", [
    ([(1, 0), (0, 1)], True),
    ([(1, 0), (1, 2)], False),
    ([(1, 0), (1, 1)], True),
])
def test_is_unimodular_basis(vs, expected):
    assert exact.is_unimodular_basis(vs) is expected


def test_unimodular_basis_wrong_count():
    with pytest.raises(DimensionMismatch):
        exact.is_unimodular_basis([(1, 0)], dim=2)


def test_unimodular_invariant_under_permutation_and_negation():
    rng = random.Random(5)
    for _ in range(50):
        dim = rng.randint(2, 4)
        vs = [tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(dim)]
        base = exact.is_unimodular_basis(vs)
        for perm in permutations(vs):
            signs = [rng.choice((-1, 1)) for _ in vs]
            assert exact.is_unimodular_basis([exact.scale(s, v) for s, v in zip(signs, perm)]) == base


def _cofactor_det(rows):
    if len(rows) == 1:
        return rows[0][0]
    return sum(
        (-1) ** j * rows[0][j] * _cofactor_det([r[:j] + r[j + 1:] for r in rows[1:]])
        for j in range(len(rows))
    )


def test_bareiss_matches_cofactor_expansion():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert exact.determinant(m) == _cofactor_det(m)


def test_solve_square_examples():
    assert exact.solve_square([(1, 0), (0, 1)], (3, Fraction(-1, 2))) == (3, Fraction(-1, 2))
    assert exact.solve_square([(1, 0), (1, 1)], (-1, -1)) == (-1, 0)
    with pytest.raises(SingularMatrix):
        exact.solve_square([(1, 2), (2, 4)], (0, 0))


def test_solve_square_reproduces_rhs():
    rng = random.Random(2024)
    solved = 0
    while solved < 200:
        n = rng.randint(2, 4)
        a = [tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n)]
        if exact.determinant(a) == 0:
            continue
        b = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(n))
        x = exact.solve_square(a, b)
        assert exact.mat_vec(a, x) == b
        solved += 1


def test_nullspace_and_rank():
    assert exact.rank([(1, 2), (2, 4)]) == 1
    assert exact.nullspace([(1, 2)], 2) == [(-2, 1)]


@pytest.mark.parametrize("text, value", [("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), ("4/6", Fraction(2, 3))])
def test_parse_rational(text, value):
    assert exact.parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/0", "abc", ""])
def test_parse_rational_rejects(text):
    with pytest.raises(FormatError):
        exact.parse_rational(text)


@given(st.fractions())
def test_format_parse_roundtrip(x):
    s = exact.format_rational(x)
    assert exact.parse_rational(s) == x
    assert "/" not in s or int(s.split("/")[1]) > 1


def test_parse_point():
    assert exact.parse_point("1,-1/2") == (1, Fraction(-1, 2))
    with pytest.raises(FormatError):
        exact.parse_point("1,,2")


def test_floats_rejected():
    with pytest.raises(TypeError):
        exact.as_rational(0.5)
