"""Acceptance criteria, one test each.

Every test appends a single ``[PASS]`` or ``[FAIL]`` line to the summary
printed at the end of the pytest run.  All comparisons are exact.
"""
import json
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import product

import conftest
from reflexive_polytopes.catalog import named_polytope
from reflexive_polytopes.classify import (
    ALLOWED_SK,
    AdmissibleQuadruple,
    check_admissible,
    classify,
    dh_eval,
    dh_function,
    enumerate_admissible,
)
from reflexive_polytopes.cli import main
from reflexive_polytopes.exact import dot
from reflexive_polytopes.extension import BlowUpSpec, blow_up, blow_up_face, build_extension, verify_extension
from reflexive_polytopes.io import polytope_from_document, polytope_to_document
from reflexive_polytopes.lattice import edge_out_of_facet, gl_equivalent, is_delzant, is_reflexive, weight_sum_holds
from reflexive_polytopes.polytope import contains, from_halfspaces, interior_lattice_points, transform

from _random_polytopes import random_delzant, random_full_dim_points, random_interior_point, random_unimodular, seeded


@contextmanager
def criterion(label, summary):
    try:
        yield
    except BaseException as exc:
        conftest.ACCEPTANCE_RESULTS.append(f"[FAIL] {label} {summary}: {type(exc).__name__} {exc}".rstrip())
        raise
    conftest.ACCEPTANCE_RESULTS.append(f"[PASS] {label} {summary}")


def named_delzant(atlas, name):
    target = named_polytope(name)
    return next(atlas.polygons[i] for i in atlas.delzant_subset if gl_equivalent(atlas.polygons[i], target))


def dh_direct(q, w):
    x = dot(w, q.nu)
    return 2 - q.s * x - q.k * max(0, x)


def grid_class_count(p):
    lo = [min(v[i] for v in p.vertices) for i in range(2)]
    hi = [max(v[i] for v in p.vertices) for i in range(2)]
    axes = [[Fraction(t, 2) for t in range(int(2 * a), int(2 * b) + 1)] for a, b in zip(lo, hi)]
    grid = [w for w in product(*axes) if contains(p, w)]
    return len({tuple(dh_direct(q, w) for w in grid) for q in enumerate_admissible(p)})


def test_ac1_reflexive_census(capsys):
    with criterion("AC1", "enumerate-reflexive gives 16 classes, 5 Delzant, under 60 s"):
        start = time.perf_counter()
        code = main(["enumerate-reflexive"])
        elapsed = time.perf_counter() - start
        doc = json.loads(capsys.readouterr().out)
        assert code == 0
        assert doc["count"] == 16, doc["count"]
        assert doc["delzant_count"] == 5, doc["delzant_count"]
        assert elapsed < 60, f"{elapsed:.1f} s"


def test_ac2_admissibility_gate(atlas):
    with criterion("AC2", "admissible (s,k) stay in the allowed set; hexagon k > 0 fails (iv)"):
        for i in atlas.delzant_subset:
            for q in enumerate_admissible(atlas.polygons[i]):
                assert (q.s, q.k) in ALLOWED_SK
        hexagon = named_delzant(atlas, "hexagon")
        for f in range(hexagon.n_facets):
            for s, k in product((0, -1), (1, 2)):
                verdict = check_admissible(hexagon, f, s, k)
                assert verdict.failed == ("iv" if s == -1 else "iii"), (f, s, k, str(verdict))


def test_ac3_every_extension_verifies(atlas):
    with criterion("AC3", "every admissible quadruple extends and verifies, under 10 s"):
        counts = {name: len(enumerate_admissible(named_delzant(atlas, name)))
                  for name in ("square", "triangle", "hexagon")}
        assert counts == {"square": 16, "triangle": 9, "hexagon": 12}, counts
        start = time.perf_counter()
        total = 0
        for i in atlas.delzant_subset:
            for q in enumerate_admissible(atlas.polygons[i]):
                ext = build_extension(q)
                verdict = verify_extension(ext, q)
                assert verdict, (q, str(verdict))
                total += 1
        elapsed = time.perf_counter() - start
        assert total == sum(len(enumerate_admissible(atlas.polygons[i])) for i in atlas.delzant_subset)
        assert elapsed < 10, f"{elapsed:.1f} s"


def test_ac4_blow_up_oracle(atlas):
    with criterion("AC4", "k = 1 and k = 2 extensions equal blow-ups of the previous stage"):
        checked = 0
        for i in atlas.delzant_subset:
            p = atlas.polygons[i]
            for q in enumerate_admissible(p):
                if q.k == 0:
                    continue
                prev = AdmissibleQuadruple(p, q.facet, 0 if q.k == 1 else -1, q.k - 1)
                stage = build_extension(prev)
                assert blow_up(stage, BlowUpSpec(blow_up_face(q, stage), 1)) == build_extension(q), q
                checked += 1
        assert checked > 0


def test_ac5_classification_counts(atlas):
    with criterion("AC5", "classify gives 11 / 7 / 7, matches the grid oracle, stable under 20 maps each"):
        rng = seeded(2025)
        for name, expected in (("square", 11), ("triangle", 7), ("hexagon", 7)):
            p = named_delzant(atlas, name)
            assert len(classify(p)) == expected, name
            assert grid_class_count(p) == expected, name
            for _ in range(20):
                image = transform(p, random_unimodular(rng, 2, steps=rng.randint(1, 5)))
                assert len(classify(image)) == expected, name
                assert grid_class_count(image) == expected, name


def test_ac6_lattice_identities(atlas):
    with criterion("AC6", "weight sum iff reflexive, interior point, vertex sum, edge out of facet on atlas + 100 random"):
        rng = seeded(6)
        corpus = [atlas.polygons[i] for i in atlas.delzant_subset]
        corpus += [random_delzant(rng) for _ in range(100)]
        assert any(not is_reflexive(p) for p in corpus)
        for p in corpus:
            assert is_delzant(p)
            reflexive = is_reflexive(p)
            assert reflexive == weight_sum_holds(p), p
            if not reflexive:
                continue
            assert interior_lattice_points(p) == [(0,) * p.dim], p
            assert tuple(sum(c) for c in zip(*p.vertices)) == (0,) * p.dim, p
            for f, inc in enumerate(p.facet_vertex_incidence):
                for v in inc:
                    alpha, t_max = edge_out_of_facet(p, f, p.vertices[v])
                    assert dot(alpha, p.halfspaces[f].normal) == 1
                    assert isinstance(t_max, int) and t_max > 0


def test_ac7_dh_properties(atlas):
    with criterion("AC7", "DH concave on 500 samples per class, 2+s on the minimal facet, tall, fixed points in {0,m,2m}"):
        rng = seeded(7)
        for i in atlas.delzant_subset:
            p = atlas.polygons[i]
            for c in atlas.reports[i].classes:
                assert c.isolated_fixed_points in (0, c.m, 2 * c.m)
                for q in c.realizing_quadruples:
                    f = dh_function(q)
                    for v in p.vertices:
                        assert dh_eval(f, v) > 0
                    for v in p.facet_vertex_incidence[q.facet]:
                        assert dh_eval(f, p.vertices[v]) == 2 + q.s
                f = c.dh
                for _ in range(500):
                    a = random_interior_point(rng, p)
                    b = random_interior_point(rng, p)
                    mid = tuple((x + y) / 2 for x, y in zip(a, b))
                    assert 2 * dh_eval(f, mid) >= dh_eval(f, a) + dh_eval(f, b)


def test_ac8_round_trips(capsys, tmp_path):
    with criterion("AC8", "100 random dual-description round trips; CLI documents round-trip byte-identically"):
        rng = seeded(8)
        for n in range(100):
            p, _ = random_full_dim_points(rng, 2 + n % 2)
            q = from_halfspaces(p.halfspaces)
            assert q == p and q.vertices == p.vertices
            assert polytope_from_document(polytope_to_document(p)) == p
        for n in range(10):
            p = random_delzant(rng) if n % 2 else random_full_dim_points(rng, 2 + n % 3 // 2)[0]
            src = tmp_path / f"in{n}.json"
            src.write_text(json.dumps(polytope_to_document(p)))
            assert main(["hull", str(src)]) == 0
            first = capsys.readouterr().out
            again = tmp_path / f"again{n}.json"
            again.write_text(first)
            assert main(["vertices", str(again)]) == 0
            second = capsys.readouterr().out
            assert first == second
            assert polytope_from_document(json.loads(first)) == p
