"""Acceptance checks: one test per headline guarantee of the package.

Each test prints a single PASS line (visible with ``pytest -s``) so the
suite doubles as a checklist.  Expected numbers are either classical
(binomial identities, products of small factorials) or frozen from the
independent brute-force oracle in ``laurent.period_term_direct``.
"""

import math
import random
import time

from conifold import (
    Diagonal,
    FacetKind,
    NodalProfile,
    SmoothingMode,
    check_regularity,
    classify_facet,
    convex_hull,
    enumerate_small_resolutions,
    exceptional_relation_matrix,
    find_recurrence,
    friedman_smoothable,
    from_fan_polytope,
    nodal_profile,
    normalized_volume,
    period_sequence,
    period_term_direct,
    polar_dual,
    transition_invariants,
    verify_recurrence,
)
from conifold.linalg import rank, rank_by_minors

ALL_STEMS = ("p3", "octahedron", "p2xp1", "nodal_01", "nodal_02", "nodal_03")


def test_p3_periods_match_oracle(corpus):
    start = time.perf_counter()
    w = from_fan_polytope(corpus["p3"])
    seq = period_sequence(w, 12)
    direct = [period_term_direct(w, d) for d in range(13)]
    assert list(seq.terms) == direct
    assert seq.terms[4] == 24
    assert seq.terms[8] == 2520
    assert seq.terms[12] == math.factorial(12) // math.factorial(3) ** 4
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    print(f"\nPASS: projective-space periods equal the brute-force oracle "
          f"through degree 12 in {elapsed:.3f}s")


def test_periods_iterative_equals_direct_everywhere(corpus, golden):
    start = time.perf_counter()
    for stem in ALL_STEMS:
        w = from_fan_polytope(corpus[stem])
        pruned = period_sequence(w, 10, prune=True)
        unpruned = period_sequence(w, 10, prune=False)
        direct = [period_term_direct(w, d) for d in range(11)]
        assert list(pruned.terms) == direct, stem
        assert pruned.terms == unpruned.terms, stem
        assert list(pruned.terms) == golden["polytopes"][stem]["periods"], stem
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"took {elapsed:.2f}s"
    print(f"\nPASS: iterative, pruned, and direct periods agree on all "
          f"{len(ALL_STEMS)} bundled polytopes through degree 10 "
          f"in {elapsed:.2f}s")


def _random_unimodular(rng):
    m = [[int(i == j) for j in range(3)] for i in range(3)]
    for _ in range(8):
        i, j = rng.sample(range(3), 2)
        op = rng.randrange(4)
        if op == 3:
            m[i], m[j] = m[j], m[i]
        elif op == 2:
            m[i] = [-a for a in m[i]]
        else:
            c = rng.choice((-3, -2, -1, 1, 2, 3))
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


def _transform(m, p):
    moved = [
        tuple(sum(m[r][c] * v[c] for c in range(3)) for r in range(3))
        for v in p.vertices
    ]
    return convex_hull(moved)


def _kind_counts(p):
    return sorted(classify_facet(f).kind.value for f in p.facets)


def test_facet_classification_is_unimodular_invariant(corpus):
    square_poly = corpus["nodal_01"]
    tri_poly = corpus["p3"]

    squares = [f for f in square_poly.facets if len(f.vertices) == 4]
    assert len(squares) == 1
    cls = classify_facet(squares[0])
    assert cls.kind is FacetKind.CONIFOLD_SQUARE
    v1, v2, v3, v4 = cls.cycle
    assert tuple(a + b for a, b in zip(v1, v3)) == tuple(
        a + b for a, b in zip(v2, v4)
    )
    assert all(
        classify_facet(f).kind is FacetKind.SMOOTH_TRIANGLE
        for f in tri_poly.facets
    )

    rng = random.Random(20260816)
    for poly in (square_poly, tri_poly):
        reference = _kind_counts(poly)
        for _ in range(100):
            assert _kind_counts(_transform(_random_unimodular(rng), poly)) == reference
    print("\nPASS: facet classification fixed under 100 random unimodular "
          "changes of lattice basis per polytope")


def test_small_resolution_census(corpus, nodal_stems):
    for stem in nodal_stems:
        p = corpus[stem]
        profile = nodal_profile(p)
        rep = transition_invariants(p)
        res = enumerate_small_resolutions(p, profile)
        assert len(res) == 2 ** profile.node_count
        assert len({len(r.triangulation) for r in res}) == 1
        assert len(res[0].triangulation) == rep.e_res
        assert rep.e_sm == rep.e_res - 2 * rep.node_count
        assert len({r.diagonals for r in res}) == len(res)
        assert all(
            all(d in (Diagonal.DIAG13, Diagonal.DIAG24) for d in r.diagonals)
            for r in res
        )
    print("\nPASS: every nodal polytope has exactly 2^N small resolutions "
          "with a shared triangle count and e_sm = e_res - 2N")


def test_each_nodal_polytope_has_a_projective_resolution(corpus, nodal_stems, golden):
    for stem in nodal_stems:
        p = corpus[stem]
        res = enumerate_small_resolutions(p, nodal_profile(p), cap=64)
        checked = check_regularity(p, res)
        regular = sum(1 for r in checked if r.regular)
        assert regular >= 1, stem
        assert regular == golden["polytopes"][stem]["regular_count"], stem
    print("\nPASS: at least one small resolution per nodal polytope is "
          "projective (regular triangulation)")


def test_topological_bookkeeping(corpus):
    for stem in ALL_STEMS:
        p = corpus[stem]
        rep = transition_invariants(p)
        assert rep.e_sm == 2 + 2 * rep.b2_sm - rep.b3_sm, stem
        assert 0 <= rep.relation_rank <= rep.node_count, stem
        assert (rep.relation_rank == 0) == (rep.node_count == 0), stem
        rows = exceptional_relation_matrix(p, nodal_profile(p))
        if rows:
            assert rank(rows) == rank_by_minors(rows) == rep.relation_rank, stem
    print("\nPASS: Euler/Betti bookkeeping consistent on all bundled "
          "polytopes, with the relation rank confirmed two ways")


def test_smoothability_criteria(corpus, nodal_stems):
    for stem in ALL_STEMS:
        p = corpus[stem]
        ok, _ = friedman_smoothable(p, nodal_profile(p), SmoothingMode.FANO)
        assert ok, stem

    for stem in ("nodal_01", "nodal_02"):
        p = corpus[stem]
        profile = nodal_profile(p)
        rows = exceptional_relation_matrix(p, profile)
        assert rank(rows) == profile.node_count
        ok, cert = friedman_smoothable(p, profile, SmoothingMode.CY)
        assert not ok and cert is None, stem

    p = corpus["nodal_01"]
    pair = nodal_profile(p).squares[0]
    doubled = NodalProfile(node_count=2, squares=(pair, pair))
    ok, lam = friedman_smoothable(p, doubled, SmoothingMode.CY)
    rows = exceptional_relation_matrix(p, doubled)
    assert ok and len(lam) == 2 and all(x != 0 for x in lam)
    assert all(
        sum(lam[i] * rows[i][j] for i in range(2)) == 0
        for j in range(len(p.vertices))
    )

    p = corpus["nodal_03"]
    profile = nodal_profile(p)
    ok, lam = friedman_smoothable(p, profile, SmoothingMode.CY)
    rows = exceptional_relation_matrix(p, profile)
    assert ok and len(lam) == 6 and all(x != 0 for x in lam)
    assert all(
        sum(lam[i] * rows[i][j] for i in range(6)) == 0
        for j in range(len(p.vertices))
    )
    print("\nPASS: Fano smoothability always holds; Calabi-Yau criterion "
          "rejects full-rank relation matrices and certifies degenerate ones")


def test_recurrence_guesser(corpus, golden):
    start = time.perf_counter()
    doubling = [2 ** d for d in range(20)]
    rec = find_recurrence(doubling, rmax=2, degree_max=1)
    assert rec is not None and (rec.order, rec.degree) == (1, 0)
    assert rec.coeffs == ((-2,), (1,))

    central = [math.comb(2 * d, d) for d in range(24)]
    rec = find_recurrence(central, rmax=2, degree_max=2)
    assert rec is not None and (rec.order, rec.degree) == (1, 1)
    assert rec.coeffs == ((-2, -4), (1, 1))

    w = from_fan_polytope(corpus["p3"])
    seq = period_sequence(w, 40)
    rec = find_recurrence(seq, rmax=4, degree_max=3, holdout=5)
    assert rec is not None
    frozen = golden["p3_recurrence"]
    assert rec.order == frozen["order"] and rec.degree == frozen["degree"]
    assert [[str(c) for c in poly] for poly in rec.coeffs] == frozen["coeffs"]
    fresh = period_sequence(w, 60)
    assert verify_recurrence(rec, fresh)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"took {elapsed:.2f}s"
    print(f"\nPASS: recurrence search recovers doubling, central-binomial, "
          f"and the degree-40 period recurrence (re-verified to degree 60) "
          f"in {elapsed:.2f}s")


def test_anticanonical_degrees(corpus):
    assert normalized_volume(polar_dual(corpus["p3"])) == 64
    assert normalized_volume(polar_dual(corpus["octahedron"])) == 48
    print("\nPASS: anticanonical degrees 64 and 48 recovered exactly from "
          "dual volumes")


def test_cli_is_deterministic_on_corpus(cli, corpus_paths):
    for stem in ALL_STEMS:
        _, first, _ = cli("transition", corpus_paths[stem])
        _, second, _ = cli("transition", corpus_paths[stem])
        assert first == second, stem
    for stem in ("p3", "nodal_03"):
        _, first, _ = cli("periods", corpus_paths[stem], "--dmax", 10)
        _, second, _ = cli("periods", corpus_paths[stem], "--dmax", 10)
        assert first == second, stem
    print("\nPASS: repeated command-line runs are byte-identical across "
          "the bundled corpus")
