"""Conifold squares, small resolutions, regularity, transition reports."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conifold import linalg
from conifold.errors import (
    BudgetExceeded,
    DimensionMismatch,
    NotReflexive,
    NotReflexiveFacet,
    WorseThanNodal,
)
from conifold.lattice import convex_hull
from conifold.nodal import (
    LOCAL_MODEL_SQUARE,
    FacetKind,
    NodalProfile,
    SmoothingMode,
    check_regularity,
    classify_facet,
    enumerate_small_resolutions,
    exceptional_relation_matrix,
    exceptional_relation_rank,
    friedman_smoothable,
    is_regular_triangulation,
    nodal_profile,
    report_json_dict,
    transition_invariants,
)
from strategies import unimodular_matrices

PYRAMID = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1), (-1, -1, -2)]
CUBE = [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]


def square_facets(p):
    return [f for f in p.facets if len(f.vertices) == 4]


# ------------------------------------------------------- classification


def test_local_model_square_detected():
    p = convex_hull(PYRAMID)
    squares = square_facets(p)
    assert len(squares) == 1
    cls = classify_facet(squares[0])
    assert cls.kind is FacetKind.CONIFOLD_SQUARE
    v1, v2, v3, v4 = cls.cycle
    assert set(cls.cycle) == set(LOCAL_MODEL_SQUARE)
    # opposite corners of the cycle sum equally: an empty parallelogram
    assert tuple(a + b for a, b in zip(v1, v3)) == tuple(
        a + b for a, b in zip(v2, v4)
    )


def test_smooth_triangles_detected():
    p = convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])
    for f in p.facets:
        assert classify_facet(f).kind is FacetKind.SMOOTH_TRIANGLE


def test_neither_kind_is_other():
    p = convex_hull(CUBE)
    for f in p.facets:
        assert classify_facet(f).kind is FacetKind.OTHER


def test_classify_requires_level_minus_one():
    p = convex_hull([(2 * x, 2 * y, 2 * z) for x, y, z in CUBE])
    with pytest.raises(NotReflexiveFacet):
        classify_facet(p.facets[0])


@given(unimodular_matrices(dim=3))
@settings(max_examples=100, deadline=None)
def test_classification_is_lattice_invariant(m):
    p = convex_hull(PYRAMID).transform(m)
    kinds = sorted(classify_facet(f).kind.name for f in p.facets)
    assert kinds.count("CONIFOLD_SQUARE") == 1
    assert kinds.count("SMOOTH_TRIANGLE") == len(p.facets) - 1


def _square_to_model_map(cycle):
    """Solve for the lattice isomorphism sending the square's cone onto
    the local model cone; an independent check on classify_facet."""
    v1, v2, v3, v4 = cycle
    t1, t2, t3, t4 = (0, 0, 1), (1, 0, 1), (1, 1, 1), (0, 1, 1)
    bt = [[Fraction(v[r]) for v in (v1, v2, v4)] for r in range(3)]
    bt = [[bt[c][r] for c in range(3)] for r in range(3)]  # transpose
    d = linalg.det([row[:] for row in bt])
    assert d != 0
    m = []
    for i in range(3):
        row = []
        ti = (t1, t2, t4)
        target = [ti[0][i], ti[1][i], ti[2][i]]
        for j in range(3):
            a = [r[:] for r in bt]
            for r in range(3):
                a[r][j] = Fraction(target[r])
            row.append(linalg.det(a) / d)
        m.append(row)
    assert all(x.denominator == 1 for row in m for x in row)
    mi = [[int(x) for x in row] for row in m]
    assert abs(linalg.det([row[:] for row in mi])) == 1
    image = tuple(
        tuple(sum(mi[r][c] * v[c] for c in range(3)) for r in range(3))
        for v in (v1, v2, v3, v4)
    )
    assert image == (t1, t2, t3, t4)


def test_every_corpus_square_cone_is_the_local_model(corpus, golden):
    for stem, p in corpus.items():
        if golden["polytopes"][stem]["N"] == 0:
            continue
        for _, cycle in nodal_profile(p).squares:
            _square_to_model_map(cycle)


# ------------------------------------------------------------ profiles


def test_corpus_profiles_match_golden(corpus, golden):
    for stem, p in corpus.items():
        assert nodal_profile(p).node_count == golden["polytopes"][stem]["N"]


def test_cube_is_worse_than_nodal():
    with pytest.raises(WorseThanNodal) as err:
        nodal_profile(convex_hull(CUBE))
    assert tuple(err.value.facets) == (0, 1, 2, 3, 4, 5)


def test_profile_requires_dimension_three():
    p = convex_hull([(1, 0), (0, 1), (-1, -1)], dim=2)
    with pytest.raises(DimensionMismatch):
        nodal_profile(p)


def test_profile_requires_reflexive():
    p = convex_hull(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 2), (0, 0, -1)]
    )
    with pytest.raises(NotReflexive):
        nodal_profile(p)


# --------------------------------------------------------- resolutions


def test_resolution_count_and_diagonal_strings(corpus, golden):
    for stem, p in corpus.items():
        g = golden["polytopes"][stem]
        rs = enumerate_small_resolutions(p, nodal_profile(p))
        assert len(rs) == 2 ** g["N"] == g["resolution_count"]
        strings = [r.diagonal_string() for r in rs]
        assert strings == sorted(strings)
        assert len(set(strings)) == len(strings)
        counts = {len(r.triangulation) for r in rs}
        assert counts == {g["e_res"]}


def test_resolution_triangles_are_unimodular(corpus):
    p = corpus["nodal_03"]
    for res in enumerate_small_resolutions(p, nodal_profile(p)):
        for tri in res.triangulation:
            a, b, c = tri
            assert abs(linalg.det([list(a), list(b), list(c)])) == 1


def test_resolution_budget():
    p = convex_hull(
        [
            (0, 0, 1),
            (1, 0, 1),
            (0, 1, 1),
            (1, 1, 1),
            (-1, -1, -1),
            (0, -1, -1),
            (-1, 0, -1),
            (0, 0, -1),
        ]
    )
    with pytest.raises(BudgetExceeded):
        enumerate_small_resolutions(p, nodal_profile(p), cap=5)


def test_regular_counts_match_golden(corpus, golden):
    for stem, p in corpus.items():
        rs = check_regularity(p, enumerate_small_resolutions(p, nodal_profile(p)))
        assert (
            sum(1 for r in rs if r.regular)
            == golden["polytopes"][stem]["regular_count"]
        )


def test_regularity_threaded_matches_serial(corpus):
    p = corpus["nodal_03"]
    rs = enumerate_small_resolutions(p, nodal_profile(p))
    serial = [r.regular for r in check_regularity(p, rs, threads=1)]
    threaded = [r.regular for r in check_regularity(p, rs, threads=4)]
    assert serial == threaded


def test_face_fan_of_smooth_polytope_is_regular(corpus):
    p = corpus["p3"]
    (only,) = enumerate_small_resolutions(p, nodal_profile(p))
    assert is_regular_triangulation(p, only)


# ------------------------------------------------- relations, friedman


def test_relation_matrix_shape_and_support(corpus, golden):
    for stem, p in corpus.items():
        profile = nodal_profile(p)
        rows = exceptional_relation_matrix(p, profile)
        assert len(rows) == profile.node_count
        for row in rows:
            assert len(row) == len(p.vertices)
            assert sorted(x for x in row if x) == [-1, -1, 1, 1]
            # the row really is a lattice relation among the vertices
            combo = [
                sum(c * v[i] for c, v in zip(row, p.vertices)) for i in range(3)
            ]
            assert combo == [0, 0, 0]


def test_relation_rank_cross_checked_by_minors(corpus, golden):
    for stem, p in corpus.items():
        profile = nodal_profile(p)
        rows = exceptional_relation_matrix(p, profile)
        k = exceptional_relation_rank(p, profile)
        assert k == golden["polytopes"][stem]["k"]
        assert k == linalg.rank_by_minors([list(r) for r in rows])


def test_friedman_fano_mode_always_smoothable(corpus):
    for p in corpus.values():
        ok, note = friedman_smoothable(p, nodal_profile(p), SmoothingMode.FANO)
        assert ok and isinstance(note, str)


def test_friedman_cy_full_rank_profiles(corpus, golden):
    for stem in ("nodal_01", "nodal_02"):
        g = golden["polytopes"][stem]
        assert g["k"] == g["N"]  # these profiles have full relation rank
        ok, cert = friedman_smoothable(
            corpus[stem], nodal_profile(corpus[stem]), SmoothingMode.CY
        )
        assert not ok and cert is None


def test_friedman_cy_certificate(corpus, golden):
    p = corpus["nodal_03"]
    profile = nodal_profile(p)
    ok, cert = friedman_smoothable(p, profile, SmoothingMode.CY)
    assert ok
    assert list(cert) == golden["polytopes"]["nodal_03"]["cy_certificate"]
    assert all(c != 0 for c in cert)
    rows = exceptional_relation_matrix(p, profile)
    for j in range(len(p.vertices)):
        assert sum(cert[i] * rows[i][j] for i in range(len(rows))) == 0


def test_friedman_cy_smooth_polytope(corpus):
    ok, cert = friedman_smoothable(
        corpus["p3"], nodal_profile(corpus["p3"]), SmoothingMode.CY
    )
    assert ok and cert == ()


def test_friedman_cy_proportional_rows_smoothable(corpus):
    # a synthetic profile listing the same square twice produces two
    # proportional relation rows; the left kernel then avoids every
    # coordinate hyperplane and a certificate must come back
    p = corpus["nodal_01"]
    (pair,) = nodal_profile(p).squares
    doubled = NodalProfile(2, (pair, pair))
    ok, cert = friedman_smoothable(p, doubled, SmoothingMode.CY)
    assert ok
    assert len(cert) == 2 and all(c != 0 for c in cert)


# --------------------------------------------------------------- reports


def test_reports_match_golden(corpus, golden):
    for stem, p in corpus.items():
        g = golden["polytopes"][stem]
        rep = transition_invariants(p, mode=SmoothingMode.FANO)
        assert rep.node_count == g["N"]
        assert rep.relation_rank == g["k"]
        assert rep.degree == g["degree"]
        assert rep.e_res == g["e_res"]
        assert rep.e_sm == g["e_sm"]
        assert rep.b2_res == g["b2_res"]
        assert rep.b2_sm == g["b2_sm"]
        assert rep.b3_sm == g["b3_sm"]
        assert rep.smoothable is True


def test_report_bookkeeping_identities(corpus):
    for p in corpus.values():
        rep = transition_invariants(p)
        assert rep.e_sm == rep.e_res - 2 * rep.node_count
        assert rep.e_sm == 2 + 2 * rep.b2_sm - rep.b3_sm
        assert rep.b2_res == len(p.vertices) - 3
        assert 0 <= rep.relation_rank <= rep.node_count
        assert (rep.relation_rank == 0) == (rep.node_count == 0)


def test_report_cy_mode(corpus):
    rep = transition_invariants(corpus["nodal_03"], mode=SmoothingMode.CY)
    assert rep.mode == "cy" and rep.smoothable is True
    rep = transition_invariants(corpus["nodal_01"], mode=SmoothingMode.CY)
    assert rep.smoothable is False


def test_report_json_shape(corpus):
    p = corpus["nodal_01"]
    rs = check_regularity(p, enumerate_small_resolutions(p, nodal_profile(p)))
    payload = report_json_dict(transition_invariants(p), resolutions=rs)
    for key in ("N", "k", "e_res", "e_sm", "b2_res", "b2_sm", "b3_sm",
                "degree", "smoothable", "mode"):
        assert key in payload
    assert payload["N"] == 1
    assert payload["mode"] == "fano"
    assert [r["diagonals"] for r in payload["resolutions"]] == ["0", "1"]
    assert all(isinstance(r["regular"], bool) for r in payload["resolutions"])


@given(unimodular_matrices(dim=3))
@settings(max_examples=50, deadline=None)
def test_report_is_lattice_invariant(m):
    p = convex_hull(PYRAMID)
    q = p.transform(m)
    a = transition_invariants(p)
    b = transition_invariants(q)
    assert (a.node_count, a.relation_rank, a.degree, a.e_sm, a.b2_sm, a.b3_sm) == (
        b.node_count,
        b.relation_rank,
        b.degree,
        b.e_sm,
        b.b2_sm,
        b.b3_sm,
    )
