import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from castelpoly.errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptyInput,
    NotFullDimensional,
)
from castelpoly.exact_linalg import IntMatrix, solve
from castelpoly.geometry import build_polytope

from conftest import (
    nonspanning_dim4,
    reflexive_simplex_3,
    spanning_non_idp_family,
    standard_simplex,
    unit_cube,
    unit_square,
)


def test_build_standard_simplex_dim2():
    p = standard_simplex(2)
    assert len(p.vertices) == 3
    assert len(p.facets) == 3
    ineqs = {(f.normal, f.offset) for f in p.facets}
    assert ineqs == {((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)}


def test_build_nonspanning_dim4_all_vertices():
    p = nonspanning_dim4()
    assert p.dim == 4
    assert len(p.vertices) == 6
    assert not p.had_nonvertex_input


def test_build_discards_midpoint():
    p = build_polytope([(0,), (1,), (2,)])
    assert p.vertices == ((0,), (2,))
    assert p.discarded_points == ((1,),)
    assert p.had_nonvertex_input


def test_build_errors():
    with pytest.raises(EmptyInput):
        build_polytope([])
    with pytest.raises(NotFullDimensional):
        build_polytope([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(NotFullDimensional):
        build_polytope([(3, 3), (3, 3)])
    with pytest.raises(DimensionMismatch):
        build_polytope([(0, 0), (1,)])


def test_every_vertex_on_every_facet_weakly(square):
    for f in square.facets:
        assert all(f.value(v) <= f.offset for v in square.vertices)
        on = [v for v in square.vertices if f.value(v) == f.offset]
        assert len(on) >= square.dim


def test_contains_modes(square):
    assert square.contains((Fraction(1, 2), Fraction(1, 2)), "interior")
    assert not square.contains((0, Fraction(1, 2)), "interior")
    assert square.contains((0, Fraction(1, 2)), "closed")
    p3 = standard_simplex(3)
    assert not p3.contains((1, 1, 1), "closed")
    with pytest.raises(DimensionMismatch):
        square.contains((0, 0, 0))


def test_lattice_points_square(square):
    assert len(square.lattice_points(1)) == 4
    assert len(square.lattice_points(2)) == 9
    assert square.lattice_count(2) == 9


def test_lattice_points_nonspanning_dim4():
    p = nonspanning_dim4()
    assert p.lattice_points(1) == frozenset(p.vertices)


def test_lattice_points_family_a1():
    p = spanning_non_idp_family(1)
    assert p.lattice_points(1) == frozenset(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 2, 3), (0, 0, -1)]
    )


def test_interior_points_simplex():
    p = standard_simplex(2)
    assert p.interior_lattice_points(2) == frozenset()
    assert p.interior_lattice_points(3) == frozenset([(1, 1)])
    assert p.interior_lattice_count(3) == 1


def test_interior_point_reflexive_simplex():
    p = reflexive_simplex_3()
    assert p.interior_lattice_points(1) == frozenset([(0, 0, 0)])


def test_budget_exceeded():
    p = unit_cube(3)
    with pytest.raises(BudgetExceeded):
        p.lattice_points(100, budget=10)


def test_python_scan_agrees_with_numpy(monkeypatch):
    p = build_polytope([(0, 0), (3, 1), (1, 4), (-2, -1)])
    fast = {k: p.lattice_points(k) for k in (1, 2, 3)}
    q = build_polytope([(0, 0), (3, 1), (1, 4), (-2, -1)])
    monkeypatch.setattr(type(q), "_numpy_safe", lambda self, k, los, his: False)
    for k in (1, 2, 3):
        assert q.lattice_points(k) == fast[k]
        assert q.interior_lattice_count(k) == p.interior_lattice_count(k)


def test_edges_square_and_simplex(square):
    assert len(square.edges()) == 4
    assert len(standard_simplex(3).edges()) == 6


def brute_force_edges(p):
    """Oracle: a pair is an edge iff some facet subset cuts out exactly it.

    Faces of a polytope are intersections with facet hyperplanes; a face whose
    vertex set is exactly a pair is a segment, i.e. an edge.
    """
    out = set()
    facets = p.facets
    for r in range(1, len(facets) + 1):
        for sub in itertools.combinations(facets, r):
            on = [
                v
                for v in p.vertices
                if all(f.value(v) == f.offset for f in sub)
            ]
            if len(on) == 2:
                out.add(tuple(sorted(on)))
    return out


def test_edges_against_face_oracle():
    for p in (nonspanning_dim4(), unit_cube(3), reflexive_simplex_3()):
        got = {tuple(sorted(e)) for e in p.edges()}
        assert got == brute_force_edges(p)


def test_is_smooth():
    assert standard_simplex(4).is_smooth()
    assert unit_cube(3).is_smooth()
    # vertex (0, 1) sees primitive directions (0, -1) and (2, -1): determinant 2
    assert not build_polytope([(0, 0), (2, 0), (0, 1)]).is_smooth()


def membership_oracle(p, x):
    """Exact convex-combination feasibility via Caratheodory: x is in the hull
    iff some affinely independent vertex subset of size n+1 carries it with
    nonnegative barycentric coordinates."""
    n = p.dim
    for sub in itertools.combinations(p.vertices, n + 1):
        cols = [list(v) + [1] for v in sub]
        a = IntMatrix.from_rows(list(map(list, zip(*cols))))
        lam = solve(a, list(x) + [1])
        if lam is not None and all(c >= 0 for c in lam):
            # solve() may return a least-structure solution for singular
            # systems; re-verify the combination to be safe.
            for i in range(n):
                assert sum(l * v[i] for l, v in zip(lam, sub)) == x[i]
            return True
    return False


@pytest.mark.parametrize(
    "maker", [unit_square, lambda: standard_simplex(2), reflexive_simplex_3]
)
def test_lattice_points_match_solve_oracle(maker):
    p = maker()
    for k in (1, 2):
        pts = p.lattice_points(k)
        los = [min(k * v[i] for v in p.vertices) for i in range(p.dim)]
        his = [max(k * v[i] for v in p.vertices) for i in range(p.dim)]
        for x in itertools.product(*[range(lo, hi + 1) for lo, hi in zip(los, his)]):
            # membership in kP <=> x/k in P
            frac = tuple(Fraction(c, k) for c in x)
            assert (x in pts) == membership_oracle(p, frac)


point_clouds = st.integers(2, 3).flatmap(
    lambda n: st.lists(
        st.tuples(*[st.integers(-3, 3)] * n), min_size=n + 1, max_size=n + 4
    )
)


@settings(max_examples=60, deadline=None)
@given(point_clouds)
def test_random_polytope_invariants(cloud):
    try:
        p = build_polytope(cloud)
    except NotFullDimensional:
        return
    n = p.dim
    # facet validity: all vertices weakly inside, contact sets span hyperplanes
    for f in p.facets:
        vals = [f.value(v) for v in p.vertices]
        assert all(v <= f.offset for v in vals)
        assert vals.count(f.offset) >= n
    assert len(p.lattice_points(1)) >= n + 1
    counts = [p.lattice_count(k) for k in (1, 2, 3)]
    assert counts == sorted(counts)
    inter = p.interior_lattice_points(2)
    closed = p.lattice_points(2)
    assert inter <= closed
    boundary = {x for x in closed if not all(f.value(x) < 2 * f.offset for f in p.facets)}
    if boundary:
        assert inter < closed
    # vertices are lattice points of the first dilate
    assert frozenset(p.vertices) <= p.lattice_points(1)
