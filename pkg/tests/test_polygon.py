from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from interlace.polygon import (
    InvalidParameters,
    Parameters,
    Polygon,
    from_shape,
    interlaces,
    is_r_stable,
    rotate,
    shape,
)


def poly(n, *pts):
    return Polygon.of(pts, n)


@st.composite
def polygons(draw, min_k=1):
    n = draw(st.integers(2, 16))
    k = draw(st.integers(min_k, max(min_k, n // 2)))
    pts = draw(st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True))
    return Polygon.of(pts, n)


@st.composite
def polygon_pairs(draw):
    n = draw(st.integers(2, 14))
    k = draw(st.integers(1, n // 2))
    a = draw(st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True))
    b = draw(st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True))
    return Polygon.of(a, n), Polygon.of(b, n)


def arcs_oracle(P, Q):
    """Each open arc between cyclically consecutive points of P holds exactly one Q point."""
    if set(P.points) & set(Q.points):
        return False
    n, pts = P.n, P.points
    for a, b in zip(pts, pts[1:] + (pts[0] + n,)):
        inside = sum(1 for q in Q.points for x in (q, q + n) if a < x < b)
        if inside != 1:
            return False
    return True


class TestParameters:
    def test_valid(self):
        assert Parameters(6, 2, 3).astuple() == (6, 2, 3)

    @pytest.mark.parametrize("n,k,r", [(5, 2, 1), (5, 2, 3), (0, 1, 2), (4, 0, 2)])
    def test_invalid(self, n, k, r):
        with pytest.raises(InvalidParameters):
            Parameters(n, k, r)


class TestPolygon:
    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            Polygon((3, 1), 5)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Polygon((1, 6), 5)


@pytest.mark.parametrize(
    "P,r,expected",
    [(poly(6, 1, 4), 3, True), (poly(6, 1, 2), 2, False), (poly(7, 1, 3, 5), 2, True)],
)
def test_is_r_stable_examples(P, r, expected):
    assert is_r_stable(P, r) is expected


@pytest.mark.parametrize(
    "P,gaps",
    [(poly(5, 3, 5), (2, 3)), (poly(6, 1, 4), (3, 3)), (poly(12, 4, 6, 9, 12), (2, 3, 3, 4))],
)
def test_shape_examples(P, gaps):
    assert shape(P) == gaps


@pytest.mark.parametrize(
    "P,i,Q",
    [(poly(5, 2, 4), 1, poly(5, 3, 5)), (poly(6, 3, 6), 4, poly(6, 1, 4)), (poly(9, 2, 7), 0, poly(9, 2, 7))],
)
def test_rotate_examples(P, i, Q):
    assert rotate(P, i) == Q


@pytest.mark.parametrize(
    "P,Q,expected",
    [
        (poly(6, 1, 3), poly(6, 2, 5), True),
        (poly(6, 1, 4), poly(6, 2, 3), False),
        (poly(6, 1, 4), poly(6, 1, 3), False),
    ],
)
def test_interlaces_examples(P, Q, expected):
    assert interlaces(P, Q) is expected


@pytest.mark.parametrize(
    "gaps,anchor,P",
    [((2, 3), 3, poly(5, 3, 5)), ((3, 3), 1, poly(6, 1, 4)), ((2, 3, 3, 4), 4, poly(12, 4, 6, 9, 12))],
)
def test_from_shape_examples(gaps, anchor, P):
    assert from_shape(gaps, anchor) == P


def test_from_shape_rejects_bad_sum():
    with pytest.raises(ValueError):
        from_shape((2, 2), 1, n=5)


def test_rotate_never_emits_zero():
    assert rotate(poly(6, 2, 5), 1).points == (3, 6)


@given(polygons(), st.integers(0, 40), st.integers(0, 40))
def test_rotation_composes(P, i, j):
    assert rotate(rotate(P, i), j) == rotate(P, (i + j) % P.n)
    assert rotate(P, P.n) == P


@given(polygons(), st.integers(0, 30))
def test_rotation_shifts_shape_cyclically(P, i):
    d, e = shape(P), shape(rotate(P, i))
    assert any(e == d[s:] + d[:s] for s in range(len(d)))
    assert sum(e) == P.n


@given(polygons(), st.integers(2, 5))
def test_stability_is_gap_bound(P, r):
    assert is_r_stable(P, r) == all(g >= r for g in shape(P))


@given(polygons())
def test_from_shape_inverts_shape(P):
    assert from_shape(shape(P), P.points[0], P.n) == P


@given(polygon_pairs(), st.integers(0, 20))
def test_interlace_symmetry_and_equivariance(pair, i):
    P, Q = pair
    assert interlaces(P, Q) == interlaces(Q, P)
    assert not interlaces(P, P)
    if interlaces(P, Q):
        assert not set(P.points) & set(Q.points)
    assert interlaces(P, Q) == interlaces(rotate(P, i), rotate(Q, i))


def test_interlaces_matches_arc_oracle_exhaustively():
    for n in range(2, 9):
        for k in range(1, 4):
            subsets = [Polygon(c, n) for c in combinations(range(1, n + 1), k)]
            for P in subsets:
                for Q in subsets:
                    assert interlaces(P, Q) == arcs_oracle(P, Q), (P, Q)
