from itertools import combinations

import pytest

from interlace.certify import maximal_independent_sets
from interlace.compression import (
    NotIndependent,
    f_power,
    f_shift,
    independence_formula,
    partition_independent_set,
    random_independent_sets,
    star,
    verify_claims,
)
from interlace.graph import build_graph, enumerate_stable_polygons, per_point_count
from interlace.polygon import Parameters, Polygon, interlaces, is_r_stable

from conftest import valid_params


def poly(n, *pts):
    return Polygon.of(pts, n)


def test_f_shift_examples():
    assert f_shift(poly(7, 2, 5)) == poly(7, 1, 4)
    assert f_shift(poly(7, 1, 4)) == poly(7, 1, 3)
    P = poly(7, 1, 4)
    assert is_r_stable(P, 3)
    assert is_r_stable(f_shift(P), 2) and not is_r_stable(f_shift(P), 3)


def test_f_shift_collapses():
    assert f_shift(poly(7, 1, 2, 5)).points == (1, 4)


def test_f_shift_ambient():
    assert f_shift(poly(7, 3, 7), ambient=6) == poly(6, 2, 6)


def test_f_power_examples():
    P = poly(8, 3, 6)
    assert f_power(P, 0) == P
    assert f_power(poly(8, 1, 5), 2) == poly(8, 1, 3)
    assert f_power(poly(8, 3, 6), 2) == poly(8, 1, 4)


def test_collapse_characterisation():
    for n in range(2, 11):
        for k in range(1, 4):
            polys = [Polygon(c, n) for c in combinations(range(1, n + 1), k)]
            for P, Q in combinations(polys, 2):
                if f_shift(P) == f_shift(Q):
                    a, b = (P, Q) if P.points[0] <= Q.points[0] else (Q, P)
                    assert 1 in a and 2 in b
                    assert a.points[1:] == b.points[1:]


def test_partition_examples():
    p = Parameters(6, 2, 2)
    I = {poly(6, 2, 6), poly(6, 3, 6), poly(6, 4, 6)}
    part = partition_independent_set(I, p)
    assert part.straddle[1] == {poly(6, 2, 6)}
    assert part.remainder == {poly(6, 3, 6), poly(6, 4, 6)}
    assert not part.interior and not part.corner

    single = partition_independent_set({poly(6, 1, 4)}, p)
    assert single.remainder == {poly(6, 1, 4)} and not single.interior

    empty = partition_independent_set(set(), p)
    assert all(not s for s in empty.parts().values())


def test_partition_rejects_interlacing_pair():
    with pytest.raises(NotIndependent):
        partition_independent_set({poly(6, 1, 3), poly(6, 2, 5)}, Parameters(6, 2, 2))


def test_partition_interior_pairs_with_remainder():
    p = Parameters(8, 2, 2)
    part = partition_independent_set({poly(8, 1, 5), poly(8, 2, 5)}, p)
    assert part.interior == {poly(8, 1, 5)}
    assert part.remainder == {poly(8, 2, 5)}


@pytest.mark.parametrize("t", [(6, 2, 2), (8, 2, 3), (8, 3, 2), (9, 3, 2), (10, 2, 4)])
def test_partition_covers_disjointly(t):
    p = Parameters(*t)
    for I in maximal_independent_sets(build_graph(p)):
        parts = list(partition_independent_set(I, p).parts().values())
        assert sum(len(s) for s in parts) == len(I)
        assert set().union(*parts) == I


@pytest.mark.parametrize("t", [(6, 2, 2), (8, 2, 3), (8, 3, 2), (10, 3, 3), (9, 2, 3)])
def test_claims_on_all_maximal_sets(t):
    p = Parameters(*t)
    for I in maximal_independent_sets(build_graph(p)):
        reports = verify_claims(I, p)
        assert [r.claim_id for r in reports] == [1, 2, 3, 4, 5, 6]
        assert all(r.holds and r.counterexample is None for r in reports), reports


def test_claims_vacuous_on_empty():
    assert all(r.holds for r in verify_claims(set(), Parameters(6, 2, 2)))


def test_claims_on_random_sets():
    p = Parameters(11, 3, 2)
    for I in random_independent_sets(enumerate_stable_polygons(p), 40, seed=3):
        assert all(r.holds for r in verify_claims(I, p))


def test_random_sets_are_seeded_and_independent():
    verts = enumerate_stable_polygons(Parameters(10, 3, 2))
    a = random_independent_sets(verts, 10, seed=5)
    assert a == random_independent_sets(verts, 10, seed=5)
    for I in a:
        assert not any(interlaces(P, Q) for P, Q in combinations(I, 2))


@pytest.mark.parametrize("t,alpha", [((6, 2, 2), 3), ((9, 3, 3), 1), ((8, 3, 2), 6)])
def test_independence_formula(t, alpha):
    assert independence_formula(Parameters(*t)) == alpha


def test_star_is_extremal_witness():
    for p in valid_params(13):
        verts = enumerate_stable_polygons(p)
        S = star(verts, 1)
        assert len(S) == per_point_count(p) == independence_formula(p)
        assert not any(interlaces(P, Q) for P, Q in combinations(S, 2))
