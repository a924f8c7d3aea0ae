from itertools import combinations

from arrangements import (
    boolean,
    crossed_pairs,
    empty,
    generic_hyperplanes,
    mixed,
    points_cp1,
    skew_lines,
)
from projarr import build_poset, is_c_arrangement, minimal_dependent_sets, poset_isomorphic, verify_eta
from projarr.poset import set_defect

ALL_FIXTURES = [
    empty(2),
    points_cp1(3),
    points_cp1(5),
    boolean(2),
    boolean(3),
    generic_hyperplanes(2, 4),
    skew_lines(2),
    skew_lines(3),
    crossed_pairs(),
    mixed(),
]


def test_poset_shapes():
    p = build_poset(points_cp1(3))
    assert p.d == [1, 0, 0, 0, -1]
    p = build_poset(skew_lines(2))
    assert p.d == [3, 1, 1, -1]
    p = build_poset(crossed_pairs())
    assert p.d == [3, 1, 1, 1, 1, 0, 0, -1]
    p = build_poset(boolean(2))
    assert p.d == [2, 1, 1, 1, 0, 0, 0, -1]


def test_top_is_first_and_maximal():
    for arr in ALL_FIXTURES:
        p = build_poset(arr)
        assert p.top == 0 and p.d[0] == arr.n
        assert all(p.leq[i][0] for i in range(len(p.elements)))


def test_leq_is_a_partial_order():
    for arr in ALL_FIXTURES:
        p = build_poset(arr)
        m = len(p.elements)
        for i in range(m):
            assert p.leq[i][i]
            for j in range(m):
                if i != j and p.leq[i][j]:
                    assert not p.leq[j][i]
                for k in range(m):
                    if p.leq[i][j] and p.leq[j][k]:
                        assert p.leq[i][k]


def test_meet_is_greatest_lower_bound():
    for arr in ALL_FIXTURES:
        p = build_poset(arr)
        m = len(p.elements)
        for i in range(m):
            for j in range(m):
                w = p.meet[i][j]
                assert p.leq[w][i] and p.leq[w][j]
                for k in range(m):
                    if p.leq[k][i] and p.leq[k][j]:
                        assert p.leq[k][w]


def test_covers_of_points_fixture():
    p = build_poset(points_cp1(3))
    covers = set(p.covers())
    # 0 < each point < V
    assert covers == {(4, 1), (4, 2), (4, 3), (1, 0), (2, 0), (3, 0)}


def test_minimal_dependent_sets_points():
    arr = points_cp1(4)
    deps = minimal_dependent_sets(arr)
    # pairs of points are independent; every triple is minimally dependent
    assert sorted(d.indices for d in deps) == sorted(combinations(range(4), 3))
    assert all(d.defect == 1 for d in deps)


def test_minimal_dependent_sets_boolean_empty():
    assert minimal_dependent_sets(boolean(2)) == []
    assert minimal_dependent_sets(boolean(3)) == []


def test_minimal_dependent_sets_skew_lines():
    assert minimal_dependent_sets(skew_lines(2)) == []
    deps = minimal_dependent_sets(skew_lines(3))
    assert [d.indices for d in deps] == [(0, 1, 2)]


def test_set_defect():
    arr = points_cp1(3)
    p = build_poset(arr)
    assert set_defect(p, (0, 1)) == 0
    assert set_defect(p, (0, 1, 2)) == 1


def test_is_c_arrangement():
    assert is_c_arrangement(points_cp1(3), 1)
    assert is_c_arrangement(boolean(3), 1)
    assert is_c_arrangement(skew_lines(2), 2)
    assert is_c_arrangement(skew_lines(3), 2)
    assert not is_c_arrangement(skew_lines(2), 3)
    assert not is_c_arrangement(mixed(), 1)  # members of unequal codimension
    # crossed pairs: lines have codim 2 but crossing points codim 3
    assert not is_c_arrangement(crossed_pairs(), 2)


def test_poset_isomorphic_positive_and_negative():
    p = build_poset(skew_lines(2))
    q = build_poset(
        # the same combinatorics in different coordinates
        type(skew_lines(2))(
            4,
            (
                skew_lines(3).subspaces[2],
                skew_lines(2).subspaces[1],
            ),
        )
    )
    assert poset_isomorphic(p, q)
    assert not poset_isomorphic(p, build_poset(skew_lines(3)))
    assert not poset_isomorphic(p, build_poset(mixed()))


def test_verify_eta_across_seeds():
    for arr in [points_cp1(3), boolean(2), skew_lines(2), crossed_pairs(), mixed()]:
        for seed in range(3):
            report = verify_eta(arr, seed)
            assert report.passed, report.detail
