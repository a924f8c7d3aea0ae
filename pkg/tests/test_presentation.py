from itertools import combinations

import pytest

from arrangements import boolean, mixed, points_cp1, skew_lines
from projarr import (
    build_presentation,
    graded_ranks,
    pi_context,
    pi_image,
    verify_fg_homotopic,
    verify_fk_iso,
    verify_presentation,
)
from projarr.chains import homology
from projarr.linalg import int_matmul
from projarr.poset import build_poset, set_defect
from projarr.presentation import (
    NotCArrangement,
    atomic_complex,
    fk_chain_map,
    gk_chain_map,
    gk_level,
    monomial_mul,
    pi_polynomial,
    poly_mul_monomial,
)

C_FIXTURES = [
    (points_cp1(2), 1),
    (points_cp1(3), 1),
    (points_cp1(5), 1),
    (boolean(2), 1),
    (boolean(3), 1),
    (skew_lines(2), 2),
    (skew_lines(3), 2),
]


def test_monomial_multiplication():
    assert monomial_mul((1, ()), (1, ()), c=3) == (1, (2, ()))
    assert monomial_mul((1, ()), (2, ()), c=3) is None  # x^3 = 0
    assert monomial_mul((0, (1,)), (0, (2,)), c=2) == (1, (0, (1, 2)))
    assert monomial_mul((0, (2,)), (0, (1,)), c=2) == (-1, (0, (1, 2)))
    assert monomial_mul((0, (1,)), (0, (1,)), c=2) is None  # y_1^2 = 0


def test_poly_mul_monomial_signs():
    poly = {(0, (1,)): 1, (0, (3,)): -1}
    out = poly_mul_monomial((0, (2,)), poly, c=2)
    assert out == {(0, (1, 2)): -1, (0, (2, 3)): -1}


def test_presentation_relations_points():
    # 3 points: the single dependent triple passes through the base
    pres = build_presentation(points_cp1(3), 1, 0)
    assert pres.t == 2
    assert list(zip(pres.relation_kinds, pres.relations)) == [
        ("through-base", {(0, (1, 2)): 1}),
        ("x-power", {(1, ()): 1}),
    ]
    # 4 points: the triple avoiding the base contributes an alternating sum
    pres = build_presentation(points_cp1(4), 1, 0)
    sums = [
        rel for rel, kind in zip(pres.relations, pres.relation_kinds)
        if kind == "boundary-sum"
    ]
    assert sums == [{(0, (2, 3)): 1, (0, (1, 3)): -1, (0, (1, 2)): 1}]
    assert sum(k == "through-base" for k in pres.relation_kinds) == 3


def test_presentation_relations_skew3():
    pres = build_presentation(skew_lines(3), 2, 0)
    assert pres.t == 2
    assert list(zip(pres.relation_kinds, pres.relations)) == [
        ("through-base", {(0, (1, 2)): 1}),
        ("x-power", {(2, ()): 1}),
    ]


def test_presentation_requires_c_arrangement():
    with pytest.raises(NotCArrangement):
        build_presentation(mixed(), 1)
    with pytest.raises(NotCArrangement):
        build_presentation(skew_lines(2), 1)


def test_graded_ranks_closed_forms():
    # m points in CP^1, c = 1: ranks (1, m-1)
    for m in (2, 3, 5):
        pres = build_presentation(points_cp1(m), 1, 0)
        assert graded_ranks(pres, 2) == [1, m - 1, 0]
    # skew lines, c = 2: Betti pattern of the engine
    pres = build_presentation(skew_lines(2), 2, 0)
    assert graded_ranks(pres, 6) == [1, 0, 1, 1, 0, 1, 0]
    pres = build_presentation(skew_lines(3), 2, 0)
    assert graded_ranks(pres, 6) == [1, 0, 1, 2, 0, 2, 0]


def test_dependent_monomials_vanish_in_quotient():
    # any dependent index set without the base yields a monomial that dies
    # in the quotient: check rank drop by adjoining it as a relation
    for arr, c in C_FIXTURES:
        poset = build_poset(arr)
        pres = build_presentation(arr, c, 0)
        y_of_member = {m: y for y, m in pres.member_of_y.items()}
        t = len(arr.subspaces)
        for size in range(2, min(t, 4) + 1):
            for combo in combinations(range(t), size):
                if 0 in combo or set_defect(poset, combo) == 0:
                    continue
                ys = tuple(sorted(y_of_member[i] for i in combo))
                mono = (0, ys)
                degree = 2 * 0 + (2 * c - 1) * len(ys)
                base_ranks = graded_ranks(pres, degree)
                pres.relations.append({mono: 1})
                pres.relation_kinds.append("boundary-sum")
                new_ranks = graded_ranks(pres, degree)
                pres.relations.pop()
                pres.relation_kinds.pop()
                assert new_ranks == base_ranks, (combo, mono)


def test_atomic_complex_shape():
    arr = boolean(2)
    poset = build_poset(arr)
    cx = atomic_complex(arr, 0, poset)
    assert cx.bases[0] == [()]
    assert len(cx.bases[1]) == 3
    assert len(cx.bases[2]) == 3
    # the full triple meets in the zero space, d = -1 < 0
    assert cx.top_degree == 2
    cx1 = atomic_complex(arr, 1, poset)
    assert cx1.top_degree == 1


def test_fk_gk_are_chain_maps():
    for arr, c in C_FIXTURES:
        poset = build_poset(arr)
        for k in range(arr.n + 1):
            fdata = fk_chain_map(arr, k, poset)
            gdata = gk_chain_map(arr, c, 0, k, poset)
            for r in range(1, fdata.atomic.top_degree + 1):
                for data in (fdata, gdata):
                    lhs = int_matmul(
                        data.matrices[r - 1], data.atomic.boundary_matrix(r)
                    )
                    if data.relative.dim(r - 1) and data.relative.dim(r):
                        rhs = int_matmul(
                            data.relative.boundary_matrix(r), data.matrices[r]
                        )
                    else:
                        rhs = lhs
                    assert lhs == rhs


def test_gk_level():
    assert gk_level(3, 2, 1) == 1
    assert gk_level(3, 2, 3) == 0
    assert gk_level(1, 1, 0) == 1
    assert gk_level(3, 1, 0) == 3


def test_verify_fk_iso_all_levels():
    for arr, _ in C_FIXTURES:
        poset = build_poset(arr)
        for k in range(arr.n + 1):
            report = verify_fk_iso(arr, k, poset)
            assert report.passed, (arr.names, k, report.detail)


def test_verify_fg_homotopic_all_levels():
    for arr, c in C_FIXTURES:
        poset = build_poset(arr)
        for k in range(arr.n + 1):
            report = verify_fg_homotopic(arr, c, 0, k, poset)
            assert report.passed, (arr.names, k, report.detail)


def test_atomic_homology_matches_engine_ranks():
    # sanity behind verify_fk_iso: the atomic complex computes the same
    # groups as the order-complex pair
    arr = skew_lines(3)
    poset = build_poset(arr)
    for k in range(arr.n + 1):
        data = fk_chain_map(arr, k, poset)
        h_at = homology(data.atomic)
        h_rel = homology(data.relative)
        top = max(data.atomic.top_degree, data.relative.top_degree)
        for r in range(top + 1):
            assert h_at.degree(r).free_rank == h_rel.degree(r).free_rank


def test_pi_kills_relations_and_x_power():
    for arr, c in C_FIXTURES:
        ctx = pi_context(arr, c, 0)
        assert pi_image(ctx, (c, ())) == {}
        for rel in ctx.presentation.relations:
            assert pi_polynomial(ctx, rel) == {}


def test_pi_degree_bookkeeping():
    arr = skew_lines(2)
    c = 2
    ctx = pi_context(arr, c, 0)
    for mono in [(0, ()), (1, ()), (0, (1,)), (1, (1,))]:
        img = pi_image(ctx, mono)
        degree = 2 * mono[0] + (2 * c - 1) * len(mono[1])
        for i in img:
            assert ctx.table.basis[i].degree == degree


def test_pi_x_y_product_spans_top_class():
    ctx = pi_context(skew_lines(2), 2, 0)
    img = pi_image(ctx, (1, (1,)))
    (five,) = [
        i for i, b in enumerate(ctx.table.basis)
        if b.degree == 5 and b.torsion_order == 0
    ]
    assert set(img) == {five} and abs(img[five]) == 1


def test_verify_presentation_all_fixtures():
    for arr, c in C_FIXTURES:
        report = verify_presentation(arr, c, 0, 2 * arr.n)
        assert report.passed, (arr.names, report.degrees)
        assert not report.torsion_flag
        for degree, pi_rank, ri_rank, engine_rank in report.degrees:
            assert pi_rank == ri_rank == engine_rank, degree


def test_verify_presentation_nonzero_base():
    report = verify_presentation(points_cp1(3), 1, base_index=1)
    assert report.passed
