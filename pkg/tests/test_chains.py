import random

import pytest

from arrangements import (
    boolean,
    crossed_pairs,
    empty,
    mixed,
    points_cp1,
    skew_lines,
)
from projarr.chains import (
    ChainComplex,
    NotACycle,
    add_chains,
    build_local_complex,
    build_relative_complex,
    cross_shuffle,
    homology,
    meet_chain,
    meet_push,
    scale_chain,
)
from projarr.linalg import int_matmul
from projarr.poset import build_poset

FIXTURES = [
    empty(2),
    points_cp1(3),
    boolean(2),
    skew_lines(2),
    skew_lines(3),
    crossed_pairs(),
    mixed(),
]


def full_boundary(chain):
    """Ordinary simplicial boundary on tuple simplices (all faces)."""
    out = {}
    for s, c in chain.items():
        if len(s) == 1:
            continue
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            out[face] = out.get(face, 0) + (-1) ** i * c
            if out[face] == 0:
                del out[face]
    return out


def test_chain_arithmetic():
    a = {(1, 2): 1}
    b = {(1, 2): -1, (2, 3): 2}
    assert add_chains(a, b) == {(2, 3): 2}
    assert scale_chain(b, 0) == {}
    assert scale_chain(b, -1) == {(1, 2): 1, (2, 3): -2}


def test_boundary_squares_to_zero_everywhere():
    for arr in FIXTURES:
        poset = build_poset(arr)
        for k in range(arr.n + 1):
            cx = build_relative_complex(poset, k)
            for r in range(2, cx.top_degree + 1):
                prod = int_matmul(cx.boundary_matrix(r - 1), cx.boundary_matrix(r))
                assert all(all(x == 0 for x in row) for row in prod)
        for u in range(len(poset.elements)):
            if poset.d[u] < 0:
                continue
            cx = build_local_complex(poset, u)
            for r in range(2, cx.top_degree + 1):
                prod = int_matmul(cx.boundary_matrix(r - 1), cx.boundary_matrix(r))
                assert all(all(x == 0 for x in row) for row in prod)


def test_relative_complex_basis_shape():
    poset = build_poset(points_cp1(3))
    cx = build_relative_complex(poset, 0)
    assert cx.bases[0] == [(0,)]
    assert len(cx.bases[1]) == 3  # (p_i, V)
    assert cx.top_degree == 1


def test_level_zero_homology_of_points():
    poset = build_poset(points_cp1(3))
    summary = homology(build_relative_complex(poset, 0))
    assert summary.degree(0).free_rank == 0
    assert summary.degree(1).free_rank == 2
    assert summary.degree(1).torsion == []


def test_top_level_homology_is_unit():
    for arr in FIXTURES:
        poset = build_poset(arr)
        summary = homology(build_relative_complex(poset, arr.n))
        assert summary.degree(0).free_rank == 1


def test_synthetic_torsion():
    cx = ChainComplex([[(0,)], [(0, 1)]], [[], [[2]]])
    summary = homology(cx)
    assert summary.degree(0).free_rank == 0
    assert summary.degree(0).torsion == [2]
    gen = summary.degree(0).generators[0]
    assert summary.degree(0).coordinatize(gen.vector) == [1]
    assert summary.degree(0).coordinatize([2]) == [0]  # 2x is a boundary


def test_coordinatize_rejects_non_cycles():
    poset = build_poset(points_cp1(3))
    cx = build_relative_complex(poset, 0)
    summary = homology(cx)
    chain = {cx.bases[1][0]: 1}  # single (p, V) simplex: not a relative cycle
    with pytest.raises(NotACycle):
        summary.class_of(chain, 1)


def test_class_of_boundary_is_zero_on_random_chains():
    rng = random.Random(3)
    for arr in FIXTURES:
        poset = build_poset(arr)
        for k in range(arr.n + 1):
            cx = build_relative_complex(poset, k)
            summary = homology(cx)
            trials = 0
            while trials < 100:
                r = rng.randrange(1, cx.top_degree + 1) if cx.top_degree else 0
                if cx.dim(r) == 0 or r == 0:
                    break
                vec = [rng.randrange(-3, 4) for _ in range(cx.dim(r))]
                chain = cx.chain(vec, r)
                bnd = cx.apply_boundary(chain, r)
                coords = summary.class_of(bnd, r - 1)
                assert all(c == 0 for c in coords)
                trials += 1


def test_cross_shuffle_point_identity():
    c = {(1,): 1}
    d = {(2, 5): 3}
    assert cross_shuffle(c, d) == {((1, 2), (1, 5)): 3}


def test_cross_shuffle_leibniz_rule():
    rng = random.Random(5)
    for _ in range(100):
        p = rng.randrange(0, 3)
        q = rng.randrange(0, 3)

        def random_chain(deg):
            chain = {}
            for _ in range(rng.randrange(1, 3)):
                verts = tuple(sorted(rng.sample(range(8), deg + 1)))
                chain[verts] = chain.get(verts, 0) + rng.randrange(-2, 3)
            return {s: c for s, c in chain.items() if c}

        c = random_chain(p)
        d = random_chain(q)
        lhs = full_boundary(cross_shuffle(c, d))
        rhs = add_chains(
            cross_shuffle(full_boundary(c), d),
            cross_shuffle(c, full_boundary(d)),
            (-1) ** p,
        )
        assert lhs == rhs


def test_meet_push_naturality():
    rng = random.Random(9)
    for arr in [skew_lines(3), crossed_pairs(), boolean(2)]:
        poset = build_poset(arr)
        cx = build_relative_complex(poset, 0)
        for _ in range(100):
            r1 = rng.randrange(0, cx.top_degree + 1)
            r2 = rng.randrange(0, cx.top_degree + 1)
            if not cx.dim(r1) or not cx.dim(r2):
                continue
            c = {cx.bases[r1][rng.randrange(cx.dim(r1))]: rng.choice([-1, 1, 2])}
            d = {cx.bases[r2][rng.randrange(cx.dim(r2))]: rng.choice([-1, 1])}
            x = cross_shuffle(c, d)
            assert meet_push(poset, full_boundary(x)) == full_boundary(
                meet_push(poset, x)
            )


def test_meet_chain_of_units():
    poset = build_poset(skew_lines(2))
    unit = {(poset.top,): 1}
    assert meet_chain(poset, unit, unit) == unit
