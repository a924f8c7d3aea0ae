"""Relative chain complexes of poset order complexes and their integral
homology, plus the chain-level meet product.

Simplices are tuples of vertex ids (strictly increasing in the poset
order); chains are sparse dicts simplex -> integer coefficient.  All
homology is computed over Z via Smith normal form, with explicit
representative cycles and an exact coordinatizer per degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    int_inverse_unimodular,
    int_matvec,
    make_matrix,
    snf,
    solve_rational,
)
from .poset import IntersectionPoset

IntChain = dict[tuple, int]


def add_chains(a: IntChain, b: IntChain, factor: int = 1) -> IntChain:
    out = dict(a)
    for s, c in b.items():
        out[s] = out.get(s, 0) + factor * c
        if out[s] == 0:
            del out[s]
    return out


def scale_chain(a: IntChain, factor: int) -> IntChain:
    return {s: factor * c for s, c in a.items()} if factor else {}


class NotACycle(ValueError):
    """Passed chain has nonzero relative boundary."""


@dataclass
class ChainComplex:
    """A finitely generated chain complex with a distinguished simplex basis."""

    bases: list[list[tuple]]  # bases[r]: sorted simplices of degree r
    boundaries: list[list[list[int]]]  # boundaries[r]: C_r -> C_{r-1}

    def __post_init__(self):
        self.index = [
            {s: i for i, s in enumerate(basis)} for basis in self.bases
        ]

    @property
    def top_degree(self) -> int:
        return len(self.bases) - 1

    def dim(self, r: int) -> int:
        return len(self.bases[r]) if 0 <= r <= self.top_degree else 0

    def vector(self, chain: IntChain, r: int) -> list[int]:
        v = [0] * self.dim(r)
        for s, c in chain.items():
            v[self.index[r][s]] = c
        return v

    def chain(self, v, r: int) -> IntChain:
        return {self.bases[r][i]: int(c) for i, c in enumerate(v) if c}

    def boundary_matrix(self, r: int):
        if 0 < r <= self.top_degree:
            return self.boundaries[r]
        rows = self.dim(r - 1)
        cols = self.dim(r)
        return [[0] * cols for _ in range(rows)]

    def apply_boundary(self, chain: IntChain, r: int) -> IntChain:
        v = self.vector(chain, r)
        w = int_matvec(self.boundary_matrix(r), v) if self.dim(r - 1) else []
        return self.chain(w, r - 1) if r - 1 >= 0 else {}


def boundary_matrix_from(faces, basis_prev, basis_cur):
    """Assemble a boundary matrix from a simplex -> [(face, coeff)] rule."""
    idx = {s: i for i, s in enumerate(basis_prev)}
    m = [[0] * len(basis_cur) for _ in basis_prev]
    for j, s in enumerate(basis_cur):
        for face, coeff in faces(s):
            m[idx[face]][j] += coeff
    return m


@dataclass
class Generator:
    order: int  # 0 for free, t > 1 for torsion
    vector: list[int]


@dataclass
class DegreeHomology:
    """H_r presented as Z^free ⊕ ⊕ Z/t with an exact coordinatizer."""

    generators: list[Generator]
    # coordinatizer internals
    _vinv: list[list[int]]  # inverse of the SNF V of the boundary out of C_r
    _rank_out: int  # rank of that boundary; kernel coords start here
    _u2: list[list[int]]  # SNF U of the image presentation matrix
    _orders: list[int]  # per kernel coordinate, 0 free / 1 killed / t torsion
    _signs: list[int]

    @property
    def free_rank(self) -> int:
        return sum(1 for g in self.generators if g.order == 0)

    @property
    def torsion(self) -> list[int]:
        return [g.order for g in self.generators if g.order > 1]

    def coordinatize(self, zvec) -> list[int]:
        """Coordinates of the cycle zvec in the generator basis."""
        y = int_matvec(self._vinv, list(zvec))
        if any(y[i] != 0 for i in range(self._rank_out)):
            raise NotACycle("chain is not a cycle")
        w = y[self._rank_out:]
        wp = int_matvec(self._u2, w) if self._u2 else []
        coords = []
        pos = 0
        for i, order in enumerate(self._orders):
            if order == 1:
                continue
            val = self._signs[pos] * wp[i]
            if order > 1:
                val %= order
            coords.append(val)
            pos += 1
        return coords


@dataclass
class HomologySummary:
    complex: ChainComplex
    degrees: list[DegreeHomology]

    def degree(self, r: int) -> DegreeHomology:
        if 0 <= r < len(self.degrees):
            return self.degrees[r]
        return DegreeHomology([], [], 0, [], [], [])

    def class_of(self, chain: IntChain, r: int) -> list[int]:
        return self.degree(r).coordinatize(self.complex.vector(chain, r))


def _leading_sign(vec) -> int:
    for x in vec:
        if x:
            return 1 if x > 0 else -1
    return 1


def homology(cx: ChainComplex) -> HomologySummary:
    degrees = []
    for r in range(cx.top_degree + 1):
        nr = cx.dim(r)
        if nr == 0:
            degrees.append(DegreeHomology([], [], 0, [], [], []))
            continue
        out = cx.boundary_matrix(r)
        if len(out) == 0:
            # no target: everything is a cycle
            v = [[int(i == j) for j in range(nr)] for i in range(nr)]
            rank_out = 0
        else:
            res = snf(out)
            rank_out = sum(1 for x in res.diagonal() if x != 0)
            v = res.v
        vinv = int_inverse_unimodular(v)
        s = nr - rank_out
        kernel_cols = [[v[i][rank_out + j] for j in range(s)] for i in range(nr)]
        if s == 0:
            degrees.append(DegreeHomology([], vinv, rank_out, [], [], []))
            continue
        # present the image of the next boundary in kernel coordinates
        bnd_in = cx.boundary_matrix(r + 1)
        ncols_in = cx.dim(r + 1)
        mmat = [[0] * ncols_in for _ in range(s)]
        if ncols_in:
            kfrac = make_matrix(kernel_cols)
            for j in range(ncols_in):
                col = [bnd_in[i][j] for i in range(nr)]
                sol = solve_rational(kfrac, col)
                if sol is None:
                    raise RuntimeError("image column outside the cycle lattice")
                for i in range(s):
                    x = sol[i]
                    assert x.denominator == 1
                    mmat[i][j] = int(x)
        if ncols_in:
            res2 = snf(mmat)
            u2 = res2.u
            diag2 = res2.diagonal()
        else:
            u2 = [[int(i == j) for j in range(s)] for i in range(s)]
            diag2 = []
        orders = []
        for i in range(s):
            di = diag2[i] if i < len(diag2) else 0
            orders.append(di)
        u2inv = int_inverse_unimodular(u2)
        # generator i lives in column i of K·U2^{-1}
        gens = []
        signs = []
        for i, order in enumerate(orders):
            if order == 1:
                continue
            col = [
                sum(kernel_cols[row][k] * u2inv[k][i] for k in range(s))
                for row in range(nr)
            ]
            eps = _leading_sign(col)
            signs.append(eps)
            gens.append(Generator(order, [eps * x for x in col]))
        degrees.append(DegreeHomology(gens, vinv, rank_out, u2, orders, signs))
    return HomologySummary(cx, degrees)


# ---------------------------------------------------------------------------
# complexes attached to an intersection poset


def build_relative_complex(poset: IntersectionPoset, k: int) -> ChainComplex:
    """Relative chains of (ΔQ_[k,n], ΔQ_[k,n)): basis = chains ending at V
    with every vertex of d >= k; the face dropping V is omitted."""
    if not 0 <= k <= poset.n:
        raise ValueError("level k out of range")
    ids = [i for i in range(len(poset.elements)) if poset.d[i] >= k]
    top = poset.top
    by_degree: list[list[tuple]] = [[(top,)]]
    frontier = [(top,)]
    while frontier:
        new = []
        for chain in frontier:
            first = chain[0]
            for w in ids:
                if w != first and poset.leq[w][first]:
                    new.append((w,) + chain)
        if new:
            by_degree.append(sorted(new))
        frontier = new

    def faces(s):
        q = len(s) - 1
        return [(s[:i] + s[i + 1:], (-1) ** i) for i in range(q)]

    boundaries = [[]]
    for r in range(1, len(by_degree)):
        boundaries.append(boundary_matrix_from(faces, by_degree[r - 1], by_degree[r]))
    return ChainComplex(by_degree, boundaries)


def build_local_complex(poset: IntersectionPoset, u: int) -> ChainComplex:
    """Relative chains of (Δ[u,V], Δ[u,V) ∪ Δ(u,V]): basis = chains from
    u to V containing both endpoints; faces dropping an endpoint are omitted."""
    top = poset.top
    ids = [i for i in range(len(poset.elements)) if poset.leq[u][i]]
    if u == top:
        return ChainComplex([[(top,)]], [[]])
    by_degree: list[list[tuple]] = [[]]
    chains = [(u, top)]
    by_degree.append(sorted(chains))
    frontier = chains
    while frontier:
        new = []
        for chain in frontier:
            for w in ids:
                if w in chain:
                    continue
                # insert w strictly between consecutive vertices
                for pos in range(len(chain) - 1):
                    lo, hi = chain[pos], chain[pos + 1]
                    if poset.leq[lo][w] and poset.leq[w][hi] and w != lo and w != hi:
                        cand = chain[: pos + 1] + (w,) + chain[pos + 1:]
                        if cand not in new:
                            new.append(cand)
        new = sorted(set(new))
        if new:
            by_degree.append(new)
        frontier = new

    def faces(s):
        return [(s[:i] + s[i + 1:], (-1) ** i) for i in range(1, len(s) - 1)]

    boundaries = [[]]
    for r in range(1, len(by_degree)):
        boundaries.append(boundary_matrix_from(faces, by_degree[r - 1], by_degree[r]))
    return ChainComplex(by_degree, boundaries)


# ---------------------------------------------------------------------------
# shuffle cross product and the meet product


def _shuffles(p: int, q: int):
    """All (p,q)-shuffle words as (sign, moves) with moves a tuple of 0/1
    (0 = advance first factor); sign = parity of the shuffle permutation."""
    from itertools import combinations

    total = p + q
    for rpos in combinations(range(total), p):
        moves = [1] * total
        for i in rpos:
            moves[i] = 0
        # inversions: for each 0-move, count 1-moves occurring before it
        inv = 0
        ones_seen = 0
        for m in moves:
            if m == 1:
                ones_seen += 1
            else:
                inv += ones_seen
        yield ((-1) ** inv, tuple(moves))


def cross_shuffle(c: IntChain, d: IntChain) -> IntChain:
    """Eilenberg-Zilber shuffle product; vertices of the result are pairs."""
    out: IntChain = {}
    for sigma, a in c.items():
        p = len(sigma) - 1
        for tau, b in d.items():
            q = len(tau) - 1
            for sign, moves in _shuffles(p, q):
                i = j = 0
                verts = [(sigma[0], tau[0])]
                for m in moves:
                    if m == 0:
                        i += 1
                    else:
                        j += 1
                    verts.append((sigma[i], tau[j]))
                key = tuple(verts)
                out[key] = out.get(key, 0) + sign * a * b
                if out[key] == 0:
                    del out[key]
    return out


def meet_push(poset: IntersectionPoset, ch: IntChain) -> IntChain:
    """Apply (u,v) -> u∧v vertex-wise; degenerate images are dropped."""
    out: IntChain = {}
    for simplex, coeff in ch.items():
        image = tuple(poset.meet[u][v] for u, v in simplex)
        if len(set(image)) != len(image):
            continue
        out[image] = out.get(image, 0) + coeff
        if out[image] == 0:
            del out[image]
    return out


def meet_chain(poset: IntersectionPoset, c: IntChain, d: IntChain) -> IntChain:
    """meet_push ∘ cross_shuffle, projected to chains ending at V."""
    pushed = meet_push(poset, cross_shuffle(c, d))
    top = poset.top
    return {s: v for s, v in pushed.items() if s[-1] == top}


def meet_product(poset: IntersectionPoset, k: int, l: int, c: IntChain, d: IntChain) -> IntChain:
    """The chain-level product landing in the level-(k+l-n) relative complex."""
    n = poset.n
    if k + l < n:
        raise ValueError("meet_product requires k + l >= n")
    result = meet_chain(poset, c, d)
    floor = k + l - n
    for s in result:
        assert min(poset.d[v] for v in s) >= floor, "semimodular bound violated"
    return result
