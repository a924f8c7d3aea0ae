"""Generators-and-relations presentation of the complement ring for
c-arrangements, with the atomic-complex chain maps used to verify it
against the main engine.

Generators: x in degree 2 and y_1..y_t in degree 2c-1 (one per member
other than the chosen base member A_0).  Relations come in three
families: alternating sums over minimally dependent subfamilies
avoiding A_0, plain monomials for minimally dependent subfamilies
through A_0, and x^c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .arrangement import Arrangement
from .chains import (
    ChainComplex,
    HomologySummary,
    IntChain,
    add_chains,
    build_relative_complex,
    homology,
    meet_chain,
)
from .linalg import int_det, int_matmul, make_matrix, rref
from .poset import IntersectionPoset, build_poset, is_c_arrangement, minimal_dependent_sets
from .ring import RingElement, RingTable, ring_table

Monomial = tuple[int, tuple[int, ...]]  # (x power, sorted y indices)
Polynomial = dict[Monomial, int]


class NotCArrangement(ValueError):
    pass


def monomial_degree(mono: Monomial, c: int) -> int:
    s, ys = mono
    return 2 * s + (2 * c - 1) * len(ys)


def monomial_mul(a: Monomial, b: Monomial, c: int) -> tuple[int, Monomial] | None:
    """Product in R/(x^c); None when it vanishes (x power >= c or repeated y)."""
    s = a[0] + b[0]
    if s >= c:
        return None
    if set(a[1]) & set(b[1]):
        return None
    inversions = sum(1 for p in a[1] for q in b[1] if p > q)
    merged = tuple(sorted(a[1] + b[1]))
    return ((-1) ** inversions, (s, merged))


def poly_mul_monomial(mono: Monomial, poly: Polynomial, c: int) -> Polynomial:
    out: Polynomial = {}
    for m2, coeff in poly.items():
        res = monomial_mul(mono, m2, c)
        if res is None:
            continue
        sign, prod = res
        out[prod] = out.get(prod, 0) + sign * coeff
        if out[prod] == 0:
            del out[prod]
    return out


@dataclass
class Presentation:
    c: int
    t: int
    base_index: int
    member_of_y: dict[int, int]  # y index (1..t) -> member index in the arrangement
    relations: list[Polynomial]
    relation_kinds: list[str]  # "boundary-sum", "through-base", "x-power"

    def monomials(self, degree: int) -> list[Monomial]:
        """Spanning monomials of R/(x^c) in one degree, sorted."""
        out = []
        ydeg = 2 * self.c - 1
        for size in range(self.t + 1):
            rem = degree - ydeg * size
            if rem < 0 or rem % 2:
                continue
            s = rem // 2
            if s >= self.c:
                continue
            for ys in combinations(range(1, self.t + 1), size):
                out.append((s, ys))
        return sorted(out)


def build_presentation(arr: Arrangement, c: int, base_index: int = 0) -> Presentation:
    poset = build_poset(arr)
    if not is_c_arrangement(arr, c, poset):
        raise NotCArrangement(f"not a {c}-arrangement")
    if not arr.subspaces:
        raise ValueError("presentation needs at least one member")
    members = [i for i in range(len(arr.subspaces)) if i != base_index]
    member_of_y = {j + 1: m for j, m in enumerate(members)}
    y_of_member = {m: j for j, m in member_of_y.items()}
    relations: list[Polynomial] = []
    kinds: list[str] = []
    for dep in minimal_dependent_sets(arr, poset):
        if base_index in dep.indices:
            ys = tuple(sorted(y_of_member[i] for i in dep.indices if i != base_index))
            relations.append({(0, ys): 1})
            kinds.append("through-base")
        else:
            ys = tuple(sorted(y_of_member[i] for i in dep.indices))
            poly: Polynomial = {}
            for j in range(len(ys)):
                reduced = ys[:j] + ys[j + 1:]
                poly[(0, reduced)] = poly.get((0, reduced), 0) + (-1) ** j
            relations.append(poly)
            kinds.append("boundary-sum")
    relations.append({(c, ()): 1})
    kinds.append("x-power")
    return Presentation(c, len(members), base_index, member_of_y, relations, kinds)


def graded_ranks(p: Presentation, max_degree: int) -> list[int]:
    """Rank over Q of each degree component of R/I, degrees 0..max_degree.

    The x^c relation is folded into the monomial spanning set; the other
    relations contribute all monomial multiples in the degree, quotiented
    by exact rational row reduction.
    """
    ranks = []
    for degree in range(max_degree + 1):
        monos = p.monomials(degree)
        if not monos:
            ranks.append(0)
            continue
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for rel, kind in zip(p.relations, p.relation_kinds):
            if kind == "x-power":
                continue  # already folded into the monomial set
            rel_deg = monomial_degree(next(iter(rel)), p.c)
            rem = degree - rel_deg
            if rem < 0:
                continue
            for mono in p.monomials(rem):
                multiple = poly_mul_monomial(mono, rel, p.c)
                if not multiple:
                    continue
                row = [Fraction(0)] * len(monos)
                for mo, coeff in multiple.items():
                    row[index[mo]] = Fraction(coeff)
                rows.append(row)
        quotient_rank = len(rref(make_matrix(rows))) if rows else 0
        ranks.append(len(monos) - quotient_rank)
    return ranks


# ---------------------------------------------------------------------------
# atomic complex and the chain maps into the relative complex


def atomic_complex(arr: Arrangement, k: int, poset: IntersectionPoset | None = None) -> ChainComplex:
    """The shifted reduced chain complex D^k of the atomic complex S_k:
    degree r holds the r-subsets I of the members with d(∩I) >= k,
    degree 0 the empty simplex."""
    if poset is None:
        poset = build_poset(arr)
    if not 0 <= k <= poset.n:
        raise ValueError("level k out of range")
    member_ids = [poset.index_of(s) for s in arr.subspaces]
    bases: list[list[tuple]] = [[()]]
    t = len(arr.subspaces)
    for size in range(1, t + 1):
        level = []
        for combo in combinations(range(t), size):
            q = poset.top
            for i in combo:
                q = poset.meet[q][member_ids[i]]
            if poset.d[q] >= k:
                level.append(combo)
        if not level:
            break
        bases.append(sorted(level))

    def faces(s):
        return [(s[:j] + s[j + 1:], (-1) ** j) for j in range(len(s))]

    boundaries = [[]]
    for r in range(1, len(bases)):
        idx = {s: i for i, s in enumerate(bases[r - 1])}
        m = [[0] * len(bases[r]) for _ in bases[r - 1]]
        for jcol, s in enumerate(bases[r]):
            for face, coeff in faces(s):
                m[idx[face]][jcol] += coeff
        boundaries.append(m)
    return ChainComplex(bases, boundaries)


def _alpha(poset: IntersectionPoset, arr: Arrangement, member: int) -> IntChain:
    return {(poset.index_of(arr.subspaces[member]), poset.top): 1}


def fk_chain(poset: IntersectionPoset, arr: Arrangement, simplex: tuple[int, ...]) -> IntChain:
    """Iterated meet product of the 1-chains [A_i, V]; empty product = [V]."""
    chain: IntChain = {(poset.top,): 1}
    for member in simplex:
        chain = meet_chain(poset, chain, _alpha(poset, arr, member))
    return chain


def gk_chain(
    poset: IntersectionPoset, arr: Arrangement, base_index: int, simplex: tuple[int, ...]
) -> IntChain:
    chain: IntChain = {(poset.top,): 1}
    base = _alpha(poset, arr, base_index)
    for member in simplex:
        factor = add_chains(_alpha(poset, arr, member), base, -1)
        chain = meet_chain(poset, chain, factor)
    return chain


@dataclass
class ChainMapData:
    atomic: ChainComplex
    relative: ChainComplex
    matrices: list[list[list[int]]]  # per degree r: dim C^rel_r x dim D^k_r


def _chain_map_matrices(atomic: ChainComplex, relative: ChainComplex, image) -> list:
    mats = []
    for r in range(atomic.top_degree + 1):
        rows = relative.dim(r)
        cols = atomic.dim(r)
        mat = [[0] * cols for _ in range(rows)]
        for j, simplex in enumerate(atomic.bases[r]):
            chain = image(r, simplex)
            if rows == 0:
                assert not chain, "chain map image outside the target complex"
                continue
            vec = relative.vector(chain, r)
            for i, val in enumerate(vec):
                mat[i][j] = val
        mats.append(mat)
    return mats


def fk_chain_map(arr: Arrangement, k: int, poset: IntersectionPoset | None = None) -> ChainMapData:
    if poset is None:
        poset = build_poset(arr)
    atomic = atomic_complex(arr, k, poset)
    relative = build_relative_complex(poset, k)
    mats = _chain_map_matrices(
        atomic, relative, lambda r, s: fk_chain(poset, arr, s)
    )
    return ChainMapData(atomic, relative, mats)


def gk_level(n: int, c: int, k: int) -> int:
    """The block level a with n - (a+1)c < k <= n - ac."""
    return (n - k) // c


def gk_chain_map(
    arr: Arrangement, c: int, base_index: int, k: int, poset: IntersectionPoset | None = None
) -> ChainMapData:
    if poset is None:
        poset = build_poset(arr)
    if not is_c_arrangement(arr, c, poset):
        raise NotCArrangement(f"not a {c}-arrangement")
    atomic = atomic_complex(arr, k, poset)
    relative = build_relative_complex(poset, k)
    a = gk_level(poset.n, c, k)

    def image(r, simplex):
        if r != a:
            return {}
        return gk_chain(poset, arr, base_index, simplex)

    mats = _chain_map_matrices(atomic, relative, image)
    return ChainMapData(atomic, relative, mats)


def homotopy_matrices(
    arr: Arrangement, c: int, base_index: int, k: int, poset: IntersectionPoset,
    atomic: ChainComplex, relative: ChainComplex,
) -> list[list[list[int]]]:
    """K: D^k_r -> C^rel_{r+1}, the cone over the base member below level a."""
    a = gk_level(poset.n, c, k)
    mats = []
    for r in range(atomic.top_degree + 1):
        rows = relative.dim(r + 1)
        cols = atomic.dim(r)
        mat = [[0] * cols for _ in range(rows)]
        if r < a:
            for j, simplex in enumerate(atomic.bases[r]):
                if base_index in simplex:
                    continue  # degenerate cone simplex
                chain = fk_chain(poset, arr, (base_index,) + simplex)
                if rows == 0:
                    assert not chain
                    continue
                vec = relative.vector(chain, r + 1)
                for i, val in enumerate(vec):
                    mat[i][j] = val
        mats.append(mat)
    return mats


def _is_chain_map(data: ChainMapData) -> bool:
    for r in range(1, data.atomic.top_degree + 1):
        lhs = int_matmul(data.matrices[r - 1], data.atomic.boundary_matrix(r))
        if data.relative.dim(r - 1) and data.relative.dim(r):
            rhs = int_matmul(data.relative.boundary_matrix(r), data.matrices[r])
        else:
            rhs = [[0] * data.atomic.dim(r) for _ in range(data.relative.dim(r - 1))]
        if lhs != rhs:
            return False
    return True


@dataclass
class VerificationReport:
    passed: bool
    detail: str = ""


def verify_fk_iso(arr: Arrangement, k: int, poset: IntersectionPoset | None = None) -> VerificationReport:
    """Check that the atomic-complex comparison map induces an isomorphism
    on homology in every degree."""
    if poset is None:
        poset = build_poset(arr)
    data = fk_chain_map(arr, k, poset)
    if not _is_chain_map(data):
        return VerificationReport(False, "comparison map does not commute with boundaries")
    h_at = homology(data.atomic)
    h_rel = homology(data.relative)
    top = max(data.atomic.top_degree, data.relative.top_degree)
    for r in range(top + 1):
        da = h_at.degree(r) if r < len(h_at.degrees) else None
        dr = h_rel.degree(r) if r < len(h_rel.degrees) else None
        free_a = da.free_rank if da else 0
        free_r = dr.free_rank if dr else 0
        tor_a = da.torsion if da else []
        tor_r = dr.torsion if dr else []
        if free_a != free_r or tor_a != tor_r:
            return VerificationReport(False, f"group mismatch in degree {r}")
        if free_a == 0 and not tor_a:
            continue
        if tor_a:
            return VerificationReport(
                False, f"torsion comparison in degree {r} unsupported"
            )
        cols = []
        for gen in da.generators:
            avec = gen.vector
            vec = [
                sum(data.matrices[r][i][j] * avec[j] for j in range(data.atomic.dim(r)))
                for i in range(data.relative.dim(r))
            ]
            cols.append(h_rel.degree(r).coordinatize(vec))
        matrix = [[cols[j][i] for j in range(len(cols))] for i in range(free_r)]
        if abs(int_det(matrix)) != 1:
            return VerificationReport(False, f"induced map not unimodular in degree {r}")
    return VerificationReport(True)


def verify_fg_homotopic(
    arr: Arrangement, c: int, base_index: int, k: int, poset: IntersectionPoset | None = None
) -> VerificationReport:
    """Matrix identity f - g = K∂ + ∂K plus class-level agreement."""
    if poset is None:
        poset = build_poset(arr)
    fdata = fk_chain_map(arr, k, poset)
    gdata = gk_chain_map(arr, c, base_index, k, poset)
    if not _is_chain_map(fdata) or not _is_chain_map(gdata):
        return VerificationReport(False, "maps do not commute with boundaries")
    kmats = homotopy_matrices(arr, c, base_index, k, poset, fdata.atomic, fdata.relative)
    atomic, relative = fdata.atomic, fdata.relative
    for r in range(atomic.top_degree + 1):
        rows = relative.dim(r)
        cols = atomic.dim(r)
        want = [
            [fdata.matrices[r][i][j] - gdata.matrices[r][i][j] for j in range(cols)]
            for i in range(rows)
        ]
        got = [[0] * cols for _ in range(rows)]
        if r >= 1 and rows:
            kd = int_matmul(kmats[r - 1], atomic.boundary_matrix(r))
            got = [[got[i][j] + kd[i][j] for j in range(cols)] for i in range(rows)]
        if relative.dim(r + 1) and rows:
            dk = int_matmul(relative.boundary_matrix(r + 1), kmats[r])
            got = [[got[i][j] + dk[i][j] for j in range(cols)] for i in range(rows)]
        if want != got:
            return VerificationReport(False, f"homotopy identity fails in degree {r}")
    h_at = homology(atomic)
    h_rel = homology(relative)
    for r in range(atomic.top_degree + 1):
        for gen in h_at.degree(r).generators:
            avec = atomic.vector(atomic.chain(gen.vector, r), r)
            fvec = [
                sum(fdata.matrices[r][i][j] * avec[j] for j in range(atomic.dim(r)))
                for i in range(relative.dim(r))
            ]
            gvec = [
                sum(gdata.matrices[r][i][j] * avec[j] for j in range(atomic.dim(r)))
                for i in range(relative.dim(r))
            ]
            if h_rel.degree(r).coordinatize(fvec) != h_rel.degree(r).coordinatize(gvec):
                return VerificationReport(False, f"classes differ in degree {r}")
    return VerificationReport(True)


# ---------------------------------------------------------------------------
# the presentation map into the engine's ring


@dataclass
class PiContext:
    arr: Arrangement
    presentation: Presentation
    table: RingTable
    x_image: RingElement
    y_images: dict[int, RingElement]


def _global_ids(table: RingTable, k: int, r: int) -> list[int]:
    ids = [i for i, b in enumerate(table.basis) if b.k == k and b.r == r]
    ids.sort(key=lambda i: table.basis[i].index)
    return ids


def _element_from_class(table: RingTable, k: int, r: int, coords) -> RingElement:
    ids = _global_ids(table, k, r)
    return {ids[i]: c for i, c in enumerate(coords) if c}


def pi_context(arr: Arrangement, c: int, base_index: int = 0) -> PiContext:
    pres = build_presentation(arr, c, base_index)
    table = ring_table(arr)
    dec = table.decomposition
    poset = dec.poset
    n = poset.n
    top = poset.top
    x_coords = dec.summaries[n - 1].class_of({(top,): 1}, 0)
    x_image = _element_from_class(table, n - 1, 0, x_coords)
    y_images = {}
    base_id = poset.index_of(arr.subspaces[base_index])
    for yi, member in pres.member_of_y.items():
        mid = poset.index_of(arr.subspaces[member])
        chain = {(mid, top): 1, (base_id, top): -1}
        coords = dec.summaries[n - c].class_of(chain, 1)
        y_images[yi] = _element_from_class(table, n - c, 1, coords)
    return PiContext(arr, pres, table, x_image, y_images)


def pi_image(ctx: PiContext, monomial: Monomial) -> RingElement:
    s, ys = monomial
    out: RingElement = {ctx.table.unit_index: 1}
    for _ in range(s):
        out = ctx.table.multiply(out, ctx.x_image)
    for yi in ys:
        out = ctx.table.multiply(out, ctx.y_images[yi])
    return out


def pi_polynomial(ctx: PiContext, poly: Polynomial) -> RingElement:
    out: RingElement = {}
    for mono, coeff in poly.items():
        img = pi_image(ctx, mono)
        for i, v in img.items():
            out[i] = out.get(i, 0) + coeff * v
    return ctx.table.reduce(out)


@dataclass
class PresentationReport:
    passed: bool
    degrees: list[tuple[int, int, int, int]]  # (degree, pi rank, R/I rank, engine rank)
    torsion_flag: bool
    detail: str = ""


def verify_presentation(
    arr: Arrangement, c: int, base_index: int = 0, max_degree: int | None = None
) -> PresentationReport:
    """Thm-level verification: π kills every relation, and per degree the
    rational rank of the π-image of the monomial span equals both the
    R/I rank and the engine's free rank."""
    ctx = pi_context(arr, c, base_index)
    n = ctx.table.n
    if max_degree is None:
        max_degree = 2 * n
    for rel in ctx.presentation.relations:
        if pi_polynomial(ctx, rel):
            return PresentationReport(False, [], False, "relation not in the kernel")
    ranks_ri = graded_ranks(ctx.presentation, max_degree)
    torsion_flag = any(b.torsion_order for b in ctx.table.basis)
    rows_report = []
    ok = True
    for degree in range(max_degree + 1):
        engine_rank = ctx.table.poincare[degree] if degree < len(ctx.table.poincare) else 0
        free_ids = [
            i for i, b in enumerate(ctx.table.basis)
            if b.degree == degree and b.torsion_order == 0
        ]
        pos = {b: i for i, b in enumerate(free_ids)}
        rows = []
        for mono in ctx.presentation.monomials(degree):
            img = pi_image(ctx, mono)
            row = [Fraction(0)] * len(free_ids)
            for i, v in img.items():
                if ctx.table.basis[i].torsion_order == 0:
                    row[pos[i]] = Fraction(v)
            rows.append(row)
        pi_rank = len(rref(make_matrix(rows))) if rows and free_ids else 0
        rows_report.append((degree, pi_rank, ranks_ri[degree], engine_rank))
        if not (pi_rank == ranks_ri[degree] == engine_rank):
            ok = False
    return PresentationReport(ok and not torsion_flag, rows_report, torsion_flag)
