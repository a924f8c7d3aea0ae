"""Intersection posets: meet structure, intervals, dependence combinatorics.

The poset Q of an arrangement consists of all intersections of
subfamilies (including the empty intersection V), ordered by inclusion
and closed under the meet u∧v = u∩v.  The dimension function is
d(u) = dim(u) - 1, so d(V) = n and the zero subspace, when it arises,
carries d = -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arrangement import (
    Arrangement,
    GenericityError,
    generic_hyperplane,
    hyperplane_section,
    intersection_closure,
    restrict_to_hyperplane,
    section_coordinates,
)
from .linalg import Subspace, subspace_intersection


@dataclass
class IntersectionPoset:
    arr: Arrangement
    elements: list[Subspace]  # sorted by (descending d, basis entries)
    d: list[int]
    leq: list[list[bool]]  # leq[i][j] iff elements[i] ⊆ elements[j]
    meet: list[list[int]]  # index of elements[i] ∩ elements[j]
    witnesses: list[tuple[int, ...]]  # member indices realizing each element

    @property
    def n(self) -> int:
        return self.arr.n

    @property
    def top(self) -> int:
        """Index of V (always 0 by the sort order)."""
        return 0

    def index_of(self, s: Subspace) -> int:
        return self.elements.index(s)

    def interval(self, lo: int, hi: int, hi_closed: bool = True) -> list[int]:
        """Indices of {u : lo <= d(u) < hi} (or <= hi when hi_closed)."""
        if hi_closed:
            return [i for i, di in enumerate(self.d) if lo <= di <= hi]
        return [i for i, di in enumerate(self.d) if lo <= di < hi]

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (i, j) with elements[i] < elements[j] a cover relation."""
        out = []
        m = len(self.elements)
        for i in range(m):
            for j in range(m):
                if i == j or not self.leq[i][j]:
                    continue
                if not any(
                    k != i and k != j and self.leq[i][k] and self.leq[k][j]
                    for k in range(m)
                ):
                    out.append((i, j))
        return out


def _sort_key(s: Subspace):
    return (-s.dim, s.basis)


def build_poset(arr: Arrangement) -> IntersectionPoset:
    closed = intersection_closure(arr)
    elements = sorted(closed, key=_sort_key)
    d = [s.dim - 1 for s in elements]
    m = len(elements)
    leq = [[elements[j].contains(elements[i]) for j in range(m)] for i in range(m)]
    index = {s: i for i, s in enumerate(elements)}
    meet = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            if leq[i][j]:
                mij = i
            elif leq[j][i]:
                mij = j
            else:
                mij = index[subspace_intersection(elements[i], elements[j])]
            meet[i][j] = meet[j][i] = mij
    # witness subfamilies: V gets the empty family, everything else the
    # set of members containing it (recomputing their intersection
    # reproduces the element)
    witnesses = []
    for i, s in enumerate(elements):
        if d[i] == arr.n:
            witnesses.append(())
        else:
            witnesses.append(
                tuple(a for a, sub in enumerate(arr.subspaces) if sub.contains(s))
            )
    return IntersectionPoset(arr, elements, d, leq, meet, witnesses)


@dataclass(frozen=True)
class DependentSet:
    indices: tuple[int, ...]
    defect: int  # sum of member codimensions minus codim of the meet


def _meet_of_members(poset: IntersectionPoset, indices) -> int:
    q = poset.top
    member_ids = [poset.index_of(poset.arr.subspaces[i]) for i in indices]
    for i in member_ids:
        q = poset.meet[q][i]
    return q


def set_defect(poset: IntersectionPoset, indices) -> int:
    """Σ codim(A_i) - codim(∩M); zero exactly for independent sets."""
    n = poset.n
    total = sum(n - (poset.arr.subspaces[i].dim - 1) for i in indices)
    return total - (n - poset.d[_meet_of_members(poset, indices)])


def minimal_dependent_sets(arr: Arrangement, poset: IntersectionPoset | None = None) -> list[DependentSet]:
    """Inclusion-minimal dependent subfamilies, by increasing size."""
    if poset is None:
        poset = build_poset(arr)
    t = len(arr.subspaces)
    found: list[DependentSet] = []
    for size in range(1, t + 1):
        for combo in combinations(range(t), size):
            cs = set(combo)
            if any(set(f.indices) <= cs for f in found):
                continue
            defect = set_defect(poset, combo)
            if defect != 0:
                found.append(DependentSet(combo, defect))
    return found


def is_c_arrangement(arr: Arrangement, c: int, poset: IntersectionPoset | None = None) -> bool:
    """Every member has projective codimension c and every intersection's
    codimension is a multiple of c (codimension reading)."""
    if c <= 0:
        raise ValueError("c must be positive")
    n = arr.n
    if any(n - (s.dim - 1) != c for s in arr.subspaces):
        return False
    if poset is None:
        poset = build_poset(arr)
    return all((n - di) % c == 0 for di in poset.d)


def poset_isomorphic(p: IntersectionPoset, q: IntersectionPoset) -> bool:
    """Existence of a bijection preserving order and d."""
    return _find_isomorphism(p, q) is not None


def _profile(poset: IntersectionPoset, i: int):
    below = sorted(poset.d[j] for j in range(len(poset.d)) if poset.leq[j][i] and j != i)
    above = sorted(poset.d[j] for j in range(len(poset.d)) if poset.leq[i][j] and j != i)
    return (poset.d[i], tuple(below), tuple(above))


def _find_isomorphism(p: IntersectionPoset, q: IntersectionPoset):
    if len(p.elements) != len(q.elements):
        return None
    pprof = [_profile(p, i) for i in range(len(p.elements))]
    qprof = [_profile(q, i) for i in range(len(q.elements))]
    if sorted(pprof) != sorted(qprof):
        return None
    m = len(p.elements)
    candidates = [[j for j in range(m) if qprof[j] == pprof[i]] for i in range(m)]
    order = sorted(range(m), key=lambda i: len(candidates[i]))
    mapping = [-1] * m
    used = [False] * m

    def consistent(i, j):
        for i2 in order:
            j2 = mapping[i2]
            if j2 < 0:
                continue
            if p.leq[i][i2] != q.leq[j][j2] or p.leq[i2][i] != q.leq[j2][j]:
                return False
        return True

    def backtrack(pos):
        if pos == m:
            return True
        i = order[pos]
        for j in candidates[i]:
            if not used[j] and consistent(i, j):
                mapping[i] = j
                used[j] = True
                if backtrack(pos + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    return list(mapping) if backtrack(0) else None


@dataclass
class EtaReport:
    passed: bool
    detail: str = ""


def verify_eta(arr: Arrangement, seed: int = 0) -> EtaReport:
    """Check that a generic section induces q ↦ q∩H, an order- and
    meet-respecting bijection Q_(0,n] → Q^H_[0,n-1] dropping d by one."""
    try:
        h = generic_hyperplane(arr, seed)
        sectioned = hyperplane_section(arr, h)
    except GenericityError as e:
        return EtaReport(False, f"genericity failure: {e}")
    poset = build_poset(arr)
    sposet = build_poset(sectioned)
    frame = section_coordinates(h)
    upper = [i for i in range(len(poset.elements)) if poset.d[i] >= 1]
    images = {}
    for i in upper:
        img = restrict_to_hyperplane(poset.elements[i], h, frame)
        if img.dim - 1 != poset.d[i] - 1:
            return EtaReport(False, f"dimension not lowered by one at element {i}")
        try:
            images[i] = sposet.index_of(img)
        except ValueError:
            return EtaReport(False, f"image of element {i} missing from sectioned poset")
    target = set(sposet.interval(0, sposet.n))
    if set(images.values()) != target or len(set(images.values())) != len(images):
        return EtaReport(False, "not a bijection onto Q^H_[0,n-1]")
    for i in upper:
        for j in upper:
            if poset.leq[i][j] != sposet.leq[images[i]][images[j]]:
                return EtaReport(False, f"order not preserved on pair ({i},{j})")
    return EtaReport(True)
