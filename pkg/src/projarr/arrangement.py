"""Arrangement data model, JSON I/O, and generic hyperplane sections.

An arrangement is a finite set of proper nonzero linear subspaces of
C^{n+1}, handled through exact rational bases.  The projective picture
(points of CP^n) is implicit: a subspace of linear dimension d+1 has
projective dimension d.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import (
    AmbientMismatch,
    Matrix,
    Subspace,
    kernel,
    make_matrix,
    rref,
    solve_rational,
    subspace_intersection,
)


class InputError(ValueError):
    """Invalid arrangement input (schema, rationals, subspace constraints)."""


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int  # n + 1
    subspaces: tuple[Subspace, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        # ambient_dim 1 (projective dimension 0) only arises for the empty
        # arrangement produced by sectioning; user input requires >= 2
        if self.ambient_dim < 1:
            raise InputError("ambient_dim must be positive")
        if self.ambient_dim < 2 and self.subspaces:
            raise InputError("ambient_dim must be at least 2")
        seen = set()
        for s in self.subspaces:
            if s.ambient_dim != self.ambient_dim:
                raise InputError("subspace ambient dimension mismatch")
            if s.dim == 0:
                raise InputError("zero subspace has empty projectivization")
            if s.dim >= self.ambient_dim:
                raise InputError("subspace must be proper")
            if s in seen:
                raise InputError("duplicate subspace")
            seen.add(s)
        if self.names and len(self.names) != len(self.subspaces):
            raise InputError("names do not match subspaces")
        if not self.names:
            object.__setattr__(
                self, "names", tuple(f"A{i}" for i in range(len(self.subspaces)))
            )

    @property
    def n(self) -> int:
        """Projective dimension of the ambient space."""
        return self.ambient_dim - 1


@dataclass(frozen=True)
class Hyperplane:
    functional: tuple[Fraction, ...]

    def __post_init__(self):
        if all(x == 0 for x in self.functional):
            raise ValueError("hyperplane functional must be nonzero")

    @property
    def ambient_dim(self) -> int:
        return len(self.functional)

    def vanishes_on(self, s: Subspace) -> bool:
        return all(
            sum(f * x for f, x in zip(self.functional, row)) == 0 for row in s.basis
        )

    def kernel_subspace(self) -> Subspace:
        rows = kernel(make_matrix([self.functional]), self.ambient_dim)
        return Subspace(self.ambient_dim, rref(rows))


def _parse_rational(x) -> Fraction:
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"malformed rational {x!r}: {e}") from None


def _parse_subspace(entry, ambient_dim: int) -> tuple[Subspace, str | None]:
    if not isinstance(entry, dict):
        raise InputError("subspace entry must be an object")
    name = entry.get("name")
    keys = {"span", "equations"} & set(entry)
    if len(keys) != 1:
        raise InputError("subspace needs exactly one of 'span' or 'equations'")
    rows = entry[next(iter(keys))]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("subspace rows must be a list of lists")
    parsed = [[_parse_rational(x) for x in r] for r in rows]
    for r in parsed:
        if len(r) != ambient_dim:
            raise InputError("subspace row length must equal ambient_dim")
    if "span" in keys:
        return Subspace.from_span(ambient_dim, parsed), name
    return Subspace.from_equations(ambient_dim, parsed), name


def parse_arrangement(text: str) -> Arrangement:
    """Parse and validate the JSON arrangement format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise InputError("top-level document must be an object")
    if not isinstance(doc.get("ambient_dim"), int):
        raise InputError("ambient_dim must be an integer")
    ambient_dim = doc["ambient_dim"]
    if ambient_dim < 2:
        raise InputError("ambient_dim must be at least 2")
    entries = doc.get("subspaces")
    if not isinstance(entries, list):
        raise InputError("subspaces must be a list")
    subspaces = []
    names = []
    for i, entry in enumerate(entries):
        s, name = _parse_subspace(entry, ambient_dim)
        subspaces.append(s)
        names.append(name if name is not None else f"A{i}")
    return Arrangement(ambient_dim, tuple(subspaces), tuple(names))


def serialize_arrangement(arr: Arrangement) -> str:
    doc = {
        "ambient_dim": arr.ambient_dim,
        "subspaces": [
            {"name": name, "span": [[str(x) for x in row] for row in s.basis]}
            for s, name in zip(arr.subspaces, arr.names)
        ],
    }
    return json.dumps(doc, indent=2)


def intersection_closure(arr: Arrangement) -> set[Subspace]:
    """All intersections of subfamilies of the arrangement, including V."""
    full = Subspace.full(arr.ambient_dim)
    closed = {full} | set(arr.subspaces)
    frontier = set(arr.subspaces)
    while frontier:
        new = set()
        for q in frontier:
            for a in arr.subspaces:
                meet = subspace_intersection(q, a)
                if meet not in closed:
                    new.add(meet)
        closed |= new
        frontier = new
    return closed


def generic_hyperplane(arr: Arrangement, seed: int = 0) -> Hyperplane:
    """A hyperplane whose functional vanishes on no nonzero intersection.

    Deterministic for a fixed seed; coefficient range grows per retry so
    termination is guaranteed (the bad set is a finite union of proper
    subspaces of the dual).
    """
    avoid = [q for q in intersection_closure(arr) if q.dim >= 1]
    rng = random.Random(seed)
    attempt = 0
    while True:
        attempt += 1
        bound = 10 * attempt
        coeffs = tuple(
            Fraction(rng.randint(-bound, bound)) for _ in range(arr.ambient_dim)
        )
        if all(x == 0 for x in coeffs):
            continue
        h = Hyperplane(coeffs)
        if not any(h.vanishes_on(q) for q in avoid):
            return h


class GenericityError(ValueError):
    """The supplied hyperplane is not generic for the arrangement."""


def section_coordinates(h: Hyperplane) -> Matrix:
    """Rows forming a rational basis of ker(h); the new coordinate frame."""
    return kernel(make_matrix([h.functional]), h.ambient_dim)


def restrict_to_hyperplane(s: Subspace, h: Hyperplane, frame: Matrix | None = None) -> Subspace:
    """s ∩ ker(h), re-coordinatized to the (ambient_dim - 1)-frame of ker(h)."""
    if frame is None:
        frame = section_coordinates(h)
    cut = subspace_intersection(s, Subspace(s.ambient_dim, frame))
    # express each basis vector in frame coordinates: frame^T · y = v
    cols = make_matrix(list(zip(*frame)))
    new_rows = []
    for v in cut.basis:
        y = solve_rational(cols, v)
        if y is None:
            raise RuntimeError("vector not in hyperplane frame")
        new_rows.append(y)
    return Subspace.from_span(len(frame), new_rows)


def hyperplane_section(arr: Arrangement, h: Hyperplane) -> Arrangement:
    """The induced arrangement {A ∩ H} inside H, in new coordinates.

    Requires h generic: no member (nor any intersection) may lie in H.
    Members whose section is the zero space (lines) are dropped, since
    their projectivization is empty.
    """
    if h.ambient_dim != arr.ambient_dim:
        raise AmbientMismatch("hyperplane ambient dimension mismatch")
    for q in intersection_closure(arr):
        if q.dim >= 1 and h.vanishes_on(q):
            raise GenericityError("hyperplane contains an intersection subspace")
    frame = section_coordinates(h)
    sections = []
    names = []
    for s, name in zip(arr.subspaces, arr.names):
        cut = restrict_to_hyperplane(s, h, frame)
        if cut.dim != s.dim - 1:
            raise GenericityError("section did not drop dimension by one")
        if cut.dim >= 1:
            sections.append(cut)
            names.append(name)
    return Arrangement(arr.ambient_dim - 1, tuple(sections), tuple(names))


def union_arrangement(a: Arrangement, b: Arrangement) -> Arrangement:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    subspaces = list(a.subspaces)
    names = list(a.names)
    for s, name in zip(b.subspaces, b.names):
        if s not in subspaces:
            subspaces.append(s)
            names.append(name)
    return Arrangement(a.ambient_dim, tuple(subspaces), tuple(names))
