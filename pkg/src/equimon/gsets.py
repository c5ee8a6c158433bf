"""Finite group actions: validation, orbits, stabilizers and stabilizer boxes.

A GSet stores the full |G| x |X| action table, so the two action axioms are
checked directly at construction.  All queries are pure functions of immutable
values and are memoized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .groups import (
    Group,
    Subgroup,
    SubgroupClass,
    conj_leq,
    conjugacy_class_of_subgroup,
)


class ActionError(ValueError):
    """An action table failed validation."""


class IdentityAxiomViolated(ActionError):
    def __init__(self, x: int):
        super().__init__(f"identity row moves point {x}")
        self.point = x


class CompatibilityViolated(ActionError):
    def __init__(self, g: int, h: int, x: int):
        super().__init__(f"g.(h.x) != (gh).x for g={g}, h={h}, x={x}")
        self.triple = (g, h, x)


@dataclass(frozen=True)
class GSet:
    """A validated action of a finite group on a finite point set."""

    group: Group
    n_points: int
    point_names: tuple[str, ...]
    action: tuple[tuple[int, ...], ...]

    def points(self) -> range:
        return range(self.n_points)

    def apply(self, g: int, x: int) -> int:
        return self.action[g][x]

    def __repr__(self) -> str:
        return f"GSet(|G|={self.group.order}, |X|={self.n_points})"


@dataclass(frozen=True)
class Orbit:
    points: tuple[int, ...]
    representative: int

    def __contains__(self, x: int) -> bool:
        return x in self.points

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Box:
    """All points whose stabilizer lies in one conjugacy class of subgroups."""

    subgroup_class: SubgroupClass
    points: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self.points


def build_gset(group: Group, action_table, point_names=None) -> GSet:
    """Validate both action axioms and return the GSet.

    Raises IdentityAxiomViolated / CompatibilityViolated naming the offender.
    """
    rows = [tuple(row) for row in action_table]
    if len(rows) != group.order:
        raise ValueError(f"action table has {len(rows)} rows for a group of order {group.order}")
    if not rows or not rows[0]:
        raise ValueError("point set must be nonempty")
    n = len(rows[0])
    for g, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"action row {g} has length {len(row)}, expected {n}")
        for x, y in enumerate(row):
            if not (0 <= y < n):
                raise ValueError(f"action[{g}][{x}] = {y} is not a point index")
    for x in range(n):
        if rows[0][x] != x:
            raise IdentityAxiomViolated(x)
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            for x in range(n):
                if rows[gh][x] != rows[g][rows[h][x]]:
                    raise CompatibilityViolated(g, h, x)
    if point_names is None:
        point_names = tuple(str(x) for x in range(n))
    else:
        point_names = tuple(point_names)
        if len(point_names) != n:
            raise ValueError("point_names length does not match the action table")
    return GSet(group=group, n_points=n, point_names=point_names, action=tuple(rows))


def build_coset_gset(group: Group, subgroups: list[Subgroup]) -> GSet:
    """Disjoint union of left coset spaces G/H_i, one orbit per listed subgroup.

    Within each orbit, cosets are ordered by their least member, so the
    identity coset H_i comes first and its stabilizer is exactly H_i.
    """
    points: list[frozenset[int]] = []
    names: list[str] = []
    blocks: list[list[int]] = []
    for i, h in enumerate(subgroups):
        cosets = {frozenset(group.mul(g, t) for t in h) for g in group.elements()}
        ordered = sorted(cosets, key=min)
        base = len(points)
        points.extend(ordered)
        names.extend(f"o{i}.{group.name(min(c))}" for c in ordered)
        blocks.append(list(range(base, base + len(ordered))))

    # The same coset set may appear in several orbits, so resolve per block.
    action = []
    for g in group.elements():
        row = []
        for block in blocks:
            local = {points[p]: p for p in block}
            for p in block:
                moved = frozenset(group.mul(g, t) for t in points[p])
                row.append(local[moved])
        action.append(row)
    return build_gset(group, action, names)


@cache
def orbit_of_point(gset: GSet) -> tuple[int, ...]:
    """Map each point to the representative (least point) of its orbit."""
    rep = list(range(gset.n_points))
    for x in gset.points():
        r = min(gset.action[g][x] for g in gset.group.elements())
        rep[x] = r
    return tuple(rep)


def orbit(gset: GSet, x: int) -> Orbit:
    pts = sorted({gset.action[g][x] for g in gset.group.elements()})
    return Orbit(points=tuple(pts), representative=pts[0])


@cache
def orbits(gset: GSet) -> tuple[Orbit, ...]:
    """All orbits, ordered by least representative."""
    seen: set[int] = set()
    out = []
    for x in gset.points():
        if x not in seen:
            o = orbit(gset, x)
            seen.update(o.points)
            out.append(o)
    return tuple(out)


@cache
def stabilizer(gset: GSet, x: int) -> Subgroup:
    return Subgroup(tuple(g for g in gset.group.elements() if gset.action[g][x] == x))


@cache
def boxes(gset: GSet) -> tuple[Box, ...]:
    """Partition of the points by conjugacy class of their stabilizer.

    Boxes are ordered by least point.  The classes present form the stabilizer
    class set of the action.
    """
    by_class: dict[Subgroup, list[int]] = {}
    class_of: dict[Subgroup, SubgroupClass] = {}
    for x in gset.points():
        h = stabilizer(gset, x)
        cls = class_of.get(h)
        if cls is None:
            cls = conjugacy_class_of_subgroup(gset.group, h)
            for member in cls.members:
                class_of[member] = cls
        by_class.setdefault(cls.canonical_rep, []).append(x)
    out = []
    for rep, pts in by_class.items():
        out.append(Box(subgroup_class=class_of[rep], points=tuple(sorted(pts))))
    out.sort(key=lambda b: b.points[0])
    return tuple(out)


def stabilizer_classes(gset: GSet) -> tuple[SubgroupClass, ...]:
    """Conjugacy classes realized by stabilizers, sorted by subgroup size then value."""
    classes = {b.subgroup_class.canonical_rep: b.subgroup_class for b in boxes(gset)}
    return tuple(
        classes[rep] for rep in sorted(classes, key=lambda r: (len(r), r.members))
    )


def box_leq(gset: GSet, b1: Box, b2: Box) -> bool:
    """Order on boxes induced by conjugacy-containment of their classes."""
    return conj_leq(gset.group, b1.subgroup_class.canonical_rep, b2.subgroup_class.canonical_rep)


def box_representatives(gset: GSet, box: Box) -> list[int]:
    """One point per orbit in the box, all with literally equal stabilizers.

    The first orbit's representative fixes the common subgroup H; every later
    orbit contributes its least point whose stabilizer equals H (one exists
    because stabilizers along an orbit run over the whole conjugacy class).
    """
    reps = []
    h: Subgroup | None = None
    seen_orbits: set[int] = set()
    orep = orbit_of_point(gset)
    for x in box.points:
        if orep[x] in seen_orbits:
            continue
        seen_orbits.add(orep[x])
        if h is None:
            h = stabilizer(gset, x)
            reps.append(x)
        else:
            match = next(
                p for p in orbit(gset, x).points if stabilizer(gset, p) == h
            )
            reps.append(match)
    return reps


def is_invariant_subset(gset: GSet, points) -> bool:
    pts = set(points)
    return all(gset.action[g][x] in pts for x in pts for g in gset.group.elements())
