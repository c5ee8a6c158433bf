"""Elementary collapsings: detection, classification and factorization.

An elementary collapsing merges exactly one orbit into another and drops
exactly one orbit from its image.  Two independent detectors are provided:

* the characterization route (`is_elementary_collapsing`): find an orbit O
  such that the map is injective off O while the image misses exactly one
  orbit;
* the kernel-shape route (`detect_by_kernel_shape`): find points x, y in
  distinct orbits whose induced pair set

      diagonal
      + {(g.x, g.y), (g.y, g.x)}
      + {(g.x, h.x), (h.x, g.x) : h^-1 g in G_y}

  equals the kernel of the map, compared as raw pair sets.

Both routes normalize to the same witness: the least pair (x, y) whose
partner y lies outside the missing orbit (a partner inside the missing orbit
would make the right-factorization through [z -> y] degenerate), plus the
least point z of the missing orbit whose stabilizer equals that of x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Subgroup, n_conjugacy_class, normalizer
from .gsets import GSet, Orbit, orbit_of_point, orbits, stabilizer
from .endos import EquivMap, compose, identity_map, kernel


class NotACollapsing(ValueError):
    pass


class StabilizersNotEqual(ValueError):
    def __init__(self, x: int, y: int):
        super().__init__(f"points {x} and {y} have different stabilizers")
        self.pair = (x, y)


@dataclass(frozen=True)
class CollapsingType:
    """The pair (H, [K]_{N_H}): the anchor stabilizer and the class of target
    stabilizers under conjugation by the normalizer of H only."""

    h: Subgroup
    k_class: frozenset[Subgroup]

    @property
    def k_rep(self) -> Subgroup:
        return min(self.k_class)


@dataclass(frozen=True)
class CollapsingWitness:
    """Points certifying a collapsing: x is merged onto y, orbit(z) is dropped."""

    x: int
    y: int
    z: int
    type: CollapsingType


def kernel_pairs(f: EquivMap) -> frozenset[tuple[int, int]]:
    return kernel(f).pairs()


def predicted_kernel_pairs(gset: GSet, x: int, y: int) -> frozenset[tuple[int, int]]:
    """The exact pair set a collapsing merging x onto y must have as kernel."""
    pairs: set[tuple[int, int]] = {(a, a) for a in gset.points()}
    act = gset.action
    g_y = set(stabilizer(gset, y))
    for g in gset.group.elements():
        a, b = act[g][x], act[g][y]
        pairs.add((a, b))
        pairs.add((b, a))
        for h in gset.group.elements():
            if gset.group.mul(gset.group.inv[h], g) in g_y:
                pairs.add((act[g][x], act[h][x]))
                pairs.add((act[h][x], act[g][x]))
    return frozenset(pairs)


def missing_orbits(f: EquivMap) -> list[Orbit]:
    img = set(f.word)
    return [o for o in orbits(f.gset) if img.isdisjoint(o.points)]


def _build_witness(f: EquivMap, x: int, y: int, missing: Orbit) -> CollapsingWitness:
    gset = f.gset
    hx = stabilizer(gset, x)
    z = next(p for p in missing.points if stabilizer(gset, p) == hx)
    # The target stabilizer always coincides with the stabilizer of the image
    # point; a violation here is an engine bug, not a malformed input.
    assert stabilizer(gset, y) == stabilizer(gset, f.word[x])
    k_class = n_conjugacy_class(gset.group, stabilizer(gset, y), normalizer(gset.group, hx))
    return CollapsingWitness(x=x, y=y, z=z, type=CollapsingType(h=hx, k_class=k_class))


def is_elementary_collapsing(f: EquivMap) -> CollapsingWitness | None:
    """Characterization-route detector.

    Scans for an orbit O with f injective off O; every x in O with a unique
    off-orbit partner y (f(y) = f(x)) yields a candidate pair, and candidates
    whose partner lies in the missing orbit are discarded.  Returns the least
    remaining (x, y), or None when the map is not an elementary collapsing.
    """
    gset = f.gset
    missing = missing_orbits(f)
    if len(missing) != 1:
        return None
    m_points = set(missing[0].points)

    candidates: list[tuple[int, int]] = []
    orep = orbit_of_point(gset)
    for o in orbits(gset):
        rest = [p for p in gset.points() if orep[p] != o.representative]
        seen = [f.word[p] for p in rest]
        if len(set(seen)) != len(seen):
            continue
        value_to_point = {f.word[p]: p for p in rest}
        for x in o.points:
            y = value_to_point.get(f.word[x])
            if y is None or y in m_points:
                continue
            candidates.append((x, y))
    if not candidates:
        return None
    x, y = min(candidates)
    return _build_witness(f, x, y, missing[0])


def detect_by_kernel_shape(f: EquivMap) -> CollapsingWitness | None:
    """Kernel-shape detector: independent oracle for is_elementary_collapsing.

    Tries every cross-orbit pair (x, y) with f(x) = f(y) and compares the
    predicted pair set with the actual kernel, as sets of ordered pairs.
    """
    gset = f.gset
    actual = kernel_pairs(f)
    orep = orbit_of_point(gset)
    valid: list[tuple[int, int]] = []
    for x in gset.points():
        for y in gset.points():
            if orep[x] == orep[y] or f.word[x] != f.word[y]:
                continue
            if predicted_kernel_pairs(gset, x, y) == actual:
                valid.append((x, y))
    if not valid:
        return None
    missing = missing_orbits(f)
    assert len(missing) == 1
    m_points = set(missing[0].points)
    filtered = [p for p in valid if p[1] not in m_points]
    assert filtered, "a valid witness pair outside the missing orbit must exist"
    x, y = min(filtered)
    return _build_witness(f, x, y, missing[0])


def collapsing_type(f: EquivMap) -> CollapsingType:
    w = is_elementary_collapsing(f)
    if w is None:
        raise NotACollapsing(f"{f.word} is not an elementary collapsing")
    return w.type


def fixing_collapsing(gset: GSet, x: int, y: int) -> EquivMap:
    """The map [x -> y]: sends g.x to g.y and fixes everything else.

    Requires stabilizer(x) <= stabilizer(y) literally.  When x and y lie in
    distinct orbits the result is a fixing elementary collapsing; when they
    share an orbit it is the bijective shift (x -> y).
    """
    from .endos import StabilizerNotContained

    if not set(stabilizer(gset, x)) <= set(stabilizer(gset, y)):
        raise StabilizerNotContained(x, y)
    word = list(gset.points())
    for g in gset.group.elements():
        word[gset.action[g][x]] = gset.action[g][y]
    return EquivMap(gset=gset, word=tuple(word))


def orbit_swap(gset: GSet, x: int, y: int) -> EquivMap:
    """The bijection (x <-> y): exchanges g.x with g.y, identity elsewhere.

    Exists exactly when the stabilizers are literally equal; for points in a
    shared orbit only the degenerate x = y case is defined.
    """
    if stabilizer(gset, x) != stabilizer(gset, y):
        raise StabilizersNotEqual(x, y)
    if x == y:
        return identity_map(gset)
    if orbit_of_point(gset)[x] == orbit_of_point(gset)[y]:
        raise ValueError(f"points {x} and {y} share an orbit; swap is undefined")
    word = list(gset.points())
    for g in gset.group.elements():
        word[gset.action[g][x]] = gset.action[g][y]
        word[gset.action[g][y]] = gset.action[g][x]
    return EquivMap(gset=gset, word=tuple(word))


def is_fixing_collapsing(f: EquivMap) -> tuple[int, int] | None:
    """When f is an elementary collapsing fixing everything off one orbit,
    return the least (x, y) with f = [x -> y]."""
    gset = f.gset
    moved = [p for p in gset.points() if f.word[p] != p]
    if not moved:
        return None
    o = orbits(gset)[_orbit_index(gset, moved[0])]
    if set(moved) != set(o.points):
        return None
    orep = orbit_of_point(gset)
    for x in o.points:
        y = f.word[x]
        if orep[y] == orep[x]:
            return None  # bijective shift inside one orbit, not a collapsing
        if fixing_collapsing(gset, x, y).word == f.word:
            if __debug__:
                assert is_elementary_collapsing(f) is not None
            return (x, y)
    return None


def _orbit_index(gset: GSet, p: int) -> int:
    rep = orbit_of_point(gset)[p]
    for i, o in enumerate(orbits(gset)):
        if o.representative == rep:
            return i
    raise KeyError(p)


def bijective_support(f: EquivMap) -> EquivMap:
    """The bijection agreeing with f off the collapsed orbit and redirecting
    that orbit onto the dropped orbit (g.x goes to g.z)."""
    w = is_elementary_collapsing(f)
    if w is None:
        raise NotACollapsing(f"{f.word} is not an elementary collapsing")
    gset = f.gset
    assert len(orbits(gset)[_orbit_index(gset, w.x)]) == len(
        orbits(gset)[_orbit_index(gset, w.z)]
    )
    word = list(f.word)
    for g in gset.group.elements():
        word[gset.action[g][w.x]] = gset.action[g][w.z]
    support = EquivMap(gset=gset, word=tuple(word))
    assert support.is_bijective()
    return support


@dataclass(frozen=True)
class RFactorization:
    """f = compose(fixing, f) and fixing = compose(f, comap)."""

    fixing: EquivMap
    tau: EquivMap
    comap: EquivMap


def r_factor_through_fixing(monoid, f: EquivMap) -> RFactorization:
    """Factor a collapsing through the fixing collapsing [z -> y] in its R-class.

    z is the dropped orbit's witness point and y the witness partner; the
    returned comap m satisfies fixing = f o m, built from the inverse of the
    bijection f restricted off the collapsed orbit.
    """
    w = is_elementary_collapsing(f)
    if w is None:
        raise NotACollapsing(f"{f.word} is not an elementary collapsing")
    gset = f.gset
    fixing = fixing_collapsing(gset, w.z, w.y)

    orep = orbit_of_point(gset)
    inv_f = {f.word[p]: p for p in gset.points() if orep[p] != orep[w.x]}
    m_word: list[int | None] = [None] * gset.n_points
    for t in gset.points():
        if orep[t] != orep[w.z]:
            m_word[t] = inv_f[t]
    for g in gset.group.elements():
        m_word[gset.action[g][w.z]] = inv_f[gset.action[g][w.y]]
    comap = EquivMap(gset=gset, word=tuple(m_word))

    assert comap.word in monoid.index
    assert compose(fixing, f).word == f.word
    assert compose(f, comap).word == fixing.word
    return RFactorization(fixing=fixing, tau=f, comap=comap)


def all_collapsings(monoid) -> list[tuple[int, CollapsingWitness]]:
    """Census of every elementary collapsing in the monoid, by element id."""
    out = []
    for i, f in enumerate(monoid.elements):
        w = is_elementary_collapsing(f)
        if w is not None:
            out.append((i, w))
    return out


def witness_as_dict(monoid, element_id: int, w: CollapsingWitness) -> dict:
    """JSON-friendly form of one census entry."""
    from .schemas import format_word

    f = monoid.elements[element_id]
    gset = monoid.gset
    names = gset.group.element_names
    return {
        "element": format_word(gset, f.word),
        "x": w.x,
        "y": w.y,
        "z": w.z,
        "H": [names[g] for g in w.type.h],
        "K_class": sorted([names[g] for g in k] for k in w.type.k_class),
        "fixing": is_fixing_collapsing(f) is not None,
    }
