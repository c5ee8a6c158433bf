"""Equivariant transformations of a finite group action.

A transformation is stored as a dense image word: word[x] is the image of
point x.  A map commuting with the action is determined by where it sends one
representative of each orbit, and a representative x may be sent to y exactly
when the stabilizer of x is contained in the stabilizer of y.  That criterion
drives construction, enumeration and the closed-form count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import full_subgroup
from .gsets import GSet, is_invariant_subset, orbit, orbit_of_point, orbits, stabilizer

DEFAULT_ENUMERATION_CAP = 10**6


class NotEquivariant(ValueError):
    def __init__(self, g: int, x: int):
        super().__init__(f"word breaks equivariance at g={g}, x={x}")
        self.pair = (g, x)


class StabilizerNotContained(ValueError):
    def __init__(self, x: int, target: int):
        super().__init__(
            f"no equivariant map can send {x} to {target}: "
            f"stabilizer({x}) is not contained in stabilizer({target})"
        )
        self.pair = (x, target)


class TooMany(ValueError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"monoid has {count} elements, above the cap {cap}")
        self.count = count
        self.cap = cap


class DomainNotInvariant(ValueError):
    pass


class NotInjective(ValueError):
    pass


class NotEquivariantOnDomain(ValueError):
    pass


@dataclass(frozen=True)
class EquivMap:
    """An equivariant transformation as an image word over one GSet."""

    gset: GSet
    word: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.word[x]

    def is_bijective(self) -> bool:
        return len(set(self.word)) == len(self.word)

    def __repr__(self) -> str:
        return f"EquivMap{self.word}"


@dataclass(frozen=True)
class KernelPartition:
    """Partition of the points by equal image value, blocks ordered by least element."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_word(cls, word) -> "KernelPartition":
        by_value: dict[int, list[int]] = {}
        for x, v in enumerate(word):
            by_value.setdefault(v, []).append(x)
        return cls(tuple(sorted((tuple(b) for b in by_value.values()), key=lambda b: b[0])))

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def same_block(self, x: int, y: int) -> bool:
        return self.block_of(x) == self.block_of(y)

    def pairs(self) -> frozenset[tuple[int, int]]:
        """The partition as a set of related ordered pairs."""
        return frozenset((a, b) for blk in self.blocks for a in blk for b in blk)


def make_map(gset: GSet, word) -> EquivMap:
    """Validate a word against the action and wrap it."""
    word = tuple(word)
    if len(word) != gset.n_points:
        raise ValueError(f"word length {len(word)} does not match {gset.n_points} points")
    for x, v in enumerate(word):
        if not (0 <= v < gset.n_points):
            raise ValueError(f"word[{x}] = {v} is not a point index")
    for g in gset.group.elements():
        for x in gset.points():
            if word[gset.action[g][x]] != gset.action[g][word[x]]:
                raise NotEquivariant(g, x)
    return EquivMap(gset=gset, word=word)


def identity_map(gset: GSet) -> EquivMap:
    return EquivMap(gset=gset, word=tuple(gset.points()))


def from_representative_images(gset: GSet, assignment: dict[int, int]) -> EquivMap:
    """The unique equivariant extension of an assignment on orbit representatives.

    Requires stabilizer(rep) <= stabilizer(target) literally for every orbit
    representative; under that containment the extension f(g.rep) = g.target
    cannot conflict (asserted while filling the word).
    """
    reps = [o.representative for o in orbits(gset)]
    if set(assignment) != set(reps):
        raise ValueError("assignment must be keyed by exactly the orbit representatives")
    word: list[int | None] = [None] * gset.n_points
    for rep in reps:
        target = assignment[rep]
        if not set(stabilizer(gset, rep)) <= set(stabilizer(gset, target)):
            raise StabilizerNotContained(rep, target)
        for g in gset.group.elements():
            slot = gset.action[g][rep]
            value = gset.action[g][target]
            assert word[slot] is None or word[slot] == value
            word[slot] = value
    return EquivMap(gset=gset, word=tuple(word))  # total by orbit coverage


def valid_targets(gset: GSet, x: int) -> list[int]:
    """Points y with stabilizer(x) <= stabilizer(y), the legal images of x."""
    hx = set(stabilizer(gset, x))
    return [y for y in gset.points() if hx <= set(stabilizer(gset, y))]


def count_endos(gset: GSet) -> int:
    """Closed-form size of the monoid: product over orbit reps of #valid targets."""
    total = 1
    for o in orbits(gset):
        total *= len(valid_targets(gset, o.representative))
    return total


def enumerate_endos(gset: GSet, cap: int = DEFAULT_ENUMERATION_CAP) -> list[EquivMap]:
    """All equivariant transformations in lexicographic word order.

    The count is checked against the cap before any enumeration happens.
    Nesting the representative target choices in ascending representative
    order yields words directly in lexicographic order.
    """
    predicted = count_endos(gset)
    if predicted > cap:
        raise TooMany(predicted, cap)
    reps = [o.representative for o in orbits(gset)]
    choices = [valid_targets(gset, r) for r in reps]
    out = []
    for combo in itertools.product(*choices):
        word: list[int] = [0] * gset.n_points
        for rep, target in zip(reps, combo):
            for g in gset.group.elements():
                word[gset.action[g][rep]] = gset.action[g][target]
        out.append(EquivMap(gset=gset, word=tuple(word)))
    assert len(out) == predicted
    return out


def compose(f: EquivMap, g: EquivMap) -> EquivMap:
    """f after g; equivariant by construction."""
    if f.gset is not g.gset and f.gset != g.gset:
        raise ValueError("maps live on different G-sets")
    word = tuple(f.word[v] for v in g.word)
    if __debug__:
        x = f.gset
        assert all(
            word[x.action[a][p]] == x.action[a][word[p]]
            for a in x.group.elements()
            for p in x.points()
        )
    return EquivMap(gset=f.gset, word=word)


def kernel(f: EquivMap) -> KernelPartition:
    return KernelPartition.from_word(f.word)


def image(f: EquivMap) -> tuple[int, ...]:
    img = tuple(sorted(set(f.word)))
    assert is_invariant_subset(f.gset, img)
    return img


def fixed_points(f: EquivMap) -> tuple[int, ...]:
    return tuple(x for x in f.gset.points() if f.word[x] == x)


def units(gset: GSet, cap: int = DEFAULT_ENUMERATION_CAP) -> list[EquivMap]:
    """The group of units: all bijective equivariant transformations."""
    return [f for f in enumerate_endos(gset, cap=cap) if f.is_bijective()]


def is_valid_constant(gset: GSet, c: int) -> bool:
    """A constant map at c is equivariant exactly when every group element fixes c."""
    return stabilizer(gset, c) == full_subgroup(gset.group)


def constant_maps(gset: GSet) -> list[EquivMap]:
    return [
        EquivMap(gset=gset, word=(c,) * gset.n_points)
        for c in gset.points()
        if is_valid_constant(gset, c)
    ]


def exists_map_sending(gset: GSet, x: int, y: int) -> tuple[bool, EquivMap | None]:
    """Whether some equivariant map sends x to y, with a deterministic witness.

    Possible exactly when stabilizer(x) <= stabilizer(y).  The witness sends
    the orbit of x onto the orbit of y through x -> y and fixes every other
    orbit (the identity is always a legal choice elsewhere).
    """
    if not set(stabilizer(gset, x)) <= set(stabilizer(gset, y)):
        return False, None
    rep_x = orbit_of_point(gset)[x]
    g_to_rep = next(g for g in gset.group.elements() if gset.action[g][x] == rep_x)
    assignment = {o.representative: o.representative for o in orbits(gset)}
    assignment[rep_x] = gset.action[g_to_rep][y]
    witness = from_representative_images(gset, assignment)
    assert witness.word[x] == y
    return True, witness


def exists_bijection_sending(gset: GSet, x: int, y: int) -> tuple[bool, EquivMap | None]:
    """Whether some bijective equivariant map sends x to y (stabilizers equal)."""
    if stabilizer(gset, x) != stabilizer(gset, y):
        return False, None
    orep = orbit_of_point(gset)
    word = list(gset.points())
    if orep[x] == orep[y]:
        # Shift within one orbit: g.x -> g.y.
        for g in gset.group.elements():
            word[gset.action[g][x]] = gset.action[g][y]
    else:
        # Swap the two orbits: g.x <-> g.y.
        for g in gset.group.elements():
            word[gset.action[g][x]] = gset.action[g][y]
            word[gset.action[g][y]] = gset.action[g][x]
    witness = EquivMap(gset=gset, word=tuple(word))
    assert witness.is_bijective() and witness.word[x] == y
    return True, witness


def extend_to_bijection(gset: GSet, domain, partial: dict[int, int]) -> EquivMap:
    """Extend an injective equivariant partial map to a bijective one.

    Works box by box: inside each box the orbits missing from the domain are
    matched, in least-point order, with the orbits missing from the image,
    pairing representatives that have literally equal stabilizers and
    extending equivariantly along each matched orbit.
    """
    from .gsets import boxes  # local import keeps module load order simple

    dom = set(domain)
    if set(partial) != dom:
        raise ValueError("partial map must be defined exactly on the domain")
    if not is_invariant_subset(gset, dom):
        raise DomainNotInvariant(f"domain {sorted(dom)} is not closed under the action")
    values = list(partial.values())
    if len(set(values)) != len(values):
        raise NotInjective("partial map repeats a value")
    for g in gset.group.elements():
        for x in dom:
            if partial[gset.action[g][x]] != gset.action[g][partial[x]]:
                raise NotEquivariantOnDomain(f"violated at g={g}, x={x}")

    img = set(values)
    word: list[int | None] = [None] * gset.n_points
    for x in dom:
        word[x] = partial[x]

    orep = orbit_of_point(gset)
    for box in boxes(gset):
        missing_dom = sorted(
            {orep[x] for x in box.points if x not in dom}
        )
        missing_img = sorted(
            {orep[x] for x in box.points if x not in img}
        )
        assert len(missing_dom) == len(missing_img)
        if not missing_dom:
            continue
        # Representatives with one shared literal stabilizer per box.
        h = stabilizer(gset, min(missing_dom + missing_img))
        src = [
            next(p for p in orbit(gset, r).points if stabilizer(gset, p) == h)
            for r in missing_dom
        ]
        dst = [
            next(p for p in orbit(gset, r).points if stabilizer(gset, p) == h)
            for r in missing_img
        ]
        for s, d in zip(src, dst):
            for g in gset.group.elements():
                word[gset.action[g][s]] = gset.action[g][d]

    result = EquivMap(gset=gset, word=tuple(word))
    assert result.is_bijective()
    if __debug__:
        make_map(gset, result.word)
        assert all(result.word[x] == partial[x] for x in dom)
    return result
