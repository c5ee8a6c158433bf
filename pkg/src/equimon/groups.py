"""Finite groups as dense multiplication tables, with subgroup machinery.

Groups are stored as full Cayley tables over element indices 0..n-1, with the
identity pinned at index 0.  Everything downstream (stabilizers, normalizers,
ideal products) iterates over all elements, so at desk scale (order <= 48)
tables are cheaper and simpler than generator words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

MAX_NAMED_ORDER = 48


class GroupTableError(ValueError):
    """A multiplication table failed validation."""


class NotClosed(GroupTableError):
    def __init__(self, row: int, col: int, value: int):
        super().__init__(f"entry table[{row}][{col}] = {value} is not an element index")
        self.row, self.col, self.value = row, col, value


class NoIdentity(GroupTableError):
    def __init__(self):
        super().__init__("table has no two-sided identity element")


class NoInverse(GroupTableError):
    def __init__(self, element: int):
        super().__init__(f"element {element} has no two-sided inverse")
        self.element = element


class NotAssociative(GroupTableError):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"associativity fails on triple ({a}, {b}, {c})")
        self.triple = (a, b, c)


class TooLarge(ValueError):
    def __init__(self, order: int):
        super().__init__(f"requested group order {order} exceeds the bound {MAX_NAMED_ORDER}")
        self.order = order


@dataclass(frozen=True)
class Group:
    """A finite group: names, Cayley table and inverse table, identity at index 0."""

    order: int
    element_names: tuple[str, ...]
    mult: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conjugate(self, h: int, g: int) -> int:
        """g^-1 h g."""
        return self.mult[self.mult[self.inv[g]][h]][g]

    def name(self, g: int) -> str:
        return self.element_names[g]

    def __repr__(self) -> str:
        return f"Group(order={self.order})"


@dataclass(frozen=True, order=True)
class Subgroup:
    """A subgroup as a sorted tuple of element indices of its parent group."""

    members: tuple[int, ...]

    def __contains__(self, g: int) -> bool:
        return g in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"Subgroup{self.members}"


@dataclass(frozen=True)
class SubgroupClass:
    """A full conjugacy class of subgroups with its canonical representative.

    The canonical representative is the member whose sorted element tuple is
    lexicographically least, so class comparisons are value comparisons.
    """

    members: frozenset[Subgroup]
    canonical_rep: Subgroup

    def __contains__(self, h: Subgroup) -> bool:
        return h in self.members

    def __len__(self) -> int:
        return len(self.members)


def build_group_from_table(names: list[str], table: list[list[int]]) -> Group:
    """Validate a raw multiplication table and return a Group.

    The identity is relocated to index 0 if it sits elsewhere.  Raises
    NotClosed / NoIdentity / NoInverse / NotAssociative naming the offending
    indices.
    """
    n = len(table)
    if n < 1:
        raise ValueError("table must have size >= 1")
    if len(names) != n:
        raise ValueError(f"{len(names)} names for a table of size {n}")
    if len(set(names)) != n:
        raise ValueError("element names must be distinct")
    for i, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, table is not square")
        for j, v in enumerate(row):
            if not (0 <= v < n):
                raise NotClosed(i, j, v)

    identity = None
    for e in range(n):
        if all(table[e][g] == g and table[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity()

    if identity != 0:
        # Relocate by swapping indices 0 and identity (the swap is an involution).
        perm = list(range(n))
        perm[0], perm[identity] = identity, 0
        names = [names[perm[i]] for i in range(n)]
        table = [[perm[table[perm[i]][perm[j]]] for j in range(n)] for i in range(n)]

    inv = []
    for g in range(n):
        g_inv = next((h for h in range(n) if table[g][h] == 0 and table[h][g] == 0), None)
        if g_inv is None:
            raise NoInverse(g)
        inv.append(g_inv)

    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise NotAssociative(a, b, c)

    return Group(
        order=n,
        element_names=tuple(names),
        mult=tuple(tuple(row) for row in table),
        inv=tuple(inv),
    )


def cyclic_group(n: int) -> Group:
    """Z_n with elements e, g, g2, ..., g{n-1} and g^i * g^j = g^(i+j mod n)."""
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    if n > MAX_NAMED_ORDER:
        raise TooLarge(n)
    names = ["e"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return build_group_from_table(names, table)


def dihedral_group(n: int) -> Group:
    """D_n of order 2n; element index i + n*a encodes r^i s^a, a in {0, 1}."""
    order = 2 * n
    if n < 1:
        raise ValueError("dihedral group parameter must be positive")
    if order > MAX_NAMED_ORDER:
        raise TooLarge(order)

    def mul(p, q):
        i, a = p % n, p // n
        j, b = q % n, q // n
        # r^i s^a r^j s^b = r^(i + (-1)^a j) s^(a+b)
        k = (i + (j if a == 0 else -j)) % n
        return k + n * ((a + b) % 2)

    names = [f"r{i}" for i in range(n)] + [f"sr{i}" for i in range(n)]
    names[0] = "e"
    table = [[mul(p, q) for q in range(order)] for p in range(order)]
    return build_group_from_table(names, table)


def symmetric_group(n: int) -> Group:
    """S_n with elements the permutations of 0..n-1 in lexicographic one-line order.

    Index 0 is the identity; the product p*q acts as the permutation p after q,
    matching the action convention (pq).x = p.(q.x).
    """
    if n < 1:
        raise ValueError("symmetric group parameter must be positive")
    order = 1
    for k in range(2, n + 1):
        order *= k
    if order > MAX_NAMED_ORDER:
        raise TooLarge(order)
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    names = ["".join(map(str, p)) for p in perms]
    table = [
        [index[tuple(p[q[k]] for k in range(n))] for q in perms]
        for p in perms
    ]
    return build_group_from_table(names, table)


def product_group(g1: Group, g2: Group) -> Group:
    """Direct product; element index i1 * |G2| + i2, names joined with '|'."""
    order = g1.order * g2.order
    if order > MAX_NAMED_ORDER:
        raise TooLarge(order)
    o2 = g2.order
    names = [f"{g1.name(i)}|{g2.name(j)}" for i in range(g1.order) for j in range(o2)]
    table = [
        [g1.mul(p // o2, q // o2) * o2 + g2.mul(p % o2, q % o2) for q in range(order)]
        for p in range(order)
    ]
    return build_group_from_table(names, table)


def build_named_group(spec) -> Group:
    """Build a group from a family spec.

    Specs are tuples: ("cyclic", n), ("dihedral", n), ("symmetric", n) or
    ("product", spec1, spec2).
    """
    family = spec[0]
    if family == "cyclic":
        return cyclic_group(spec[1])
    if family == "dihedral":
        return dihedral_group(spec[1])
    if family == "symmetric":
        return symmetric_group(spec[1])
    if family == "product":
        return product_group(build_named_group(spec[1]), build_named_group(spec[2]))
    raise ValueError(f"unknown group family {family!r}")


def is_subgroup(group: Group, members) -> bool:
    mset = set(members)
    if 0 not in mset:
        return False
    return all(
        group.inv[g] in mset and all(group.mult[g][h] in mset for h in mset)
        for g in mset
    )


def subgroup(group: Group, members) -> Subgroup:
    """Validate membership, closure and inverses, then build the Subgroup value."""
    if not is_subgroup(group, members):
        raise ValueError(f"{sorted(set(members))} is not a subgroup")
    return Subgroup(tuple(sorted(set(members))))


def trivial_subgroup() -> Subgroup:
    return Subgroup((0,))


def full_subgroup(group: Group) -> Subgroup:
    return Subgroup(tuple(group.elements()))


def subgroup_generated(group: Group, gens) -> Subgroup:
    """Smallest subgroup containing gens, by iterative closure."""
    members = {0}
    frontier = set(gens) - members
    for g in gens:
        if not (0 <= g < group.order):
            raise ValueError(f"generator {g} is not an element index")
    members |= frontier
    while frontier:
        new = set()
        for g in frontier:
            new.add(group.inv[g])
            for h in members:
                new.add(group.mult[g][h])
                new.add(group.mult[h][g])
        frontier = new - members
        members |= new
    return Subgroup(tuple(sorted(members)))


def conjugate_subgroup(group: Group, h: Subgroup, g: int) -> Subgroup:
    """{g^-1 t g : t in H}."""
    return Subgroup(tuple(sorted(group.conjugate(t, g) for t in h)))


def conjugacy_class_of_subgroup(group: Group, h: Subgroup) -> SubgroupClass:
    members = frozenset(conjugate_subgroup(group, h, g) for g in group.elements())
    return SubgroupClass(members=members, canonical_rep=min(members))


def n_conjugacy_class(group: Group, h: Subgroup, n: Subgroup) -> frozenset[Subgroup]:
    """Conjugates of H by elements of N only; always a subset of the full class."""
    return frozenset(conjugate_subgroup(group, h, g) for g in n)


def normalizer(group: Group, h: Subgroup) -> Subgroup:
    return Subgroup(
        tuple(g for g in group.elements() if conjugate_subgroup(group, h, g) == h)
    )


def subgroups_conjugate(group: Group, h: Subgroup, k: Subgroup) -> bool:
    if len(h) != len(k):
        return False
    return any(conjugate_subgroup(group, h, g) == k for g in group.elements())


def conj_leq(group: Group, h: Subgroup, k: Subgroup) -> bool:
    """True iff H is contained in some conjugate of K."""
    if len(h) > len(k):
        return False
    hset = set(h)
    return any(
        hset <= set(conjugate_subgroup(group, k, g)) for g in group.elements()
    )
