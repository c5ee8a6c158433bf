"""Green's relations and eggbox structure of a monoid of equivariant maps.

The monoid is materialized as a table of image words.  L is decided by the
kernel criterion (equal kernels) with a brute-force principal-ideal oracle
available for cross-checks; R has no structural shortcut and is decided by
right-ideal equality, with ideals computed in bulk through numpy gathers.
Ideal membership sets are kept as fixed-width membership vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .endos import DEFAULT_ENUMERATION_CAP, EquivMap, enumerate_endos, kernel
from .gsets import GSet


class UnsupportedFormat(ValueError):
    def __init__(self, fmt: str):
        super().__init__(f"unsupported eggbox format {fmt!r}; use ascii, dot or json")
        self.format = fmt


def kernel_signature(word) -> tuple[int, ...]:
    """First-occurrence labelling of the word values; equal iff kernels are equal."""
    labels: dict[int, int] = {}
    return tuple(labels.setdefault(v, len(labels)) for v in word)


class MonoidTable:
    """The full monoid, with cached ideal machinery over element ids."""

    def __init__(self, gset: GSet, elements: list[EquivMap]):
        self.gset = gset
        self.elements: tuple[EquivMap, ...] = tuple(elements)
        self.index: dict[tuple[int, ...], int] = {
            f.word: i for i, f in enumerate(self.elements)
        }
        self.size = len(self.elements)
        self._words = np.array([f.word for f in self.elements], dtype=np.int32)

    @classmethod
    def build(cls, gset: GSet, cap: int = DEFAULT_ENUMERATION_CAP) -> "MonoidTable":
        return cls(gset, enumerate_endos(gset, cap=cap))

    def id_of(self, f: EquivMap) -> int:
        return self.index[f.word]

    def compose_ids(self, i: int, j: int) -> int:
        """Id of elements[i] after elements[j]."""
        w = self._words
        return self.index[tuple(int(v) for v in w[i][w[j]])]

    @cached_property
    def _row_ids(self):
        """Vectorized word-row -> element-id lookup via lexicographic search."""
        n, m = self._words.shape
        keys = np.ascontiguousarray(self._words).view(
            np.dtype((np.void, self._words.dtype.itemsize * m))
        ).ravel()
        order = np.argsort(keys)
        sorted_keys = keys[order]

        def lookup(rows: np.ndarray) -> np.ndarray:
            q = np.ascontiguousarray(rows.astype(self._words.dtype)).view(
                np.dtype((np.void, self._words.dtype.itemsize * m))
            ).ravel()
            pos = np.searchsorted(sorted_keys, q)
            return order[pos]

        return lookup

    @cached_property
    def right_ideal_members(self) -> np.ndarray:
        """Boolean matrix: row f marks {f o s : s in monoid} by element id."""
        n = self.size
        out = np.zeros((n, n), dtype=bool)
        w = self._words
        for i in range(n):
            ids = self._row_ids(w[i][w])
            out[i, ids] = True
        return out

    @cached_property
    def left_ideal_members(self) -> np.ndarray:
        """Boolean matrix: row f marks {s o f : s in monoid} by element id."""
        n = self.size
        out = np.zeros((n, n), dtype=bool)
        w = self._words
        for i in range(n):
            ids = self._row_ids(w[:, w[i]])
            out[i, ids] = True
        return out

    @cached_property
    def right_ideal_keys(self) -> list[bytes]:
        return [np.packbits(row).tobytes() for row in self.right_ideal_members]

    @cached_property
    def left_ideal_keys(self) -> list[bytes]:
        return [np.packbits(row).tobytes() for row in self.left_ideal_members]

    @cached_property
    def kernel_keys(self) -> list[tuple[int, ...]]:
        return [kernel_signature(f.word) for f in self.elements]

    def two_sided_ideal_members(self, i: int) -> np.ndarray:
        """Membership vector of {s1 o f o s2}: union of left ideals over the right ideal."""
        rs = np.flatnonzero(self.right_ideal_members[i])
        return np.logical_or.reduce(self.left_ideal_members[rs])


def principal_left_ideal(monoid: MonoidTable, f: EquivMap) -> set[int]:
    """{s o f : s in monoid} as element ids; contains f itself."""
    return set(np.flatnonzero(monoid.left_ideal_members[monoid.id_of(f)]).tolist())


def principal_right_ideal(monoid: MonoidTable, f: EquivMap) -> set[int]:
    """{f o s : s in monoid} as element ids."""
    return set(np.flatnonzero(monoid.right_ideal_members[monoid.id_of(f)]).tolist())


def two_sided_ideal(monoid: MonoidTable, f: EquivMap) -> set[int]:
    """{s1 o f o s2 : s1, s2 in monoid} as element ids."""
    return set(np.flatnonzero(monoid.two_sided_ideal_members(monoid.id_of(f))).tolist())


def l_related(monoid: MonoidTable, f: EquivMap, g: EquivMap, oracle: bool = False) -> bool:
    """Left equivalence.  Primary: equal kernels.  Oracle: equal left ideals."""
    i, j = monoid.id_of(f), monoid.id_of(g)
    if oracle:
        return monoid.left_ideal_keys[i] == monoid.left_ideal_keys[j]
    return monoid.kernel_keys[i] == monoid.kernel_keys[j]


def r_related(monoid: MonoidTable, f: EquivMap, g: EquivMap) -> bool:
    i, j = monoid.id_of(f), monoid.id_of(g)
    return monoid.right_ideal_keys[i] == monoid.right_ideal_keys[j]


def h_related(monoid: MonoidTable, f: EquivMap, g: EquivMap) -> bool:
    return l_related(monoid, f, g) and r_related(monoid, f, g)


def d_related(monoid: MonoidTable, f: EquivMap, g: EquivMap) -> bool:
    """True when some element is L-related to f and R-related to g."""
    i, j = monoid.id_of(f), monoid.id_of(g)
    ki = monoid.kernel_keys[i]
    rj = monoid.right_ideal_keys[j]
    return any(
        monoid.kernel_keys[c] == ki and monoid.right_ideal_keys[c] == rj
        for c in range(monoid.size)
    )


def j_related(monoid: MonoidTable, f: EquivMap, g: EquivMap) -> bool:
    i, j = monoid.id_of(f), monoid.id_of(g)
    return bool(
        np.array_equal(monoid.two_sided_ideal_members(i), monoid.two_sided_ideal_members(j))
    )


def _partition_by_key(keys) -> tuple[tuple[int, ...], ...]:
    groups: dict[object, list[int]] = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    return tuple(sorted((tuple(g) for g in groups.values()), key=lambda c: c[0]))


def _union_find_partition(size: int, groups) -> tuple[tuple[int, ...], ...]:
    parent = list(range(size))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for grp in groups:
        for other in grp[1:]:
            ra, rb = find(grp[0]), find(other)
            if ra != rb:
                parent[rb] = ra
    classes: dict[int, list[int]] = {}
    for i in range(size):
        classes.setdefault(find(i), []).append(i)
    return tuple(sorted((tuple(c) for c in classes.values()), key=lambda c: c[0]))


@dataclass(frozen=True)
class EggboxGrid:
    """One D-class: rows are R-classes, columns are L-classes, cells are H-classes."""

    d_class: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    cells: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GreenStructure:
    monoid: MonoidTable
    l_classes: tuple[tuple[int, ...], ...]
    r_classes: tuple[tuple[int, ...], ...]
    h_classes: tuple[tuple[int, ...], ...]
    d_classes: tuple[tuple[int, ...], ...]
    j_classes: tuple[tuple[int, ...], ...]
    eggbox: tuple[EggboxGrid, ...]


def green_structure(monoid: MonoidTable) -> GreenStructure:
    """All five partitions plus one eggbox grid per D-class.

    Classes and grid axes are ordered by least element id, which is
    lexicographic word order, so every emitted artifact is reproducible.
    """
    n = monoid.size
    l_classes = _partition_by_key(monoid.kernel_keys)
    r_classes = _partition_by_key(monoid.right_ideal_keys)
    h_classes = _partition_by_key(
        list(zip(monoid.kernel_keys, monoid.right_ideal_keys))
    )
    d_classes = _union_find_partition(n, list(l_classes) + list(r_classes))
    j_keys = {}
    for d in d_classes:
        j_keys[d[0]] = np.packbits(monoid.two_sided_ideal_members(d[0])).tobytes()
    j_groups: dict[bytes, list[int]] = {}
    for d in d_classes:
        j_groups.setdefault(j_keys[d[0]], []).extend(d)
    j_classes = tuple(sorted((tuple(sorted(c)) for c in j_groups.values()), key=lambda c: c[0]))

    l_of = {i: k for k, cls in enumerate(l_classes) for i in cls}
    r_of = {i: k for k, cls in enumerate(r_classes) for i in cls}
    h_of = {i: k for k, cls in enumerate(h_classes) for i in cls}

    grids = []
    for d_id, d in enumerate(d_classes):
        rows = sorted({r_of[i] for i in d}, key=lambda k: r_classes[k][0])
        cols = sorted({l_of[i] for i in d}, key=lambda k: l_classes[k][0])
        cell_of: dict[tuple[int, int], int] = {}
        for i in d:
            key = (r_of[i], l_of[i])
            if key in cell_of:
                # Each element's (row, column) pair determines its H-class.
                assert cell_of[key] == h_of[i]
            else:
                cell_of[key] = h_of[i]
        cells = tuple(
            tuple(cell_of[(r, c)] for c in cols)
            for r in rows
        )
        grids.append(EggboxGrid(d_class=d_id, rows=tuple(rows), cols=tuple(cols), cells=cells))
    return GreenStructure(
        monoid=monoid,
        l_classes=l_classes,
        r_classes=r_classes,
        h_classes=h_classes,
        d_classes=d_classes,
        j_classes=j_classes,
        eggbox=tuple(grids),
    )


def _word_label(monoid: MonoidTable, i: int) -> str:
    from .schemas import format_word

    return format_word(monoid.gset, monoid.elements[i].word)


def emit_eggbox(structure: GreenStructure, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return _emit_ascii(structure)
    if fmt == "dot":
        return _emit_dot(structure)
    if fmt == "json":
        return _emit_json(structure)
    raise UnsupportedFormat(fmt)


def _cell_text(structure: GreenStructure, h_id: int) -> str:
    return " ".join(_word_label(structure.monoid, i) for i in structure.h_classes[h_id])


def _emit_ascii(structure: GreenStructure) -> str:
    lines = []
    for grid in structure.eggbox:
        members = structure.d_classes[grid.d_class]
        lines.append(f"D{grid.d_class} ({len(members)} elements, "
                     f"{len(grid.rows)}x{len(grid.cols)})")
        texts = [
            [_cell_text(structure, h) for h in row]
            for row in grid.cells
        ]
        widths = [
            max(len(texts[r][c]) for r in range(len(grid.rows)))
            for c in range(len(grid.cols))
        ]
        sep = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
        lines.append(sep)
        for row in texts:
            lines.append(
                "|" + "|".join(f" {t.ljust(w)} " for t, w in zip(row, widths)) + "|"
            )
            lines.append(sep)
        lines.append("")
    return "\n".join(lines)


def _emit_dot(structure: GreenStructure) -> str:
    lines = ["digraph eggbox {", "  node [shape=box];"]
    for grid in structure.eggbox:
        lines.append(f"  subgraph cluster_D{grid.d_class} {{")
        lines.append(f'    label="D{grid.d_class}";')
        for r, row_id in enumerate(grid.rows):
            for c, _col_id in enumerate(grid.cols):
                h = grid.cells[r][c]
                label = _cell_text(structure, h).replace('"', '\\"')
                lines.append(f'    H{grid.d_class}_{r}_{c} [label="{label}"];')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines)


def _emit_json(structure: GreenStructure) -> str:
    import json

    monoid = structure.monoid
    payload = {
        "elements": [_word_label(monoid, i) for i in range(monoid.size)],
        "L": [list(c) for c in structure.l_classes],
        "R": [list(c) for c in structure.r_classes],
        "H": [list(c) for c in structure.h_classes],
        "D": [list(c) for c in structure.d_classes],
        "J": [list(c) for c in structure.j_classes],
        "eggbox": [
            {
                "d_class": g.d_class,
                "rows": list(g.rows),
                "cols": list(g.cols),
                "cells": [list(row) for row in g.cells],
            }
            for g in structure.eggbox
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True)
