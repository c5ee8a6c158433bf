"""JSON schemas for groups, actions and corpus specs, plus word notation.

Word notation: a transformation is written as its image names in point order,
wrapped in parentheses.  Single-character point names are concatenated,
"(3000)"; otherwise the names are comma-separated, "(o0.e,o1.e,o1.g,o2.e)".
"""

from __future__ import annotations

import json
from typing import Any

from .groups import Group, build_group_from_table, build_named_group
from .gsets import GSet, build_gset


class ParseError(ValueError):
    pass


def group_from_schema(data: dict) -> Group:
    """Build a group from {"kind": "table", ...} or {"kind": "named", ...}."""
    if not isinstance(data, dict) or "kind" not in data:
        raise ParseError("group schema must be an object with a 'kind' field")
    kind = data["kind"]
    if kind == "table":
        try:
            return build_group_from_table(list(data["names"]), [list(r) for r in data["table"]])
        except KeyError as exc:
            raise ParseError(f"table group schema is missing field {exc}") from exc
    if kind == "named":
        return build_named_group(_named_spec(data))
    raise ParseError(f"unknown group kind {kind!r}")


def _named_spec(data: dict):
    family = data.get("family")
    if family in ("cyclic", "dihedral", "symmetric"):
        if "n" not in data:
            raise ParseError(f"{family} group schema requires field 'n'")
        return (family, int(data["n"]))
    if family == "product":
        factors = data.get("factors")
        if not factors or len(factors) != 2:
            raise ParseError("product group schema requires exactly two factors")
        specs = []
        for f in factors:
            if not isinstance(f, dict):
                raise ParseError("product factors must be group schemas")
            if f.get("kind") == "named" or "family" in f:
                specs.append(_named_spec(f))
            else:
                raise ParseError("product factors must be named group schemas")
        return ("product", specs[0], specs[1])
    raise ParseError(f"unknown group family {family!r}")


def group_to_schema(group: Group) -> dict:
    return {
        "kind": "table",
        "names": list(group.element_names),
        "table": [list(row) for row in group.mult],
    }


def gset_from_schema(data: dict) -> GSet:
    """Build a G-set from {"group": ..., "points": [...], "action": {...}}.

    The action object must list every group element by name; image entries may
    be point indices or point names.
    """
    if not isinstance(data, dict):
        raise ParseError("G-set schema must be an object")
    for key in ("group", "points", "action"):
        if key not in data:
            raise ParseError(f"G-set schema is missing field {key!r}")
    group = group_from_schema(data["group"])
    points = [str(p) for p in data["points"]]
    point_index = {name: i for i, name in enumerate(points)}
    if len(point_index) != len(points):
        raise ParseError("point names must be distinct")
    action_obj = data["action"]
    missing = [n for n in group.element_names if n not in action_obj]
    if missing:
        raise ParseError(f"action is missing rows for elements {missing}")
    table = []
    for g in group.elements():
        row_in = action_obj[group.name(g)]
        if len(row_in) != len(points):
            raise ParseError(f"action row for {group.name(g)!r} has wrong length")
        row = []
        for v in row_in:
            if isinstance(v, int):
                row.append(v)
            elif v in point_index:
                row.append(point_index[v])
            else:
                raise ParseError(f"unknown point {v!r} in action row")
        table.append(row)
    return build_gset(group, table, points)


def gset_to_schema(gset: GSet) -> dict:
    return {
        "group": group_to_schema(gset.group),
        "points": list(gset.point_names),
        "action": {
            gset.group.name(g): list(gset.action[g]) for g in gset.group.elements()
        },
    }


def format_word(gset: GSet, word) -> str:
    names = [gset.point_names[v] for v in word]
    if all(len(n) == 1 for n in gset.point_names):
        return "(" + "".join(names) + ")"
    return "(" + ",".join(names) + ")"


def parse_word(gset: GSet, text: str) -> tuple[int, ...]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"word {text!r} is not parenthesized")
    body = text[1:-1]
    if all(len(n) == 1 for n in gset.point_names):
        parts = list(body)
    else:
        parts = body.split(",") if body else []
    index = {name: i for i, name in enumerate(gset.point_names)}
    try:
        word = tuple(index[p] for p in parts)
    except KeyError as exc:
        raise ParseError(f"unknown point name {exc} in word {text!r}") from exc
    if len(word) != gset.n_points:
        raise ParseError(f"word {text!r} has {len(word)} entries, expected {gset.n_points}")
    return word


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
