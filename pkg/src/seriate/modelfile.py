"""Model files: strict JSON schema, loading to a universe, DOT rendering.

A model file holds named points and the objects asserted over them:

    {"points": ["A", "B", "X"],
     "lines":    [{"id": "l0", "seq": ["A", "X", "B"]}],
     "rings":    [{"id": "r0", "cyc": ["A", "X", "B", "Y"]}],
     "families": [{"id": "f0", "rows": [["A","B","C"], ...]}],
     "areas":    [{"id": "a0", "cells": [[0,0],[0,1]]}]}

Unknown fields are rejected so a typo cannot silently drop an object.
Loading constructs the universe directly and reports the first violated
invariant by name.
"""

from __future__ import annotations

import json

from . import errors
from .core import Line, ModelUniverse, Ring
from .dim2.areas import area_from_cells
from .dim2.families import LineFamily
from .lang import name_to_point, point_to_name

_TOP_FIELDS = ("points", "lines", "rings", "families", "areas")
_ITEM_FIELDS = {"lines": ("id", "seq"), "rings": ("id", "cyc"),
                "families": ("id", "rows"), "areas": ("id", "cells")}


def universe_from_dict(data: dict) -> ModelUniverse:
    if not isinstance(data, dict):
        raise errors.ModelLoadError("model file must hold a JSON object")
    unknown = set(data) - set(_TOP_FIELDS)
    if unknown:
        raise errors.ModelLoadError(f"unknown field(s): {sorted(unknown)}")
    try:
        points = frozenset(name_to_point(n) for n in data.get("points", ()))
    except errors.UnboundName as e:
        raise errors.ModelLoadError(f"bad point name: {e}") from None

    def items(section):
        for item in data.get(section, ()):
            if not isinstance(item, dict):
                raise errors.ModelLoadError(f"{section} entries must be objects")
            bad = set(item) - set(_ITEM_FIELDS[section])
            if bad:
                raise errors.ModelLoadError(
                    f"unknown field(s) in {section} entry: {sorted(bad)}")
            yield item

    try:
        lines = frozenset(Line(name_to_point(n) for n in item["seq"])
                          for item in items("lines"))
        rings = frozenset(Ring(name_to_point(n) for n in item["cyc"])
                          for item in items("rings"))
        families = frozenset(
            LineFamily([Line(name_to_point(n) for n in row)
                        for row in item["rows"]])
            for item in items("families"))
        areas = frozenset(area_from_cells(tuple(map(int, c)) for c in item["cells"])
                          for item in items("areas"))
    except KeyError as e:
        raise errors.ModelLoadError(f"missing field {e} in an object entry") from None
    except errors.SeriateError as e:
        raise errors.ModelLoadError(f"invalid object: {e}") from None

    pts = set(points)
    for l in lines:
        pts |= l.member_set
    for r in rings:
        pts |= r.member_set
    for f in families:
        for row in f.rows:
            pts |= row.member_set
    try:
        return ModelUniverse(frozenset(pts), lines, rings, families, areas)
    except errors.InvalidObject as e:
        raise errors.ModelLoadError(str(e)) from None


def load_model(path: str) -> ModelUniverse:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise errors.ModelLoadError(f"cannot read model file: {e}") from None
    return universe_from_dict(data)


def universe_to_dict(u: ModelUniverse) -> dict:
    return {
        "points": [point_to_name(p) for p in sorted(u.points)],
        "lines": [{"id": f"l{i}", "seq": [point_to_name(p) for p in l.seq]}
                  for i, l in enumerate(sorted(u.lines, key=lambda l: l.seq))],
        "rings": [{"id": f"r{i}", "cyc": [point_to_name(p) for p in r.cyc]}
                  for i, r in enumerate(sorted(u.rings, key=lambda r: r.cyc))],
        "families": [{"id": f"f{i}",
                      "rows": [[point_to_name(p) for p in row.seq]
                               for row in f.rows]}
                     for i, f in enumerate(sorted(
                         u.families, key=lambda f: tuple(r.seq for r in f.rows)))],
        "areas": [{"id": f"a{i}", "cells": sorted(list(c) for c in a.cells)}
                  for i, a in enumerate(sorted(u.areas, key=lambda a: sorted(a.cells)))],
    }


# --------------------------------------------------------------------------
# DOT rendering
# --------------------------------------------------------------------------

def _q(s: str) -> str:
    return '"' + s.replace('"', r'\"') + '"'


def render_dot(u: ModelUniverse) -> str:
    """A graph drawing of the universe: lines as paths, rings as cycles,
    families as ranked rows, areas as cell grids."""
    out = ["graph seriate {", "  node [shape=circle];"]
    for p in sorted(u.points):
        out.append(f"  {_q(point_to_name(p))};")
    for i, l in enumerate(sorted(u.lines, key=lambda l: l.seq)):
        names = [point_to_name(p) for p in l.seq]
        out.append(f"  // line l{i}")
        out.append("  " + " -- ".join(_q(n) for n in names) + ";")
    for i, r in enumerate(sorted(u.rings, key=lambda r: r.cyc)):
        names = [point_to_name(p) for p in r.cyc]
        out.append(f"  // ring r{i}")
        out.append("  " + " -- ".join(_q(n) for n in names + [names[0]]) + ";")
    for i, f in enumerate(sorted(u.families,
                                 key=lambda f: tuple(r.seq for r in f.rows))):
        out.append(f"  subgraph cluster_family_{i} {{")
        out.append(f"    label={_q(f'family f{i}')};")
        for j, row in enumerate(f.rows):
            names = [point_to_name(p) for p in row.seq]
            out.append("    { rank=same; " +
                       "; ".join(_q(n) for n in names) + "; }")
            out.append("    " + " -- ".join(_q(n) for n in names) + ";")
        out.append("  }")
    for i, a in enumerate(sorted(u.areas, key=lambda a: sorted(a.cells))):
        out.append(f"  subgraph cluster_area_{i} {{")
        out.append(f"    label={_q(f'area a{i}')};")
        out.append("    node [shape=box];")
        for (r, c) in sorted(a.cells):
            name = f"a{i}_{r}_{c}"
            out.append(f"    {_q(name)} [label={_q(f'({r},{c})')}, "
                       f"pos={_q(f'{c},{-r}!')}];")
        cells = a.cells
        for (r, c) in sorted(cells):
            if (r, c + 1) in cells:
                out.append(f"    {_q(f'a{i}_{r}_{c}')} -- {_q(f'a{i}_{r}_{c+1}')};")
            if (r + 1, c) in cells:
                out.append(f"    {_q(f'a{i}_{r}_{c}')} -- {_q(f'a{i}_{r+1}_{c}')};")
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"
