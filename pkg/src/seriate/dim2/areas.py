"""Lattice-cell areas: the fundamental-area model for the separation
theorems.

An area is a 4-connected, simply connected set of unit cells.  Its
vertices are the incident lattice points and its boundary is the single
simple cycle of boundary vertices, stored as a Ring over encoded vertex
ids so the dimension-1 machinery applies unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .. import errors
from ..core import Ring
from .paths import GridPath

Cell = tuple[int, int]
Vertex = tuple[int, int]

_VSTRIDE = 1024
_VBASE = 1 << 20


def vertex_id(v: Vertex) -> int:
    r, c = v
    if not (0 <= r < _VSTRIDE and 0 <= c < _VSTRIDE):
        raise errors.InvalidObject(f"vertex {v} outside the encodable range")
    return _VBASE + r * _VSTRIDE + c


def vertex_rc(vid: int) -> Vertex:
    if vid < _VBASE:
        raise errors.InvalidObject(f"{vid} is not an encoded vertex id")
    off = vid - _VBASE
    return off // _VSTRIDE, off % _VSTRIDE


def _cell_vertices(cell: Cell) -> tuple[Vertex, Vertex, Vertex, Vertex]:
    r, c = cell
    return (r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)


def _edge(u: Vertex, v: Vertex) -> tuple[Vertex, Vertex]:
    return (u, v) if u <= v else (v, u)


def _boundary_edges(cells: frozenset) -> set:
    """Lattice edges with an area cell on exactly one side."""
    out = set()
    for (r, c) in cells:
        if (r - 1, c) not in cells:
            out.add(_edge((r, c), (r, c + 1)))
        if (r + 1, c) not in cells:
            out.add(_edge((r + 1, c), (r + 1, c + 1)))
        if (r, c - 1) not in cells:
            out.add(_edge((r, c), (r + 1, c)))
        if (r, c + 1) not in cells:
            out.add(_edge((r, c + 1), (r + 1, c + 1)))
    return out


def interior_edges(cells: frozenset) -> set:
    """Lattice edges with an area cell on both sides."""
    out = set()
    for (r, c) in cells:
        if (r, c + 1) in cells:
            out.add(_edge((r, c + 1), (r + 1, c + 1)))
        if (r + 1, c) in cells:
            out.add(_edge((r + 1, c), (r + 1, c + 1)))
    return out


@dataclass(frozen=True)
class LatticeArea:
    cells: frozenset
    vertex_set: frozenset = None
    boundary: Ring = None
    boundary_cycle: tuple = None  # boundary vertices in traced cyclic order

    def __init__(self, cells, vertex_set, boundary, boundary_cycle):
        object.__setattr__(self, "cells", frozenset(cells))
        object.__setattr__(self, "vertex_set", frozenset(vertex_set))
        object.__setattr__(self, "boundary", boundary)
        object.__setattr__(self, "boundary_cycle", tuple(boundary_cycle))

    def __eq__(self, other):
        return isinstance(other, LatticeArea) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    @property
    def boundary_vertices(self) -> frozenset:
        return frozenset(self.boundary_cycle)

    @property
    def interior_vertices(self) -> frozenset:
        return self.vertex_set - frozenset(self.boundary_cycle)

    def __repr__(self):
        return f"LatticeArea({sorted(self.cells)})"


def area_from_cells(cells: Iterable[Cell]) -> LatticeArea:
    """Build an area, rejecting disconnected or non-disk-like cell sets.

    Simple connectivity is checked by flood fill from outside the
    bounding box; a pinched vertex (two diagonal cells present, both
    off-diagonal cells absent) also breaks the single boundary ring and
    is rejected the same way.
    """
    cells = frozenset((int(r), int(c)) for r, c in cells)
    if not cells:
        raise errors.InvalidObject("area needs at least one cell")
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for n in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if n in cells and n not in seen:
                seen.add(n)
                stack.append(n)
    if len(seen) != len(cells):
        raise errors.NotConnected(
            f"cells are not 4-connected ({len(seen)} of {len(cells)} reachable)")

    rs = [r for r, _ in cells]
    cs = [c for _, c in cells]
    r0, r1 = min(rs) - 1, max(rs) + 1
    c0, c1 = min(cs) - 1, max(cs) + 1
    outside = {(r, c) for r in range(r0, r1 + 1) for c in range(c0, c1 + 1)
               if (r, c) not in cells}
    seen = {(r0, c0)}
    stack = [(r0, c0)]
    while stack:
        r, c = stack.pop()
        for n in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if n in outside and n not in seen:
                seen.add(n)
                stack.append(n)
    if len(seen) != len(outside):
        raise errors.NotSimplyConnected("cell set encloses a hole")

    vset = set()
    for cell in cells:
        vset.update(_cell_vertices(cell))
    for (vr, vc) in vset:
        nw = (vr - 1, vc - 1) in cells
        ne = (vr - 1, vc) in cells
        sw = (vr, vc - 1) in cells
        se = (vr, vc) in cells
        if (nw and se and not ne and not sw) or (ne and sw and not nw and not se):
            raise errors.NotSimplyConnected(
                f"pinched vertex at {(vr, vc)} breaks the boundary ring")

    cycle = _trace_boundary(cells)
    ring = Ring(vertex_id(v) for v in cycle)
    return LatticeArea(cells, vset, ring, cycle)


def _trace_boundary(cells: frozenset) -> tuple[Vertex, ...]:
    edges = _boundary_edges(cells)
    adj = {}
    for (u, v) in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v, ns in adj.items():
        if len(ns) != 2:
            raise errors.NotSimplyConnected(
                f"boundary is not a simple cycle at vertex {v}")
    start = min(adj)
    cycle = [start]
    prev, cur = None, start
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    return tuple(cycle)


def cycle_interior_cells(cycle: Iterable[Vertex]) -> frozenset:
    """Cells inside a simple lattice cycle, by even-odd ray casting."""
    cycle = tuple(cycle)
    vertical = {}
    n = len(cycle)
    for i in range(n):
        u, v = cycle[i], cycle[(i + 1) % n]
        if u[1] == v[1]:  # vertical edge spans rows min..min+1 at column u[1]
            vertical.setdefault(min(u[0], v[0]), set()).add(u[1])
    cells = set()
    rows = sorted(vertical)
    for r in rows:
        cols = sorted(vertical[r])
        # between an odd and the following even crossing, cells are inside
        for i in range(0, len(cols) - 1, 2):
            for c in range(cols[i], cols[i + 1]):
                cells.add((r, c))
    return frozenset(cells)


def _edge_in_fabric(u: Vertex, v: Vertex, cells: frozenset) -> bool:
    """Whether the lattice edge u-v runs along at least one cell of the
    area.  A step across empty space between two vertices of the area is
    not a movement within it."""
    (r1, c1), (r2, c2) = sorted((u, v))
    if r1 == r2:  # horizontal edge: cells above and below
        flanks = ((r1 - 1, c1), (r1, c1))
    else:  # vertical edge: cells left and right
        flanks = ((r1, c1 - 1), (r1, c1))
    return any(f in cells for f in flanks)


def _path_cells_check(path: GridPath, area: LatticeArea):
    for v in path.pts:
        if v not in area.vertex_set:
            raise errors.NotACycleInArea(f"vertex {v} outside the area")
    for u, v in zip(path.pts, path.pts[1:]):
        if not _edge_in_fabric(u, v, area.cells):
            raise errors.NotACycleInArea(
                f"step {u}->{v} crosses space outside the area")


def area_union(a1: LatticeArea, a2: LatticeArea) -> LatticeArea:
    """Join two areas whose shared vertices form one common border line.

    The union's boundary is the two boundaries less the interior
    vertices of the shared line; the traced result is checked against
    that characterisation.
    """
    if a1.cells & a2.cells:
        raise errors.CellOverlap(f"areas share cell(s) {sorted(a1.cells & a2.cells)}")
    shared_vertices = a1.vertex_set & a2.vertex_set
    shared = _boundary_edges(a1.cells) & _boundary_edges(a2.cells)
    if not shared:
        raise errors.NoCommonLine("areas share no border edge")
    # the shared edges must form one simple path
    deg = {}
    for (u, v) in shared:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    odd = [v for v, d in deg.items() if d == 1]
    if any(d > 2 for d in deg.values()) or len(odd) != 2:
        raise errors.MultipleCommonLines("shared border is not a single line")
    # path-connected?
    adj = {}
    for (u, v) in shared:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    comp = {odd[0]}
    stack = [odd[0]]
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w not in comp:
                comp.add(w)
                stack.append(w)
    if comp != set(deg):
        raise errors.MultipleCommonLines("shared border has several components")
    if shared_vertices - set(deg):
        raise errors.MultipleCommonLines(
            "areas also touch outside the common line")
    out = area_from_cells(a1.cells | a2.cells)
    expect = (a1.boundary_vertices | a2.boundary_vertices) - (set(deg) - set(odd))
    if out.boundary_vertices != frozenset(expect):
        raise errors.ConsistencyViolation(
            "union boundary does not match the two boundaries less the "
            "shared line's interior")
    return out


def area_split(a: LatticeArea, chord: GridPath) -> tuple[LatticeArea, LatticeArea]:
    """Divide an area along a chord whose ends lie on the boundary and whose
    interior runs strictly inside, treating the chord's edges as walls."""
    if chord.mode != "lattice-4":
        raise errors.ModeMismatch(f"chord must be lattice-4, got {chord.mode!r}")
    if len(chord) < 2:
        raise errors.InvalidObject("chord needs at least two vertices")
    pts = chord.pts
    bset = a.boundary_vertices
    for end in (pts[0], pts[-1]):
        if end not in bset:
            raise errors.ChordNotAnchored(f"chord end {end} is not on the boundary")
    for v in pts[1:-1]:
        if v not in a.vertex_set:
            raise errors.ChordNotAnchored(f"chord vertex {v} is outside the area")
        if v in bset:
            raise errors.ChordTouchesBoundary(
                f"interior chord vertex {v} lies on the boundary")
    walls = {_edge(u, v) for u, v in zip(pts, pts[1:])}
    comps = _wall_components(a.cells, walls)
    if len(comps) != 2:
        raise errors.NotSeparating(
            f"chord separates the area into {len(comps)} part(s), not 2")
    out1, out2 = (area_from_cells(c) for c in comps)
    if min(out2.cells) < min(out1.cells):
        out1, out2 = out2, out1
    overlap = out1.vertex_set & out2.vertex_set
    if overlap != set(pts):
        raise errors.NotSeparating(
            "parts meet outside the chord; the chord does not bound them")
    return out1, out2


def _wall_components(cells: frozenset, walls: set) -> list[frozenset]:
    todo = set(cells)
    comps = []
    while todo:
        start = min(todo)
        comp = {start}
        stack = [start]
        todo.discard(start)
        while stack:
            r, c = stack.pop()
            for n, wall in (((r - 1, c), _edge((r, c), (r, c + 1))),
                            ((r + 1, c), _edge((r + 1, c), (r + 1, c + 1))),
                            ((r, c - 1), _edge((r, c), (r + 1, c))),
                            ((r, c + 1), _edge((r, c + 1), (r + 1, c + 1)))):
                if n in todo and wall not in walls:
                    comp.add(n)
                    todo.discard(n)
                    stack.append(n)
        comps.append(frozenset(comp))
    return comps


def area_from_ring(a: LatticeArea, r: Ring) -> LatticeArea:
    """The unique sub-area of ``a`` bounded by the given ring."""
    try:
        cycle = tuple(vertex_rc(v) for v in r.cyc)
    except errors.InvalidObject:
        raise errors.NotACycleInArea("ring points are not encoded vertices") from None
    for v in cycle:
        if v not in a.vertex_set:
            raise errors.NotACycleInArea(f"ring vertex {v} is outside the area")
    n = len(cycle)
    for i in range(n):
        (r1, c1), (r2, c2) = cycle[i], cycle[(i + 1) % n]
        if abs(r1 - r2) + abs(c1 - c2) != 1:
            raise errors.NotACycleInArea(
                f"ring step {cycle[i]}->{cycle[(i + 1) % n]} is not a lattice edge")
    inner = cycle_interior_cells(cycle)
    if not inner:
        raise errors.EmptyInterior("ring encloses no cell")
    if not inner <= a.cells:
        raise errors.NotACycleInArea("ring encloses cells outside the area")
    out = area_from_cells(inner)
    if out.boundary != r:
        raise errors.ConsistencyViolation(
            "enclosed cells do not reproduce the given ring as boundary")
    return out


def shared_border_line(a1: LatticeArea, a2: LatticeArea):
    """The single common border path of two cell-disjoint areas, as an
    ordered vertex tuple, or None when they do not share exactly one."""
    if a1.cells & a2.cells:
        raise errors.CellOverlap("areas share cells")
    shared = _boundary_edges(a1.cells) & _boundary_edges(a2.cells)
    if not shared:
        return None
    deg = {}
    adj = {}
    for (u, v) in shared:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    odd = sorted(v for v, d in deg.items() if d == 1)
    if any(d > 2 for d in deg.values()) or len(odd) != 2:
        return None
    path = [odd[0]]
    prev = None
    while path[-1] != odd[1]:
        ns = adj[path[-1]]
        nxt = ns[0] if ns[0] != prev else (ns[1] if len(ns) > 1 else None)
        if nxt is None:
            return None
        prev = path[-1]
        path.append(nxt)
    if len(path) != len(deg):
        return None  # a separate shared component exists
    return tuple(path)


def crossing_boundary(a1: LatticeArea, a2: LatticeArea, p: GridPath) -> Optional[int]:
    """Locate a path vertex on the common boundary of two areas.

    The path must move along the two areas' fabric (every step's edge
    touching one of their cells, so it cannot jump a gap between them)
    and contain a non-boundary vertex of each; the located witness is
    returned as an encoded vertex id.  ``None`` signals the impossible
    no-crossing case for the checker to report.
    """
    if p.mode != "lattice-4":
        raise errors.ModeMismatch(f"path must be lattice-4, got {p.mode!r}")
    if a1.cells & a2.cells:
        raise errors.CellOverlap("areas share cells")
    allowed = a1.vertex_set | a2.vertex_set
    fabric = a1.cells | a2.cells
    for v in p.pts:
        if v not in allowed:
            raise errors.NoInteriorWitness(f"path vertex {v} leaves the two areas")
    for u, v in zip(p.pts, p.pts[1:]):
        if not _edge_in_fabric(u, v, fabric):
            raise errors.NoInteriorWitness(
                f"step {u}->{v} crosses space outside the two areas")
    if not (set(p.pts) & a1.interior_vertices):
        raise errors.NoInteriorWitness("path has no interior vertex of the first area")
    if not (set(p.pts) & a2.interior_vertices):
        raise errors.NoInteriorWitness("path has no interior vertex of the second area")
    common = a1.vertex_set & a2.vertex_set
    for v in p.pts:
        if v in common:
            return vertex_id(v)
    return None


@dataclass(frozen=True)
class NestingVerdict:
    outer_pair: tuple[int, int]      # indices (0-based) of the nesting pair
    sub_areas: tuple[LatticeArea, LatticeArea]


def theta_nesting(a: LatticeArea, l1: GridPath, l2: GridPath, l3: GridPath) -> NestingVerdict:
    """Among three internally disjoint paths joining the same two points,
    name the unique pair whose cycle contains both other cycles."""
    paths = (l1, l2, l3)
    for p in paths:
        if p.mode != "lattice-4":
            raise errors.ModeMismatch(f"paths must be lattice-4, got {p.mode!r}")
        if len(p) < 2:
            raise errors.InvalidObject("theta paths need >= 2 vertices")
        _path_cells_check(p, a)
    ends = {frozenset((p.pts[0], p.pts[-1])) for p in paths}
    if len(ends) != 1 or len(next(iter(ends))) != 2:
        raise errors.EndpointMismatch("paths do not join one common point pair")
    (pq,) = ends
    for i in range(3):
        for j in range(i + 1, 3):
            inter = set(paths[i].pts) & set(paths[j].pts)
            if set(paths[i].pts) == set(paths[j].pts) or inter != set(pq):
                raise errors.NotInternallyDisjoint(
                    f"paths {i + 1} and {j + 1} share {sorted(inter - set(pq))}")
    interiors = {}
    for i in range(3):
        for j in range(i + 1, 3):
            interiors[(i, j)] = _theta_cycle_interior(paths[i], paths[j])
    winners = []
    for (i, j), cells in interiors.items():
        others = [cells2 for key, cells2 in interiors.items() if key != (i, j)]
        if all(cells >= o for o in others):
            winners.append((i, j))
    if len(winners) != 1:
        raise errors.ConsistencyViolation(
            f"expected exactly one nesting pair, found {winners}")
    (i, j) = winners[0]
    (k,) = set(range(3)) - {i, j}
    subs = tuple(area_from_cells(interiors[tuple(sorted((x, k)))])
                 for x in (i, j))
    return NestingVerdict((i, j), subs)


def _theta_cycle_interior(p1: GridPath, p2: GridPath) -> frozenset:
    a = p1.pts
    b = p2.pts if p2.pts[0] == a[-1] else tuple(reversed(p2.pts))
    cycle = a + b[1:-1]
    return cycle_interior_cells(cycle)


def triple_point_check(a1: LatticeArea, a2: LatticeArea, a3: LatticeArea) -> bool:
    """True when no interior vertex of the common border line of the first
    two areas belongs to all three areas."""
    for x, y in ((a1, a2), (a1, a3), (a2, a3)):
        if x.cells & y.cells:
            raise errors.CellOverlap("areas share cells")
    line = shared_border_line(a1, a2)
    if line is None:
        raise errors.NoCommonLine(
            "first two areas do not share exactly one border line")
    for v in line[1:-1]:
        if v in a3.vertex_set:
            return False
    return True
