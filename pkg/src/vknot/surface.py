"""Carrier ribbon surface of a Gauss diagram and its genus.

Each arrow becomes a 4-valent vertex with darts over-in, under-in, over-out,
under-out.  Counterclockwise around a positive crossing they appear in that
order; a negative crossing swaps the two under darts.  Circle arcs pair an
outgoing dart with the next incoming one.  Faces of the resulting map are
the boundary curves of the thickened diagram; capping them off gives the
carrier surface.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gauss import GaussDiagram
from .unionfind import UnionFind

__all__ = ["RotationSystem", "GenusReport", "rotation_system", "genus", "is_realizable", "genus_upper_bound"]

OVER_IN, UNDER_IN, OVER_OUT, UNDER_OUT = range(4)


@dataclass(frozen=True)
class RotationSystem:
    """Combinatorial map on darts.

    ``vertices[k]`` lists the four darts of the ``k``-th crossing in
    counterclockwise order; ``edge[x]`` is the dart at the other end of the
    arc leaving ``x``.  Crossing-free circles own two darts each, joined by
    one edge and attached to no vertex.
    """

    labels: tuple
    vertices: tuple
    edge: tuple
    free_darts: tuple = ()
    _next_ccw: tuple = field(default=(), repr=False, compare=False)

    @property
    def n_darts(self) -> int:
        return len(self.edge)

    def faces(self) -> list:
        """Orbits of ``x -> rotate_ccw(edge(x))`` over the vertex darts."""
        nxt = self._next_ccw
        seen = [False] * len(self.edge)
        for x in self.free_darts:
            seen[x] = True
        out = []
        for start in range(len(self.edge)):
            if seen[start]:
                continue
            face = []
            x = start
            while not seen[x]:
                seen[x] = True
                face.append(x)
                x = nxt[self.edge[x]]
            out.append(tuple(face))
        return out


def rotation_system(d: GaussDiagram) -> RotationSystem:
    labels = tuple(sorted(d.arrows))
    vid = {lab: k for k, lab in enumerate(labels)}
    n_vertex_darts = 4 * len(labels)
    vertices = []
    for lab in labels:
        base = 4 * vid[lab]
        if d.arrows[lab].sign > 0:
            order = (OVER_IN, UNDER_IN, OVER_OUT, UNDER_OUT)
        else:
            order = (OVER_IN, UNDER_OUT, OVER_OUT, UNDER_IN)
        vertices.append(tuple(base + r for r in order))
    n_free = sum(1 for c in d.circles if not c)
    edge = [0] * (n_vertex_darts + 2 * n_free)
    free = []
    f = n_vertex_darts
    for circle in d.circles:
        L = len(circle)
        if L == 0:
            edge[f], edge[f + 1] = f + 1, f
            free.extend((f, f + 1))
            f += 2
            continue
        for s in range(L):
            t, u = circle[s], circle[(s + 1) % L]
            out_dart = 4 * vid[t.label] + (OVER_OUT if t.over else UNDER_OUT)
            in_dart = 4 * vid[u.label] + (OVER_IN if u.over else UNDER_IN)
            edge[out_dart], edge[in_dart] = in_dart, out_dart
    nxt = list(range(len(edge)))
    for ring in vertices:
        for i in range(4):
            nxt[ring[i]] = ring[(i + 1) % 4]
    return RotationSystem(labels, tuple(vertices), tuple(edge), tuple(free), tuple(nxt))


@dataclass(frozen=True)
class GenusReport:
    crossings: int
    boundary_curves: int
    genus: int
    components: tuple

    def to_json(self) -> dict:
        return {
            "crossings": self.crossings,
            "boundary_curves": self.boundary_curves,
            "genus": self.genus,
            "components": [dict(c) for c in self.components],
        }


def genus(d: GaussDiagram) -> GenusReport:
    """Genus of this diagram's carrier surface, per connected piece and in total."""
    k = len(d.circles)
    uf = UnionFind(k)
    for a in d.arrows.values():
        uf.union(a.tail.component, a.head.component)
    rs = rotation_system(d)
    faces_by_root = {}
    for face in rs.faces():
        lab = rs.labels[face[0] // 4]
        root = uf.find(d.arrows[lab].tail.component)
        faces_by_root[root] = faces_by_root.get(root, 0) + 1
    crossings_by_root = {}
    for lab, a in d.arrows.items():
        root = uf.find(a.tail.component)
        crossings_by_root[root] = crossings_by_root.get(root, 0) + 1
    groups = {}
    for c in range(k):
        groups.setdefault(uf.find(c), []).append(c)
    components = []
    total_b = total_g = 0
    for root in sorted(groups, key=lambda r: groups[r][0]):
        circles = groups[root]
        n = crossings_by_root.get(root, 0)
        if n == 0:
            b, g = 2 * len(circles), 0
        else:
            b = faces_by_root[root]
            euler = 2 + n - b
            if euler % 2 or euler < 0:
                raise AssertionError(f"inconsistent face count {b} for {n} crossings")
            g = euler // 2
        total_b += b
        total_g += g
        components.append(
            (("circles", tuple(circles)), ("crossings", n), ("boundary_curves", b), ("genus", g))
        )
    return GenusReport(d.n_arrows, total_b, total_g, tuple(components))


def is_realizable(d: GaussDiagram) -> bool:
    """True when the code embeds in the sphere, i.e. describes a classical diagram."""
    return genus(d).genus == 0


DEFAULT_BOUND_NODES = 5000


def genus_upper_bound(d: GaussDiagram, budget=None) -> int:
    """Least carrier genus over the virtual-regime orbit explored within ``budget``.

    Without a budget the orbit is cut at ``DEFAULT_BOUND_NODES`` diagrams and
    at most two arrows above ``d``; the full search default would take hours
    on diagrams that do not simplify.
    """
    from .moves import MoveSet
    from .search import SearchBudget, orbit
    from .gauss import parse

    if budget is None:
        budget = SearchBudget(max_arrows=d.n_arrows + 2, max_nodes=DEFAULT_BOUND_NODES)
    best = genus(d).genus
    if best == 0:
        return 0
    for code in sorted(orbit(d, MoveSet.VIRTUAL, budget)):
        best = min(best, genus(parse(code)).genus)
        if best == 0:
            break
    return best
