"""Faces, nesting and plane orientation of Seifert circles.

An embedding in the plane is the diagram on the sphere together with a
choice of outer face, recorded as an edge side ``(edge, +1)`` (left of the
edge) or ``(edge, -1)`` (right of it).  The default is the left side of the
smallest edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .diagram import (DiagramError, LinkDiagram, NonPlanarError, PreconditionError,
                      _walk_oriented, dart_faces, make_diagram, pieces_of)
from .seifert import SeifertArrangement, seifert_smooth

__all__ = [
    "FaceSet",
    "faces",
    "Embedding",
    "embed",
    "default_outer",
    "swap_heads",
]

Side = tuple[int, int]


@dataclass(frozen=True)
class FaceSet:
    boundaries: tuple[tuple[Side, ...], ...]  # each face as its boundary sides
    side_face: dict  # Side -> face id
    outer: int

    def __len__(self) -> int:
        return len(self.boundaries)


def default_outer(d: LinkDiagram) -> Side:
    return (min(d.edges), 1)


def faces(d: LinkDiagram, outer: Side | None = None) -> FaceSet:
    """Faces of the diagram, numbered by first appearance over (edge, side) in edge order."""
    cyc_of: dict[Side, int] = {}
    cycles: list[tuple[Side, ...]] = []
    for cyc in dart_faces(d):
        sides = tuple(d.dart_side(x) for x in cyc)
        for s in sides:
            cyc_of[s] = len(cycles)
        cycles.append(sides)
    for e in sorted(d.crossingless):
        for sd in (1, -1):
            cyc_of[(e, sd)] = len(cycles)
            cycles.append(((e, sd),))
    order: dict[int, int] = {}
    for e in d.edges:
        for sd in (1, -1):
            k = cyc_of[(e, sd)]
            if k not in order:
                order[k] = len(order)
    bounds = [None] * len(cycles)
    for k, fid in order.items():
        bounds[fid] = cycles[k]
    side_face = {s: order[k] for s, k in cyc_of.items()}
    if outer is None:
        outer = default_outer(d)
    if outer not in side_face:
        raise PreconditionError(f"outer face marker {outer} is not an edge side")
    return FaceSet(tuple(bounds), side_face, side_face[outer])


class Embedding:
    """Nesting forest and plane orientation of the Seifert circles.

    Requires a connected diagram.
    """

    def __init__(self, arr: SeifertArrangement, outer: Side | None = None):
        d = arr.diagram
        if len(pieces_of(d)) + len(d.crossingless) != 1:
            raise PreconditionError("embedding needs a connected diagram")
        self.arr = arr
        self.diagram = d
        self.outer_side = outer or arr.outer or default_outer(d)
        self.faces = faces(d, self.outer_side)
        self.outer = self.faces.outer
        self._compute()

    def _compute(self) -> None:
        d, arr, fs = self.diagram, self.arr, self.faces
        sf = fs.side_face
        n = len(fs)
        links: list[tuple[int, int, int | None]] = []  # (face, face, edge or None)
        for e in d.edges:
            links.append((sf[(e, 1)], sf[(e, -1)], e))
        for i in range(d.n_crossings):
            # corners kept open by the oriented smoothing
            a, b = ((1, 3) if d.signs[i] > 0 else (0, 2))
            fa = sf[d.dart_side((i, a))]
            fb = sf[d.dart_side((i, b))]
            links.append((fa, fb, None))
        coe = arr.circle_of_edge
        self.outside: dict[int, set[int]] = {}
        for c in arr.circles:
            adj: list[list[int]] = [[] for _ in range(n)]
            for fa, fb, e in links:
                if e is not None and coe[e] == c.id:
                    continue
                adj[fa].append(fb)
                adj[fb].append(fa)
            seen = {self.outer}
            q = deque([self.outer])
            while q:
                f = q.popleft()
                for g in adj[f]:
                    if g not in seen:
                        seen.add(g)
                        q.append(g)
            self.outside[c.id] = seen
        self.preserving: dict[int, bool] = {}
        for c in arr.circles:
            left = sf[(c.edges[0], 1)]
            right = sf[(c.edges[0], -1)]
            if (left in self.outside[c.id]) == (right in self.outside[c.id]):
                raise NonPlanarError(f"circle {c.id} does not separate the plane")
            self.preserving[c.id] = left not in self.outside[c.id]
        self.encloses: dict[int, set[int]] = {}
        for c in arr.circles:
            out = self.outside[c.id]
            self.encloses[c.id] = {o.id for o in arr.circles
                                   if o.id != c.id and sf[(o.edges[0], 1)] not in out}
        self.depth = {c.id: sum(1 for o in arr.circles if c.id in self.encloses[o.id])
                      for c in arr.circles}
        self.parent: dict[int, int | None] = {}
        for c in arr.circles:
            encl = [o.id for o in arr.circles if c.id in self.encloses[o.id]]
            self.parent[c.id] = max(encl, key=lambda o: (self.depth[o], -o)) if encl else None
        self.roots = sorted(c.id for c in arr.circles if self.parent[c.id] is None)

    # ------------------------------------------------------------------
    def children(self, cid: int) -> list[int]:
        return sorted(o for o, p in self.parent.items() if p == cid)

    def face_circles(self, f: int) -> set[int]:
        coe = self.arr.circle_of_edge
        return {coe[e] for e, _ in self.faces.boundaries[f]}

    def exterior_faces(self) -> list[int]:
        """Faces that lie outside every circle."""
        ok = set(range(len(self.faces)))
        for r in self.roots:
            ok &= self.outside[r]
        return sorted(ok)

    def orientation_flags(self) -> dict[int, str]:
        return {c: ("preserving" if p else "reversing") for c, p in sorted(self.preserving.items())}

    def forest_dict(self) -> dict:
        return {
            "outerFace": self.outer,
            "outerSide": list(self.outer_side),
            "roots": self.roots,
            "parent": {str(k): v for k, v in sorted(self.parent.items())},
            "orientation": {str(k): v for k, v in self.orientation_flags().items()},
        }

    def check_parity(self) -> None:
        """Chord-joined siblings have opposite flags; parent and child agree."""
        for ch in self.arr.chords:
            u, o = ch.under, ch.over
            same = self.preserving[u] == self.preserving[o]
            nested = self.parent[u] == o or self.parent[o] == u
            if nested != same:
                raise DiagramError(f"orientation parity fails at crossing {ch.crossing}")

    def reembed_for_two_roots(self) -> Side:
        """Outer marker of the first face inside the single root giving >= 2 roots."""
        if len(self.roots) != 1:
            raise PreconditionError("re-embedding applies only with one outermost circle")
        root = self.roots[0]
        out = self.outside[root]
        for f, bnd in enumerate(self.faces.boundaries):
            if f in out:
                continue
            circ = self.face_circles(f)
            if root not in circ or len(circ) < 2:
                continue
            emb = Embedding(self.arr, bnd[0])
            if len(emb.roots) >= 2:
                return bnd[0]
        raise DiagramError("no face raises the number of outermost circles")


def embed(d_or_a, outer: Side | None = None) -> Embedding:
    a = d_or_a if isinstance(d_or_a, SeifertArrangement) else seifert_smooth(d_or_a)
    return Embedding(a, outer)


def swap_heads(d: LinkDiagram, e1: int, e2: int) -> LinkDiagram:
    """Exchange the heads of two edges; edge ids keep their tails."""
    h1, h2 = d.head[e1], d.head[e2]
    raw = [[c.id, list(c.slots)] for c in d.crossings]
    raw[h1[0]][1][h1[1]] = e2
    raw[h2[0]][1][h2[1]] = e1
    raw = [(cid, tuple(sl)) for cid, sl in raw]
    return make_diagram(raw, _walk_oriented(raw, dict(d.tail)), sorted(d.crossingless), d.name)
