"""Seifert circles, chords and the diagram counts built on them."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .diagram import DiagramError, LinkDiagram, _walk_oriented, make_diagram, pieces_of

__all__ = [
    "SeifertCircle",
    "Chord",
    "SeifertArrangement",
    "DiagramStats",
    "seifert_smooth",
    "classify_circles",
    "stats",
    "arrangement_to_pd",
    "seifert_graph_components",
]


@dataclass(frozen=True)
class SeifertCircle:
    id: int
    edges: tuple[int, ...]
    # label: "ge" if the circle touches a positive crossing, "lt" otherwise
    label: str | None = None


@dataclass(frozen=True)
class Chord:
    crossing: int  # crossing id
    sign: int
    under: int  # circle holding the incoming under-edge
    over: int  # circle holding the incoming over-edge
    under_pos: int  # index of the incoming under-edge in the under circle
    over_pos: int


@dataclass(frozen=True)
class SeifertArrangement:
    diagram: LinkDiagram
    circles: tuple[SeifertCircle, ...]
    chords: tuple[Chord, ...]
    # outer face marker: (edge, side) with side +1 = left of the edge
    outer: tuple[int, int] | None = field(default=None)

    @property
    def provenance(self) -> str | None:
        return self.diagram.name

    def circle(self, cid: int) -> SeifertCircle:
        return self._by_id[cid]

    @property
    def _by_id(self) -> dict[int, SeifertCircle]:
        cache = self.__dict__.get("_cache_by_id")
        if cache is None:
            cache = {c.id: c for c in self.circles}
            object.__setattr__(self, "_cache_by_id", cache)
        return cache

    @property
    def circle_of_edge(self) -> dict[int, int]:
        cache = self.__dict__.get("_cache_coe")
        if cache is None:
            cache = {e: c.id for c in self.circles for e in c.edges}
            object.__setattr__(self, "_cache_coe", cache)
        return cache

    def with_outer(self, outer: tuple[int, int] | None) -> "SeifertArrangement":
        return replace(self, outer=outer)

    def chords_between(self, a: int, b: int) -> list[Chord]:
        return [ch for ch in self.chords if {ch.under, ch.over} == {a, b}]


@dataclass(frozen=True)
class DiagramStats:
    n_pos: int
    n_neg: int
    n_circles: int
    n_ge: int
    n_lt: int
    n_components: int
    writhe: int

    @property
    def n_crossings(self) -> int:
        return self.n_pos + self.n_neg

    @property
    def euler_s(self) -> int:
        return self.n_circles - self.n_crossings

    def as_dict(self) -> dict:
        return {
            "crossings": self.n_crossings,
            "positive": self.n_pos,
            "negative": self.n_neg,
            "circles": self.n_circles,
            "circlesGe": self.n_ge,
            "circlesLt": self.n_lt,
            "components": self.n_components,
            "writhe": self.writhe,
            "eulerS": self.euler_s,
        }


def _successor(d: LinkDiagram, e: int) -> int:
    """Next edge along the Seifert circle through the head of e."""
    i, s = d.head[e]
    if s == 0:
        out = 1 if d.signs[i] > 0 else 3
    else:
        out = 2
    return d.crossings[i].slots[out]


def seifert_smooth(d: LinkDiagram) -> SeifertArrangement:
    seen: set[int] = set()
    circles = []
    for e0 in d.edges:
        if e0 in seen:
            continue
        if e0 in d.crossingless:
            circles.append(SeifertCircle(e0, (e0,)))
            seen.add(e0)
            continue
        seq = [e0]
        seen.add(e0)
        e = _successor(d, e0)
        while e != e0:
            seq.append(e)
            seen.add(e)
            e = _successor(d, e)
        circles.append(SeifertCircle(e0, tuple(seq)))
    where = {e: (c.id, k) for c in circles for k, e in enumerate(c.edges)}
    chords = []
    for i, c in enumerate(d.crossings):
        u, upos = where[c.slots[0]]
        o, opos = where[c.slots[d.over_in_slot(i)]]
        if u == o:
            raise DiagramError(f"crossing {c.id} joins a Seifert circle to itself")
        chords.append(Chord(c.id, d.signs[i], u, o, upos, opos))
    return SeifertArrangement(d, tuple(circles), tuple(chords))


def classify_circles(a: SeifertArrangement) -> SeifertArrangement:
    pos = {ch.under for ch in a.chords if ch.sign > 0} | {ch.over for ch in a.chords if ch.sign > 0}
    circles = tuple(replace(c, label="ge" if c.id in pos else "lt") for c in a.circles)
    return SeifertArrangement(a.diagram, circles, a.chords, a.outer)


def stats(d: LinkDiagram) -> DiagramStats:
    a = classify_circles(seifert_smooth(d))
    n_pos = sum(1 for s in d.signs if s > 0)
    n_neg = d.n_crossings - n_pos
    n_ge = sum(1 for c in a.circles if c.label == "ge")
    return DiagramStats(n_pos, n_neg, len(a.circles), n_ge, len(a.circles) - n_ge,
                        len(d.components), n_pos - n_neg)


def seifert_graph_components(a: SeifertArrangement) -> list[list[int]]:
    """Circle ids grouped by connectivity through chords."""
    parent = {c.id: c.id for c in a.circles}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ch in a.chords:
        x, y = find(ch.under), find(ch.over)
        if x != y:
            parent[max(x, y)] = min(x, y)
    groups: dict[int, list[int]] = {}
    for c in a.circles:
        groups.setdefault(find(c.id), []).append(c.id)
    return [sorted(g) for _, g in sorted(groups.items())]


def arrangement_to_pd(a: SeifertArrangement, name: str | None = None) -> LinkDiagram:
    """Rebuild the diagram whose oriented smoothing is ``a``."""
    circles = {c.id: c for c in a.circles}
    raw = []
    tails: dict[int, tuple[int, int]] = {}
    for k, ch in enumerate(a.chords):
        uc, oc = circles[ch.under].edges, circles[ch.over].edges
        u_in, u_out = uc[ch.under_pos], uc[(ch.under_pos + 1) % len(uc)]
        o_in, o_out = oc[ch.over_pos], oc[(ch.over_pos + 1) % len(oc)]
        if ch.sign > 0:
            raw.append((ch.crossing, (u_in, u_out, o_out, o_in)))
            tails[u_out], tails[o_out] = (k, 1), (k, 2)
        else:
            raw.append((ch.crossing, (u_in, o_in, o_out, u_out)))
            tails[o_out], tails[u_out] = (k, 2), (k, 3)
    comps = _walk_oriented(raw, tails)
    loose = [c.id for c in a.circles if c.edges[0] not in tails]
    return make_diagram(raw, comps, loose, name if name is not None else a.diagram.name)


def is_connected(d: LinkDiagram) -> bool:
    n_pieces = len(pieces_of(d)) + len(d.crossingless)
    return n_pieces == 1
