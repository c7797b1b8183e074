"""Oriented link diagrams in planar-diagram (PD) notation.

A crossing ``X(a,b,c,d)`` lists the four incident edges counterclockwise,
starting with the incoming under-strand.  The crossing is positive when the
over-strand enters at slot 3 and leaves at slot 1 (right-handed), negative
when it enters at slot 1 and leaves at slot 3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

__all__ = [
    "DiagramError",
    "PDSyntaxError",
    "IncidenceError",
    "NonPlanarError",
    "PreconditionError",
    "Crossing",
    "LinkDiagram",
    "make_diagram",
    "parse_pd",
    "parse_braid",
    "braid_closure",
    "pieces_of",
    "parse_diagram",
    "format_pd",
    "crossing_sign",
    "mirror",
    "connected_sum",
    "reidemeister1_reduce",
    "remove_kink",
    "add_kink",
    "switch_crossings",
    "monogon_crossings",
    "smooth_crossings",
    "split_pieces",
    "relabel",
]


class DiagramError(ValueError):
    """Base class for malformed or unsupported diagrams."""


class PDSyntaxError(DiagramError):
    pass


class IncidenceError(DiagramError):
    pass


class NonPlanarError(DiagramError):
    pass


class PreconditionError(DiagramError):
    pass


Dart = tuple[int, int]  # (crossing index, slot)


@dataclass(frozen=True)
class Crossing:
    id: int
    slots: tuple[int, int, int, int]


@dataclass(frozen=True)
class LinkDiagram:
    """Validated oriented diagram.

    ``components`` lists each component's edges in traversal order; a
    crossingless component is a 1-tuple holding an edge that appears in no
    crossing.
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted(e for comp in self.components for e in comp))

    @cached_property
    def crossingless(self) -> frozenset[int]:
        used = {e for c in self.crossings for e in c.slots}
        return frozenset(e for comp in self.components for e in comp if e not in used)

    @cached_property
    def index(self) -> dict[int, int]:
        """Crossing id -> position in ``crossings``."""
        return {c.id: i for i, c in enumerate(self.crossings)}

    @cached_property
    def tail(self) -> dict[int, Dart]:
        return _orient(self.crossings, self.components)[0]

    @cached_property
    def head(self) -> dict[int, Dart]:
        return _orient(self.crossings, self.components)[1]

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if self.head[c.slots[3]] == (i, 3) else -1
                     for i, c in enumerate(self.crossings))

    @cached_property
    def component_of(self) -> dict[int, int]:
        return {e: k for k, comp in enumerate(self.components) for e in comp}

    def slot_edge(self, dart: Dart) -> int:
        return self.crossings[dart[0]].slots[dart[1]]

    def other_end(self, dart: Dart) -> Dart:
        e = self.slot_edge(dart)
        t, h = self.tail[e], self.head[e]
        return h if dart == t else t

    def dart_side(self, dart: Dart) -> tuple[int, int]:
        """(edge, +1) if the dart leaves along the edge's orientation, else (edge, -1)."""
        e = self.slot_edge(dart)
        return (e, 1 if self.tail[e] == dart else -1)

    def components_with_crossings(self) -> list[tuple[int, ...]]:
        return [c for c in self.components if c[0] not in self.crossingless]

    def over_in_slot(self, i: int) -> int:
        return 3 if self.signs[i] > 0 else 1

    def __str__(self) -> str:
        return format_pd(self)


# --------------------------------------------------------------------------
# construction and validation


def _occurrences(crossings) -> dict[int, list[Dart]]:
    occ: dict[int, list[Dart]] = {}
    for i, c in enumerate(crossings):
        for s, e in enumerate(c.slots):
            occ.setdefault(e, []).append((i, s))
    return occ


def _walk(crossings, occ, e: int, tail: Dart) -> list[tuple[int, Dart, Dart]]:
    """Follow a strand starting on edge e leaving ``tail``; returns (edge, tail, head) triples."""
    out = []
    start = (e, tail)
    while True:
        a, b = occ[e]
        head = b if a == tail else a
        out.append((e, tail, head))
        nxt_tail = (head[0], (head[1] + 2) % 4)
        e = crossings[head[0]].slots[nxt_tail[1]]
        tail = nxt_tail
        if (e, tail) == start:
            return out
        if len(out) > 2 * len(occ) + 2:
            raise IncidenceError("strand walk does not close up")


def _orient(crossings, components):
    occ = _occurrences(crossings)
    tails: dict[int, Dart] = {}
    heads: dict[int, Dart] = {}
    for comp in components:
        if comp[0] not in occ:
            continue
        first = comp[0]
        good = []
        for cand in occ[first]:
            walk = _walk(crossings, occ, first, cand)
            if [w[0] for w in walk] == list(comp):
                good.append(walk)
        if not good:
            raise IncidenceError(f"component {list(comp)} is not a consistent traversal")
        # a short cycle reads the same both ways; slot 0 must be incoming
        good = [w for w in good if not any(t[1] == 0 for _, t, _ in w)] or good
        walk = good[0]
        if len(good) > 1 and len(comp) == 2:
            walk = next(w for w in good if _low_tail(occ, w) == (comp[0] < comp[1]))
        for e, t, h in walk:
            tails[e] = t
            heads[e] = h
    return tails, heads


def _low_tail(occ, walk) -> bool:
    """Does the smaller edge of a two-edge walk leave from its lower dart?"""
    e, t, _ = min(walk)
    return t == min(occ[e])


def _encode_pair(seq: tuple[int, ...], low_tail: bool) -> tuple[int, ...]:
    # two-edge components: listing the larger edge first flags a high tail
    a, b = sorted(seq)
    return (a, b) if low_tail else (b, a)


def _rotate_min(seq: list[int]) -> tuple[int, ...]:
    k = seq.index(min(seq))
    return tuple(seq[k:] + seq[:k])


def make_diagram(crossings, components=None, circles=(), name=None) -> LinkDiagram:
    """Validate raw data and build a :class:`LinkDiagram`.

    ``crossings`` is a sequence of ``(id, (a, b, c, d))`` pairs.  When
    ``components`` is None the orientation is inferred from the under-strands.
    ``circles`` lists edge ids of crossingless components.
    """
    xs = tuple(Crossing(int(cid), tuple(int(v) for v in sl)) for cid, sl in crossings)
    ids = [c.id for c in xs]
    if len(set(ids)) != len(ids):
        raise IncidenceError("duplicate crossing id")
    occ = _occurrences(xs)
    for e, where in occ.items():
        if len(where) != 2:
            raise IncidenceError(f"edge {e} appears {len(where)} times (expected 2)")
    circles = [int(c) for c in circles]
    for c in circles:
        if c in occ:
            raise IncidenceError(f"crossingless edge {c} also appears in a crossing")
    if len(set(circles)) != len(circles):
        raise IncidenceError("duplicate crossingless edge")

    comps: list[tuple[int, ...]] = []
    if components is None:
        seen: set[int] = set()
        for i, c in enumerate(xs):
            e = c.slots[2]
            if e in seen:
                continue
            walk = _walk(xs, occ, e, (i, 2))
            comps.append(_rotate_min([w[0] for w in walk]))
            seen.update(w[0] for w in walk)
        missing = set(occ) - seen
        if missing:
            raise IncidenceError(
                f"edges {sorted(missing)} lie on a component that never passes under; "
                "give its orientation with a comp: line")
    else:
        seen = set()
        for comp in components:
            comp = [int(e) for e in comp]
            if not comp:
                raise IncidenceError("empty comp line")
            if any(e not in occ for e in comp):
                bad = [e for e in comp if e not in occ]
                raise IncidenceError(f"comp line mentions unknown edges {bad}")
            if seen & set(comp):
                raise IncidenceError("an edge is listed in two components")
            seen.update(comp)
            if len(comp) == 2:
                comps.append(tuple(comp))
                continue
            k = comp.index(min(comp))
            comps.append(tuple(comp[k:] + comp[:k]))
        if seen != set(occ):
            raise IncidenceError(f"edges {sorted(set(occ) - seen)} not covered by comp lines")
    comps.sort(key=min)
    comps.extend((c,) for c in sorted(circles))
    if not comps:
        raise IncidenceError("diagram has no components")

    tails, heads = _orient(xs, comps)
    comps = [_encode_pair(c, tails[min(c)] == min(occ[min(c)])) if len(c) == 2 else c
             for c in comps]
    for i, c in enumerate(xs):
        if heads.get(c.slots[0]) != (i, 0):
            raise IncidenceError(f"slot 0 of crossing {c.id} is not an incoming edge")
        if not ((heads[c.slots[1]] == (i, 1)) ^ (heads[c.slots[3]] == (i, 3))):
            raise IncidenceError(f"over-strand of crossing {c.id} is inconsistent")
    d = LinkDiagram(xs, tuple(comps), name)
    _check_planar(d)
    return d


def pieces_of(d: LinkDiagram) -> list[list[int]]:
    """Crossing indices of each connected piece that has crossings."""
    parent = list(range(d.n_crossings))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in d.head:
        a, b = find(d.tail[e][0]), find(d.head[e][0])
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(d.n_crossings):
        groups.setdefault(find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]


def dart_faces(d: LinkDiagram) -> list[list[Dart]]:
    """Cycles of the left-face permutation on darts."""
    seen: set[Dart] = set()
    faces = []
    for i in range(d.n_crossings):
        for s in range(4):
            if (i, s) in seen:
                continue
            cyc = []
            cur = (i, s)
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur)
                x, t = d.other_end(cur)
                cur = (x, (t - 1) % 4)
            faces.append(cyc)
    return faces


def _check_planar(d: LinkDiagram) -> None:
    faces = dart_faces(d)
    piece_of = {}
    for k, p in enumerate(pieces_of(d)):
        for i in p:
            piece_of[i] = k
    counts: dict[int, int] = {}
    for f in faces:
        k = piece_of[f[0][0]]
        counts[k] = counts.get(k, 0) + 1
    for k, p in enumerate(pieces_of(d)):
        v = len(p)
        if v - 2 * v + counts.get(k, 0) != 2:
            raise NonPlanarError(
                f"piece containing crossing {d.crossings[p[0]].id} fails Euler check "
                f"(V={v}, E={2 * v}, F={counts.get(k, 0)})")


# --------------------------------------------------------------------------
# text formats

_TERM = re.compile(r"X\s*\(([^)]*)\)")
_BRAID_HEAD = re.compile(r"^\s*(\d+)\s*:(.*)$")


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse_pd(text: str, name: str | None = None) -> LinkDiagram:
    crossings = []
    comps: list[list[int]] = []
    circles: list[int] = []
    pending_circles = 0
    for ln, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        stripped = line.strip()
        if not stripped:
            continue
        low = stripped.lower()
        if low.startswith("name:"):
            name = name or stripped[5:].strip() or None
            continue
        if low.startswith("comp:") or low.startswith("circle:"):
            head, _, rest = stripped.partition(":")
            vals = _ints(rest, ln, raw.find(":") + 2)
            if head.lower() == "comp":
                comps.append(vals)
            elif vals:
                circles.extend(vals)
            else:
                pending_circles += 1
            continue
        pos = 0
        for m in _TERM.finditer(line):
            gap = line[pos:m.start()]
            if gap.strip(" \t,;"):
                col = pos + len(gap) - len(gap.lstrip(" \t,;")) + 1
                raise PDSyntaxError(f"line {ln}, col {col}: unexpected text {gap.strip()!r}")
            vals = _ints(m.group(1), ln, m.start(1) + 1, sep=",")
            if len(vals) != 4:
                raise PDSyntaxError(f"line {ln}, col {m.start() + 1}: crossing needs 4 edges, got {len(vals)}")
            crossings.append((len(crossings) + 1, tuple(vals)))
            pos = m.end()
        tail = line[pos:]
        if tail.strip(" \t,;"):
            col = pos + len(tail) - len(tail.lstrip(" \t,;")) + 1
            raise PDSyntaxError(f"line {ln}, col {col}: unexpected text {tail.strip()!r}")
    used = {e for _, sl in crossings for e in sl} | set(circles)
    nxt = max(used, default=0) + 1
    for _ in range(pending_circles):
        circles.append(nxt)
        nxt += 1
    return make_diagram(crossings, comps or None, circles, name)


def _ints(s: str, ln: int, col: int, sep: str | None = None) -> list[int]:
    parts = s.split(sep) if sep else s.split()
    out = []
    for p in parts:
        p = p.strip()
        if not p and sep:
            raise PDSyntaxError(f"line {ln}, col {col}: empty edge label")
        if not p:
            continue
        if not p.isdigit() or int(p) <= 0:
            raise PDSyntaxError(f"line {ln}, col {col}: edge label must be a positive integer, got {p!r}")
        out.append(int(p))
    return out


def parse_braid(text: str, name: str | None = None) -> LinkDiagram:
    """Closure of a braid given as ``n: g1 g2 ...`` (signed generator indices).

    Strands circulate counterclockwise around the braid axis with position 1
    innermost; sigma_i crosses positions i and i+1.
    """
    body = " ".join(_strip_comment(l) for l in text.splitlines()).strip()
    m = _BRAID_HEAD.match(body)
    if not m:
        raise PDSyntaxError("line 1, col 1: expected 'n: g1 g2 ...'")
    n = int(m.group(1))
    if n < 1:
        raise PDSyntaxError("line 1, col 1: braid needs at least one strand")
    word = []
    for tok in m.group(2).replace(",", " ").split():
        try:
            g = int(tok)
        except ValueError:
            raise PDSyntaxError(f"line 1: bad generator {tok!r}") from None
        if g == 0 or abs(g) >= n:
            raise PDSyntaxError(f"line 1: generator {g} out of range for {n} strands")
        word.append(g)
    return braid_closure(n, word, name)


def braid_closure(n: int, word, name: str | None = None) -> LinkDiagram:
    cur = list(range(1, n + 1))
    nxt = n + 1
    raw = []
    for g in word:
        i = abs(g) - 1
        a, b = cur[i], cur[i + 1]
        oa, ob = nxt, nxt + 1
        nxt += 2
        if g > 0:
            raw.append((b, ob, oa, a))
        else:
            raw.append((a, b, ob, oa))
        cur[i], cur[i + 1] = oa, ob
    ren = {cur[p]: p + 1 for p in range(n)}
    raw = [tuple(ren.get(e, e) for e in sl) for sl in raw]
    used = sorted({e for sl in raw for e in sl} | set(range(1, n + 1)))
    compact = {e: k + 1 for k, e in enumerate(used)}
    xs = [(k + 1, tuple(compact[e] for e in sl)) for k, sl in enumerate(raw)]
    touched = {e for _, sl in xs for e in sl}
    circles = [compact[p] for p in range(1, n + 1) if compact[p] not in touched]
    # outgoing slots: 1, 2 for positive letters and 2, 3 for negative ones
    tails = {}
    for k, (g, (_, sl)) in enumerate(zip(word, xs)):
        for s in ((1, 2) if g > 0 else (2, 3)):
            tails[sl[s]] = (k, s)
    return make_diagram(xs, _walk_oriented(xs, tails), circles, name)


def parse_diagram(text: str, name: str | None = None) -> LinkDiagram:
    """Parse PD or braid text, detected from the first significant line."""
    for raw in text.splitlines():
        line = _strip_comment(raw).strip()
        if line:
            if _BRAID_HEAD.match(line):
                return parse_braid(text, name)
            break
    return parse_pd(text, name)


def format_pd(d: LinkDiagram) -> str:
    lines = []
    if d.name:
        lines.append(f"# {d.name}")
    if d.crossings:
        lines.append(" ".join("X({},{},{},{})".format(*c.slots) for c in d.crossings))
    for comp in d.components:
        if len(comp) == 1 and comp[0] in d.crossingless:
            lines.append(f"circle: {comp[0]}")
        else:
            lines.append("comp: " + " ".join(map(str, comp)))
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# operations


def crossing_sign(d: LinkDiagram, cid: int) -> int:
    return d.signs[d.index[cid]]


def switch_crossings(d: LinkDiagram, ids, name: str | None = None) -> LinkDiagram:
    """Exchange over and under at the crossings with the given ids."""
    ids = set(ids)
    raw = []
    shift = {}
    for i, c in enumerate(d.crossings):
        if c.id not in ids:
            raw.append((c.id, c.slots))
            shift[i] = 0
            continue
        a, b, cc, dd = c.slots
        pos = d.signs[i] > 0
        raw.append((c.id, (dd, a, b, cc) if pos else (b, cc, dd, a)))
        shift[i] = 1 if pos else 3
    tails = {e: (i, (s + shift[i]) % 4) for e, (i, s) in d.tail.items()}
    return make_diagram(raw, _walk_oriented(raw, tails), sorted(d.crossingless), name)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing; the planar picture is unchanged."""
    return switch_crossings(d, [c.id for c in d.crossings], _suffix(d.name, "mirror"))


def _suffix(name, tag):
    return f"{name}/{tag}" if name else None


def relabel(d: LinkDiagram, offset: int) -> LinkDiagram:
    raw = [(c.id + offset, tuple(e + offset for e in c.slots)) for c in d.crossings]
    comps = [tuple(e + offset for e in c) for c in d.components_with_crossings()]
    return make_diagram(raw, comps, [e + offset for e in d.crossingless], d.name)


def connected_sum(d1: LinkDiagram, e1: int, d2: LinkDiagram, e2: int) -> LinkDiagram:
    """Band-sum along edge e1 of d1 and edge e2 of d2 (the heads are exchanged)."""
    if e1 not in d1.component_of or e2 not in d2.component_of:
        raise PreconditionError("connected_sum: unknown edge")
    off = max(max(d1.edges), max((c.id for c in d1.crossings), default=0))
    d2 = relabel(d2, off)
    e2 += off
    name = f"{d1.name}#{d2.name}" if d1.name and d2.name else None
    # a crossingless summand is absorbed
    if e2 in d2.crossingless:
        return _union(d1, d2, drop2=e2, name=name)
    if e1 in d1.crossingless:
        return _union(d2, d1, drop2=e1, name=name)
    raw = [(c.id, list(c.slots)) for c in d1.crossings + d2.crossings]
    h1 = d1.head[e1]
    h2 = d2.head[e2]
    raw[h1[0]][1][h1[1]] = e2
    raw[d1.n_crossings + h2[0]][1][h2[1]] = e1
    raw = [(cid, tuple(sl)) for cid, sl in raw]
    tails = dict(d1.tail)
    tails.update({e: (d1.n_crossings + i, s) for e, (i, s) in d2.tail.items()})
    circles = sorted(d1.crossingless | d2.crossingless)
    return make_diagram(raw, _walk_oriented(raw, tails), circles, name)


def _walk_oriented(raw, tails: dict[int, Dart]) -> list[tuple[int, ...]]:
    """Components from known tail darts; ``raw`` lists (id, slots) in index order."""
    slots = [sl for _, sl in raw]
    at = {}
    for i, sl in enumerate(slots):
        for s, e in enumerate(sl):
            at.setdefault(e, []).append((i, s))
    comps = []
    seen: set[int] = set()
    for e0 in sorted(tails):
        if e0 in seen:
            continue
        seq = []
        e = e0
        while e not in seen:
            seen.add(e)
            seq.append(e)
            a, b = at[e]
            h = b if a == tails[e] else a
            e = slots[h[0]][(h[1] + 2) % 4]
        if len(seq) == 2:
            a = min(seq)
            seq = _encode_pair(seq, tails[a] == min(at[a]))
        comps.append(tuple(seq))
    return comps


def _union(d: LinkDiagram, other: LinkDiagram, drop2: int, name) -> LinkDiagram:
    raw = [(c.id, c.slots) for c in d.crossings + other.crossings]
    comps = d.components_with_crossings() + other.components_with_crossings()
    circles = sorted((d.crossingless | other.crossingless) - {drop2})
    return make_diagram(raw, comps, circles, name)


def monogon_crossings(d: LinkDiagram) -> list[int]:
    """Indices of crossings carrying a one-edge face (an RI kink)."""
    out = []
    for i, c in enumerate(d.crossings):
        for s in range(4):
            x, t = d.other_end((i, s))
            if x == i and t == (s + 1) % 4:
                out.append(i)
                break
    return out


def remove_kink(d: LinkDiagram, i: int) -> LinkDiagram:
    """Undo the RI kink at crossing index i."""
    c = d.crossings[i]
    loop = None
    for s in range(4):
        x, t = d.other_end((i, s))
        if x == i and t == (s + 1) % 4:
            loop = c.slots[s]
            break
    if loop is None:
        raise PreconditionError(f"crossing {c.id} is not a kink")
    others = [e for e in c.slots if e != loop]
    e_in = next(e for e in others if d.head[e][0] == i)
    e_out = next(e for e in others if d.tail[e][0] == i)
    keep = [(x.id, x.slots) for k, x in enumerate(d.crossings) if k != i]
    circles = set(d.crossingless)
    comps = []
    for comp in d.components_with_crossings():
        comps.append(tuple(e for e in comp if e not in (loop, e_out) or (e == e_out and e_out == e_in)))
    if e_in == e_out:
        comps = [cp for cp in comps if e_in not in cp]
        circles.add(e_in)
    else:
        keep = [(cid, tuple(e_in if e == e_out else e for e in sl)) for cid, sl in keep]
        comps = [tuple(e for e in cp if e != e_out) for cp in comps]
    comps = [cp for cp in comps if cp]
    return make_diagram(keep, comps, sorted(circles), d.name)


def add_kink(d: LinkDiagram, e: int, sign: int) -> LinkDiagram:
    """Insert an RI kink of the given sign on edge e; the strand passes under first."""
    if e not in d.component_of:
        raise PreconditionError(f"add_kink: unknown edge {e}")
    top = max(d.edges)
    loop = top + 1
    out = e if e in d.crossingless else top + 2
    slots = (e, out, loop, loop) if sign > 0 else (e, loop, loop, out)
    cid = max((c.id for c in d.crossings), default=0) + 1
    raw = [(c.id, list(c.slots)) for c in d.crossings]
    if out != e:
        i, t = d.head[e]
        raw[i][1][t] = out
    raw.append((cid, slots))
    comps = []
    for comp in d.components_with_crossings():
        k = comp.index(e) if e in comp else -1
        comps.append(comp if k < 0 else comp[:k + 1] + (loop, out) + comp[k + 1:])
    if out == e:
        comps.append((e, loop))
    circles = sorted(d.crossingless - {e})
    return make_diagram([(c, tuple(sl)) for c, sl in raw], comps, circles, _suffix(d.name, "kink"))


def reidemeister1_reduce(d: LinkDiagram) -> LinkDiagram:
    while True:
        kinks = monogon_crossings(d)
        if not kinks:
            return d
        d = remove_kink(d, kinks[0])


def smooth_crossings(d: LinkDiagram, ids) -> LinkDiagram:
    """Oriented smoothing of the crossings with the given ids.

    Chains of old edges joined through smoothed crossings become one edge,
    labelled by the smallest old id in the chain.
    """
    ids = set(ids)
    drop = {d.index[c] for c in ids}
    succ: dict[int, int] = {}
    for e, (i, s) in d.head.items():
        if i in drop:
            out_slot = (1 if d.signs[i] > 0 else 3) if s == 0 else 2
            succ[e] = d.crossings[i].slots[out_slot]
    # group edges into chains: an edge starts a chain if its tail is a kept crossing
    label: dict[int, int] = {}
    loops: list[int] = []
    starts = [e for e, (i, _) in d.tail.items() if i not in drop]
    for e in starts:
        chain = [e]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        lab = min(chain)
        for x in chain:
            label[x] = lab
    for e in d.head:
        if e not in label:  # closed loop made only of smoothed crossings
            chain = [e]
            while succ[chain[-1]] != e:
                chain.append(succ[chain[-1]])
            lab = min(chain)
            for x in chain:
                label[x] = lab
            loops.append(lab)
    raw = []
    for k, c in enumerate(d.crossings):
        if k in drop:
            continue
        raw.append((c.id, tuple(label[e] for e in c.slots)))
    kept_index = {cid: n for n, (cid, _) in enumerate(raw)}
    tails = {}
    for e, (i, s) in d.tail.items():
        if i not in drop:
            tails[label[e]] = (kept_index[d.crossings[i].id], s)
    comps = _walk_oriented(raw, tails)
    circles = sorted(set(d.crossingless) | set(loops))
    return make_diagram(raw, comps, circles, _suffix(d.name, "smoothed"))


def split_pieces(d: LinkDiagram) -> list[LinkDiagram]:
    """Connected pieces, each as its own diagram (crossingless circles separately)."""
    out = []
    for grp in pieces_of(d):
        raw = [(d.crossings[i].id, d.crossings[i].slots) for i in grp]
        edges = {e for i in grp for e in d.crossings[i].slots}
        comps = [c for c in d.components_with_crossings() if c[0] in edges]
        out.append(make_diagram(raw, comps, [], d.name))
    for e in sorted(d.crossingless):
        out.append(make_diagram([], None, [e], d.name))
    return out
