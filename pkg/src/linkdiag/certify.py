"""Quasipositivity certificates for Seifert surfaces of positive diagrams.

A certificate is a tree.  Leaves are disks, positive Hopf bands and fibers of
positive torus links T(2,k).  A structural ``PlumbNode`` records a Murasugi
sum along two outermost circles; an ``EmbedNode`` records that S(D) sits in
S(D') where D' merges two outermost circles by a band move.  ``check`` replays
every step on the diagram itself.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .diagram import (DiagramError, LinkDiagram, PreconditionError, format_pd,
                      smooth_crossings, split_pieces)
from .embedding import Embedding, swap_heads
from .seifert import SeifertArrangement, seifert_smooth

__all__ = [
    "DiskLeaf", "HopfLeaf", "TorusFiberLeaf", "PlumbNode", "EmbedNode", "SplitNode",
    "MergeRecord", "CheckReport", "certify_positive", "merge_outermost",
    "plumbing_split", "expand_torus_fiber", "expand", "verify_cert",
    "embedded_chi", "ambient_chi", "hopf_count", "leaf_kinds",
    "cert_to_dict", "cert_from_dict", "dumps", "loads", "diagram_hash",
]

FORMAT = "linkdiag-qp-cert/1"


@dataclass(frozen=True)
class DiskLeaf:
    pass


@dataclass(frozen=True)
class HopfLeaf:
    pass


@dataclass(frozen=True)
class TorusFiberLeaf:
    k: int


@dataclass(frozen=True)
class PlumbNode:
    left: object
    center: object
    right: object
    circles: tuple[int, int] | None = None
    chords: tuple[int, ...] | None = None
    outer: tuple[int, int] | None = None


@dataclass(frozen=True)
class MergeRecord:
    circle_pair: tuple[int, int]
    arc_face: int
    arc_edges: tuple[int, int]
    merged_circle: int
    merged_hash: str


@dataclass(frozen=True)
class EmbedNode:
    child: object
    merge: MergeRecord
    outer: tuple[int, int]


@dataclass(frozen=True)
class SplitNode:
    children: tuple


@dataclass
class CheckReport:
    ok: bool
    errors: list[str] = field(default_factory=list)
    chi: int | None = None
    ambient_chi: int | None = None
    hopf_bands: int | None = None

    def as_dict(self) -> dict:
        return {"ok": self.ok, "errors": self.errors, "chi": self.chi,
                "ambientChi": self.ambient_chi, "hopfBands": self.hopf_bands}


def diagram_hash(d: LinkDiagram) -> str:
    body = format_pd(LinkDiagram(d.crossings, d.components))
    return hashlib.sha256(body.encode()).hexdigest()


# --------------------------------------------------------------------------
# Euler characteristic bookkeeping

def embedded_chi(node) -> int:
    if isinstance(node, DiskLeaf):
        return 1
    if isinstance(node, HopfLeaf):
        return 0
    if isinstance(node, TorusFiberLeaf):
        return 2 - node.k
    if isinstance(node, PlumbNode):
        return embedded_chi(node.left) + embedded_chi(node.center) + embedded_chi(node.right) - 2
    if isinstance(node, EmbedNode):
        return embedded_chi(node.child) + 1
    if isinstance(node, SplitNode):
        return sum(embedded_chi(c) for c in node.children)
    raise TypeError(f"not a certificate node: {node!r}")


def ambient_chi(node) -> int:
    if isinstance(node, EmbedNode):
        return ambient_chi(node.child)
    if isinstance(node, PlumbNode):
        return ambient_chi(node.left) + ambient_chi(node.center) + ambient_chi(node.right) - 2
    if isinstance(node, SplitNode):
        return sum(ambient_chi(c) for c in node.children)
    return embedded_chi(node)


def _walk_nodes(node):
    yield node
    if isinstance(node, PlumbNode):
        for c in (node.left, node.center, node.right):
            yield from _walk_nodes(c)
    elif isinstance(node, EmbedNode):
        yield from _walk_nodes(node.child)
    elif isinstance(node, SplitNode):
        for c in node.children:
            yield from _walk_nodes(c)


def hopf_count(node) -> int:
    return sum(1 for n in _walk_nodes(node) if isinstance(n, HopfLeaf))


def leaf_kinds(node) -> set[str]:
    return {type(n).__name__ for n in _walk_nodes(node)
            if isinstance(n, (DiskLeaf, HopfLeaf, TorusFiberLeaf))}


# --------------------------------------------------------------------------
# the three moves

def plumbing_split(d: LinkDiagram, emb: Embedding):
    """Split along the two outermost circles.

    Returns ``(G1, k, G2, chord_ids)`` where G1 holds the orientation
    preserving root and k chords join the roots.
    """
    if len(emb.roots) != 2:
        raise PreconditionError("plumbing split needs exactly two outermost circles")
    r1, r2 = sorted(emb.roots, key=lambda c: (not emb.preserving[c], c))
    if emb.preserving[r1] == emb.preserving[r2]:
        raise DiagramError("outermost circles joined by chords must have opposite orientation")
    ids = tuple(sorted(ch.crossing for ch in emb.arr.chords_between(r1, r2)))
    if not ids:
        raise PreconditionError("outermost circles are not joined")
    pieces = split_pieces(smooth_crossings(d, ids))
    if len(pieces) != 2:
        raise DiagramError(f"smoothing the central chords gave {len(pieces)} pieces")
    g1 = next(p for p in pieces if r1 in p.edges)
    g2 = next(p for p in pieces if r2 in p.edges)
    return g1, len(ids), g2, ids


def merge_outermost(d: LinkDiagram, emb: Embedding):
    """Band move joining two like-oriented outermost circles across an exterior face."""
    if len(emb.roots) < 3:
        raise PreconditionError("merging needs at least three outermost circles")
    arr = emb.arr
    roots = set(emb.roots)
    best = None
    for f in emb.exterior_faces():
        circ = sorted(emb.face_circles(f) & roots)
        for i, a in enumerate(circ):
            for b in circ[i + 1:]:
                if emb.preserving[a] != emb.preserving[b]:
                    continue
                key = (a, b, f)
                if best is None or key < best:
                    best = key
    if best is None:
        raise DiagramError("no exterior face meets two like-oriented outermost circles")
    a, b, f = best
    side = -1 if emb.preserving[a] else 1  # exterior lies right of a ccw circle
    sf = emb.faces.side_face
    e1 = min(e for e in arr.circle(a).edges if sf[(e, side)] == f)
    e2 = min(e for e in arr.circle(b).edges if sf[(e, side)] == f)
    d2 = swap_heads(d, e1, e2)
    merged = seifert_smooth(d2).circle_of_edge[e1]
    rec = MergeRecord((a, b), f, (e1, e2), merged, diagram_hash(d2))
    return rec, d2


def expand_torus_fiber(k: int):
    if k < 1:
        raise ValueError("torus fiber needs k >= 1")
    if k == 1:
        return DiskLeaf()
    node = HopfLeaf()
    for _ in range(k - 2):
        node = PlumbNode(node, DiskLeaf(), HopfLeaf())
    return node


def expand(node):
    """Replace every torus-fiber leaf by Hopf plumbings."""
    if isinstance(node, TorusFiberLeaf):
        return expand_torus_fiber(node.k)
    if isinstance(node, PlumbNode):
        return PlumbNode(expand(node.left), expand(node.center), expand(node.right),
                         node.circles, node.chords, node.outer)
    if isinstance(node, EmbedNode):
        return EmbedNode(expand(node.child), node.merge, node.outer)
    if isinstance(node, SplitNode):
        return SplitNode(tuple(expand(c) for c in node.children))
    return node


# --------------------------------------------------------------------------
# certification

def certify_positive(d: LinkDiagram, outer=None, expanded: bool = False):
    """Certificate tree for S(d); d must be positive."""
    for c, s in zip(d.crossings, d.signs):
        if s < 0:
            raise PreconditionError(f"negative crossing at id {c.id}")
    pieces = split_pieces(d)
    if len(pieces) > 1:
        node = SplitNode(tuple(_certify(p, None) for p in pieces))
    else:
        node = _certify(d, outer)
    return expand(node) if expanded else node


def _certify(d: LinkDiagram, outer):
    if d.n_crossings == 0:
        if len(d.components) != 1:
            raise DiagramError("crossingless piece with several circles")
        return DiskLeaf()
    emb = Embedding(seifert_smooth(d), outer)
    if len(emb.roots) == 1:
        emb = Embedding(emb.arr, emb.reembed_for_two_roots())
    if len(emb.roots) == 2:
        g1, k, g2, ids = plumbing_split(d, emb)
        r1, r2 = sorted(emb.roots, key=lambda c: (not emb.preserving[c], c))
        return PlumbNode(_certify(g1, None), TorusFiberLeaf(k), _certify(g2, None),
                         (r1, r2), ids, emb.outer_side)
    rec, d2 = merge_outermost(d, emb)
    return EmbedNode(_certify(d2, emb.outer_side), rec, emb.outer_side)


# --------------------------------------------------------------------------
# checking

class _Reject(Exception):
    pass


def verify_cert(cert, d: LinkDiagram) -> CheckReport:
    """Replay a certificate against d."""
    try:
        if any(s < 0 for s in d.signs):
            raise _Reject("diagram has negative crossings")
        _check(cert, d, None, "root")
        chi = embedded_chi(cert)
        want = len(seifert_smooth(d).circles) - d.n_crossings
        if chi != want:
            raise _Reject(f"root: certificate chi {chi} but chi(S) = {want}")
        amb = ambient_chi(cert)
        return CheckReport(True, [], chi, amb, 1 - amb)
    except _Reject as exc:
        return CheckReport(False, [str(exc)])
    except DiagramError as exc:
        return CheckReport(False, [f"replay failed: {exc}"])


def _fully_expanded(node) -> bool:
    return "TorusFiberLeaf" not in leaf_kinds(node)


def _check_center(node, k: int, path: str) -> None:
    for n in _walk_nodes(node):
        if isinstance(n, PlumbNode) and n.circles is not None:
            raise _Reject(f"{path}: structural node inside a torus fiber")
        if isinstance(n, (EmbedNode, SplitNode)):
            raise _Reject(f"{path}: unexpected {type(n).__name__} inside a torus fiber")
    if isinstance(node, TorusFiberLeaf) and node.k != k:
        raise _Reject(f"{path}: torus fiber T(2,{node.k}) but {k} chords join the roots")
    if embedded_chi(node) != 2 - k:
        raise _Reject(f"{path}: center has chi {embedded_chi(node)}, expected {2 - k}")


def _check(node, d: LinkDiagram, outer, path: str) -> None:
    if isinstance(node, DiskLeaf):
        if d.n_crossings or len(d.components) != 1:
            raise _Reject(f"{path}: disk leaf on a diagram with crossings")
        return
    if isinstance(node, SplitNode):
        pieces = split_pieces(d)
        if len(pieces) != len(node.children):
            raise _Reject(f"{path}: {len(node.children)} pieces claimed, {len(pieces)} found")
        for i, (c, p) in enumerate(zip(node.children, pieces)):
            _check(c, p, None, f"{path}.split[{i}]")
        return
    if isinstance(node, (HopfLeaf, TorusFiberLeaf)):
        raise _Reject(f"{path}: {type(node).__name__} used outside a plumbing center")
    if isinstance(node, PlumbNode):
        if node.circles is None or node.outer is None:
            raise _Reject(f"{path}: plumbing without circle data")
        emb = _embedding(d, node.outer, path)
        if len(emb.roots) != 2 or set(emb.roots) != set(node.circles):
            raise _Reject(f"{path}: outermost circles are {emb.roots}, not {list(node.circles)}")
        r1, r2 = node.circles
        if not emb.preserving[r1] or emb.preserving[r2]:
            raise _Reject(f"{path}: first root must preserve and second reverse orientation")
        g1, k, g2, ids = plumbing_split(d, emb)
        if tuple(sorted(node.chords or ())) != ids:
            raise _Reject(f"{path}: chord list {node.chords} does not match {list(ids)}")
        _check_center(node.center, k, path + ".center")
        _check(node.left, g1, None, path + ".left")
        _check(node.right, g2, None, path + ".right")
        return
    if isinstance(node, EmbedNode):
        emb = _embedding(d, node.outer, path)
        rec = node.merge
        a, b = rec.circle_pair
        if len(emb.roots) < 3:
            raise _Reject(f"{path}: merge step needs three outermost circles, found {len(emb.roots)}")
        if a == b or a not in emb.roots or b not in emb.roots:
            raise _Reject(f"{path}: circles {a}, {b} are not distinct outermost circles")
        if emb.preserving[a] != emb.preserving[b]:
            raise _Reject(f"{path}: merged circles have opposite orientation")
        f = rec.arc_face
        if f not in emb.exterior_faces():
            raise _Reject(f"{path}: face {f} is not exterior")
        e1, e2 = rec.arc_edges
        coe = emb.arr.circle_of_edge
        if coe.get(e1) != a or coe.get(e2) != b:
            raise _Reject(f"{path}: arc edges do not lie on the merged circles")
        side = -1 if emb.preserving[a] else 1
        sf = emb.faces.side_face
        if sf[(e1, side)] != f or sf[(e2, side)] != f:
            raise _Reject(f"{path}: arc edges do not border face {f}")
        d2 = swap_heads(d, e1, e2)
        if diagram_hash(d2) != rec.merged_hash:
            raise _Reject(f"{path}: merged diagram hash mismatch")
        a2 = seifert_smooth(d2)
        if len(a2.circles) != len(emb.arr.circles) - 1:
            raise _Reject(f"{path}: band move did not merge two circles")
        if a2.circle_of_edge[e1] != rec.merged_circle:
            raise _Reject(f"{path}: merged circle id mismatch")
        emb2 = _embedding(d2, node.outer, path)
        if len(emb2.roots) != len(emb.roots) - 1:
            raise _Reject(f"{path}: band move did not reduce the outermost circles")
        _check(node.child, d2, node.outer, path + ".child")
        return
    raise _Reject(f"{path}: unknown node {node!r}")


def _embedding(d, outer, path) -> Embedding:
    try:
        emb = Embedding(seifert_smooth(d), tuple(outer))
        emb.check_parity()
    except DiagramError as exc:
        raise _Reject(f"{path}: {exc}") from None
    return emb


# --------------------------------------------------------------------------
# serialization

def cert_to_dict(node) -> dict:
    if isinstance(node, DiskLeaf):
        return {"kind": "DiskLeaf", "chi": 1}
    if isinstance(node, HopfLeaf):
        return {"kind": "HopfLeaf", "chi": 0, "twist": 1}
    if isinstance(node, TorusFiberLeaf):
        return {"kind": "TorusFiberLeaf", "k": node.k, "chi": 2 - node.k}
    if isinstance(node, PlumbNode):
        out = {"kind": "PlumbNode", "chi": embedded_chi(node), "left": cert_to_dict(node.left),
               "center": cert_to_dict(node.center), "right": cert_to_dict(node.right)}
        if node.circles is not None:
            out["circles"] = list(node.circles)
            out["chords"] = list(node.chords or ())
            out["outerFace"] = list(node.outer)
        return out
    if isinstance(node, EmbedNode):
        m = node.merge
        return {"kind": "EmbedNode", "chi": embedded_chi(node), "ambientChi": ambient_chi(node),
                "outerFace": list(node.outer), "child": cert_to_dict(node.child),
                "merge": {"circlePair": list(m.circle_pair), "arcFace": m.arc_face,
                          "arcEdges": list(m.arc_edges), "mergedCircle": m.merged_circle,
                          "mergedHash": m.merged_hash}}
    if isinstance(node, SplitNode):
        return {"kind": "SplitNode", "chi": embedded_chi(node),
                "children": [cert_to_dict(c) for c in node.children]}
    raise TypeError(f"not a certificate node: {node!r}")


def cert_from_dict(obj: dict):
    try:
        kind = obj["kind"]
        if kind == "DiskLeaf":
            return DiskLeaf()
        if kind == "HopfLeaf":
            return HopfLeaf()
        if kind == "TorusFiberLeaf":
            return TorusFiberLeaf(int(obj["k"]))
        if kind == "PlumbNode":
            circ = obj.get("circles")
            return PlumbNode(cert_from_dict(obj["left"]), cert_from_dict(obj["center"]),
                             cert_from_dict(obj["right"]),
                             tuple(circ) if circ is not None else None,
                             tuple(obj["chords"]) if circ is not None else None,
                             tuple(obj["outerFace"]) if circ is not None else None)
        if kind == "EmbedNode":
            m = obj["merge"]
            rec = MergeRecord(tuple(m["circlePair"]), int(m["arcFace"]), tuple(m["arcEdges"]),
                              int(m["mergedCircle"]), str(m["mergedHash"]))
            return EmbedNode(cert_from_dict(obj["child"]), rec, tuple(obj["outerFace"]))
        if kind == "SplitNode":
            return SplitNode(tuple(cert_from_dict(c) for c in obj["children"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed certificate node: {exc}") from None
    raise ValueError(f"unknown certificate node kind {obj.get('kind')!r}")


def dumps(node, d: LinkDiagram) -> str:
    doc = {
        "header": {
            "format": FORMAT,
            "diagram": d.name,
            "diagramHash": diagram_hash(d),
            "outerFacePolicy": "left side of the smallest edge unless a node records outerFace",
            "orientationSeed": "counterclockwise circles are orientation preserving",
        },
        "root": cert_to_dict(node),
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str):
    doc = json.loads(text)
    if doc.get("header", {}).get("format") != FORMAT:
        raise ValueError("not a certificate document")
    return cert_from_dict(doc["root"]), doc["header"]
