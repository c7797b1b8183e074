"""Seifert matrix of the surface built by Seifert's algorithm.

Disks sit at height equal to their nesting depth, bands carry one half twist.
Basis curves are the fundamental cycles of a breadth-first spanning tree of
the Seifert graph.  Each curve runs just inside the disks it visits (in the
direction of the circle) and crosses bands along a straight track.  Away from
crossings the curves run parallel, so every linking contribution is found in
a small frame around some crossing.  Inside a frame the pieces are explicit
polylines and lk(a, b+) is read off from projected crossings.

Frame coordinates: both smoothing arcs run north (+Y), the arc of circle W
at X = -1 and the arc of circle E at X = +1; the band fills the gap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .diagram import PreconditionError
from .embedding import Embedding
from .seifert import SeifertArrangement

__all__ = ["CycleBasis", "cycle_basis", "seifert_matrix"]

HALF_WIDTH = 0.3
FRAME = 1.0
SAMPLES = 7


@dataclass(frozen=True)
class CycleBasis:
    """Each cycle is a list of (chord index, from circle, to circle)."""

    cycles: tuple[tuple[tuple[int, int, int], ...], ...]
    tree: tuple[int, ...]  # chord indices in the spanning tree


def cycle_basis(a: SeifertArrangement) -> CycleBasis:
    ids = sorted(c.id for c in a.circles)
    if not ids:
        return CycleBasis((), ())
    adj: dict[int, list[tuple[int, int]]] = {c: [] for c in ids}
    for k, ch in enumerate(a.chords):
        adj[ch.under].append((k, ch.over))
        adj[ch.over].append((k, ch.under))
    for c in ids:
        adj[c].sort(key=lambda t: (a.chords[t[0]].crossing, t[1]))
    root = ids[0]
    parent: dict[int, tuple[int, int] | None] = {root: None}
    q = deque([root])
    while q:
        c = q.popleft()
        for k, o in adj[c]:
            if o not in parent:
                parent[o] = (k, c)
                q.append(o)
    if len(parent) != len(ids):
        raise PreconditionError("Seifert graph is disconnected")
    tree = {p[0] for p in parent.values() if p is not None}

    def path_to_root(c):
        out = []
        while parent[c] is not None:
            k, p = parent[c]
            out.append((k, c, p))
            c = p
        return out

    cycles = []
    for k, ch in sorted(enumerate(a.chords), key=lambda t: t[1].crossing):
        if k in tree:
            continue
        # chord from under to over, then back through the tree
        up_o = path_to_root(ch.over)
        up_u = path_to_root(ch.under)
        # strip the common part near the root
        while up_o and up_u and up_o[-1] == up_u[-1]:
            up_o.pop()
            up_u.pop()
        back = up_o + [(kk, p, c) for kk, c, p in reversed(up_u)]
        cycles.append(tuple([(k, ch.under, ch.over)] + back))
    return CycleBasis(tuple(cycles), tuple(sorted(tree)))


# --------------------------------------------------------------------------
# band geometry


def _centerline(sw: int, se: int, hw: float, he: float) -> np.ndarray:
    """Waypoints (X, Z) of the band core from the W arc to the E arc."""
    pts = [(-1.0, hw)]
    if sw > 0:  # W is the parent: leave its edge westwards and fold back over its disk
        pts += [(-1.12, hw + 0.04), (-1.18, hw + 0.15), (-1.1, hw + 0.26), (-0.85, hw + 0.32)]
    else:
        pts += [(-0.85, hw)]
    mid = (hw + he) / 2 if sw == -se else (min(hw, he) + 0.5)
    lo = len(pts)
    pts += [(-0.5, mid), (0.5, mid)]
    if se < 0:  # E is the parent: overshoot and fold back onto its edge
        pts += [(0.85, he + 0.32), (1.1, he + 0.26), (1.18, he + 0.15), (1.12, he + 0.04)]
    else:
        pts += [(0.85, he)]
    pts += [(1.0, he)]
    out = []
    for p, q in zip(pts, pts[1:]):
        for t in np.linspace(0.0, 1.0, SAMPLES, endpoint=False):
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    out.append(pts[-1])
    return np.array(out), lo * SAMPLES, (lo + 1) * SAMPLES


def _band(sw: int, se: int, hw: float, he: float, twist: int):
    """Sampled band: core points, ruling directions R and unit normals n."""
    core2, i0, i1 = _centerline(sw, se, hw, he)
    core = np.column_stack([core2[:, 0], np.zeros(len(core2)), core2[:, 1]])
    tan = np.gradient(core, axis=0)
    # the twist happens on the level part of the core
    u = np.clip((np.arange(len(core)) - i0) / (i1 - i0), 0.0, 1.0)
    phi = twist * np.pi * (3 * u ** 2 - 2 * u ** 3)
    tn = tan / np.linalg.norm(tan, axis=1)[:, None]
    nrm = np.column_stack([-tn[:, 2], np.zeros(len(tn)), tn[:, 0]])
    ydir = np.array([0.0, 1.0, 0.0])
    ruling = np.cos(phi)[:, None] * ydir + np.sin(phi)[:, None] * nrm
    normal = np.cross(tn, ruling)
    normal /= np.linalg.norm(normal, axis=1)[:, None]
    return core, ruling, normal


def _segment_hits(a0, a1, b0, b1):
    """Projected crossings between segment sets; returns (i, j, z_a, z_b, sign).

    ``sign`` is that of (dir_b x dir_a), the crossing sign when b is over.
    """
    da = (a1 - a0)[:, None, :]
    db = (b1 - b0)[None, :, :]
    diff = b0[None, :, :] - a0[:, None, :]
    den = da[..., 0] * db[..., 1] - da[..., 1] * db[..., 0]
    with np.errstate(divide="ignore", invalid="ignore"):
        s = (diff[..., 0] * db[..., 1] - diff[..., 1] * db[..., 0]) / den
        t = (diff[..., 0] * da[..., 1] - diff[..., 1] * da[..., 0]) / den
    hit = (np.abs(den) > 1e-15) & (s >= 0) & (s < 1) & (t >= 0) & (t < 1)
    i, j = np.nonzero(hit)
    za = a0[i, 2] + s[i, j] * (a1[i, 2] - a0[i, 2])
    zb = b0[j, 2] + t[i, j] * (b1[j, 2] - b0[j, 2])
    sign = np.where(-den[i, j] > 0, 1, -1)
    return i, j, za, zb, sign


def _crossings(p: np.ndarray, q: np.ndarray):
    """Projected crossings of polylines p and q as (z_p, z_q, sign)."""
    _, _, za, zb, sg = _segment_hits(p[:-1], p[1:], q[:-1], q[1:])
    return list(zip(za, zb, sg))


def _segments(polys):
    owner = np.concatenate([np.full(len(p) - 1, k) for k, p in enumerate(polys)])
    return (np.vstack([p[:-1] for p in polys]), np.vstack([p[1:] for p in polys]), owner)


_TWIST_CACHE: dict[tuple[int, int, int], int] = {}


def _twist_for(sw: int, se: int, sign: int) -> int:
    """Twist direction whose band edges cross with the given sign."""
    key = (sw, se, sign)
    if key not in _TWIST_CACHE:
        hw, he = _heights(sw, se)
        for twist in (1, -1):
            core, ruling, _ = _band(sw, se, hw, he, twist)
            s1 = core - HALF_WIDTH * ruling  # W south -> E north
            s2 = (core + HALF_WIDTH * ruling)[::-1]  # E south -> W north
            cr = _crossings(s1, s2)
            if len(cr) != 1:
                continue
            za, zb, sg = cr[0]
            got = sg if zb > za else -sg
            if got == sign:
                _TWIST_CACHE[key] = twist
                break
        else:
            raise AssertionError("no twist realises the crossing")
    return _TWIST_CACHE[key]


def _heights(sw: int, se: int) -> tuple[float, float]:
    if sw < 0 < se:
        return 0.0, 0.0
    if sw > 0 and se > 0:
        return 0.0, 1.0
    if sw < 0 and se < 0:
        return 1.0, 0.0
    raise PreconditionError("impossible local configuration of Seifert circles")


# --------------------------------------------------------------------------
# frames


def seifert_matrix(a: SeifertArrangement, emb: Embedding | None = None,
                   basis: CycleBasis | None = None) -> list[list[int]]:
    """V[i][j] = lk(c_i, c_j^+) for the fundamental-cycle basis."""
    if emb is None:
        emb = Embedding(a)
    if basis is None:
        basis = cycle_basis(a)
    n = len(basis.cycles)
    if n == 0:
        return []
    chords = a.chords
    frames: dict[int, list] = {k: [] for k in range(len(chords))}
    circles = {c.id: c for c in a.circles}

    def pos_on(k: int, cid: int) -> int:
        ch = chords[k]
        return ch.under_pos if ch.under == cid else ch.over_pos

    attached: dict[int, list[tuple[int, int]]] = {c: [] for c in circles}
    for k, ch in enumerate(chords):
        attached[ch.under].append((ch.under_pos, k))
        attached[ch.over].append((ch.over_pos, k))
    for c in attached:
        attached[c].sort()

    def side_of(k: int, cid: int) -> str:
        ch = chords[k]
        w = ch.over if ch.sign > 0 else ch.under
        return "W" if cid == w else "E"

    # lanes and tracks; pushed copies sit a third of a step further in
    lane_step = 0.15 / (n + 1)
    track_step = 0.4 / (n + 1)
    for i, cyc in enumerate(basis.cycles):
        m = len(cyc)
        for t, (k, frm, to) in enumerate(cyc):
            frames[k].append(("band", i, frm, to))
            nk, _, _ = cyc[(t + 1) % m]
            # on circle ``to`` from chord k to chord nk
            p0, p1 = pos_on(k, to), pos_on(nk, to)
            size = len(circles[to].edges)
            for p, kk in attached[to]:
                if kk in (k, nk):
                    continue
                if (p - p0) % size < (p1 - p0) % size:
                    frames[kk].append(("pass", i, to))

    v = np.zeros((n, n), dtype=np.int64)
    check = np.zeros((n, n), dtype=np.int64)
    for k, items in frames.items():
        if not items:
            continue
        ch = chords[k]
        w, e = (ch.over, ch.under) if ch.sign > 0 else (ch.under, ch.over)
        sw = 1 if not emb.preserving[w] else -1
        se = 1 if not emb.preserving[e] else -1
        hw, he = _heights(sw, se)
        if (sw, se) == (1, 1) and emb.parent[e] != w or (sw, se) == (-1, -1) and emb.parent[w] != e:
            raise PreconditionError(f"nesting does not match the frame at crossing {ch.crossing}")
        twist = _twist_for(sw, se, ch.sign)
        core, ruling, normal = _band(sw, se, hw, he, twist)
        pieces: list[tuple[int, bool, np.ndarray]] = []
        for item in items:
            for pushed in (False, True):
                i = item[1]
                lam = 0.02 + lane_step * (i + (1 / 3 if pushed else 0))
                tau = -0.2 + track_step * (i + (1 / 3 if pushed else 0))
                delta = 1e-3 if pushed else 0.0
                if item[0] == "pass":
                    cid = item[2]
                    x0, s_, h = (-1.0, sw, hw) if side_of(k, cid) == "W" else (1.0, se, he)
                    z = h + delta * (-s_)
                    poly = np.array([[x0 + s_ * lam, -FRAME, z], [x0 + s_ * lam, FRAME, z]])
                    pieces.append((i, pushed, poly))
                    continue
                _, _, frm, to = item
                band = core + tau * ruling + delta * normal
                zw = hw + delta * (-sw)
                ze = he + delta * (-se)
                w_in = [[-1.0 + sw * lam, -FRAME, zw], [-1.0 + sw * lam, tau, zw], [-1.0, tau, zw]]
                w_out = [[-1.0, tau, zw], [-1.0 + sw * lam, tau, zw], [-1.0 + sw * lam, FRAME, zw]]
                e_in = [[1.0 + se * lam, -FRAME, ze], [1.0 + se * lam, -tau, ze], [1.0, -tau, ze]]
                e_out = [[1.0, -tau, ze], [1.0 + se * lam, -tau, ze], [1.0 + se * lam, FRAME, ze]]
                if side_of(k, frm) == "W":
                    poly = np.vstack([w_in[:-1], band, e_out[1:]])
                else:
                    poly = np.vstack([e_in[:-1], band[::-1], w_out[1:]])
                pieces.append((i, pushed, poly))
        plain = [(i, poly) for i, pushed, poly in pieces if not pushed]
        moved = [(i, poly) for i, pushed, poly in pieces if pushed]
        a0, a1, ao = _segments([p for _, p in plain])
        b0, b1, bo = _segments([p for _, p in moved])
        si, sj, za, zb, sg = _segment_hits(a0, a1, b0, b1)
        ia = np.array([i for i, _ in plain])[ao[si]]
        jb = np.array([i for i, _ in moved])[bo[sj]]
        over = zb > za
        np.add.at(v, (ia[over], jb[over]), sg[over])
        np.add.at(check, (ia[~over], jb[~over]), -sg[~over])
    if not np.array_equal(v, check):
        raise AssertionError("linking count is not symmetric; geometry is degenerate")
    return v.tolist()
