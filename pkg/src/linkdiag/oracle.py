"""Link invariants used to cross-check the surface constructions.

The bracket uses variable A with loop value -A^2 - A^-2; the A-smoothing of
``X(a,b,c,d)`` joins a with b and c with d.  The Jones polynomial is
(-A^3)^(-w) <D> with A = t^(-1/4).
"""

from __future__ import annotations

import numpy as np

from .diagram import LinkDiagram, mirror, pieces_of
from .laurent import LaurentPoly
from .linalg import det_int, poly_det, signature_sym

__all__ = [
    "kauffman_bracket", "bracket_skein", "jones", "alexander_from_matrix",
    "signature_from_matrix", "determinant_from_matrix", "goeritz_matrix",
    "goeritz_signature", "goeritz_determinant", "fox_alexander", "normalize_alexander",
]

_LOOP = None


def _loop() -> LaurentPoly:
    global _LOOP
    if _LOOP is None:
        _LOOP = LaurentPoly({2: -1, -2: -1}, "A")
    return _LOOP


def _assemble(n: int, counts: dict[tuple[int, int], int]) -> LaurentPoly:
    """sum over (b, loops) of count * A^(n - 2b) * delta^(loops - 1)."""
    out = LaurentPoly({}, "A")
    powers: dict[int, LaurentPoly] = {}
    for (b, loops), cnt in counts.items():
        if loops - 1 not in powers:
            powers[loops - 1] = _loop() ** (loops - 1)
        out = out + powers[loops - 1].shift(n - 2 * b) * cnt
    return out


def _dart_index(d: LinkDiagram):
    """Edge partner of every dart, darts numbered 4*i + slot."""
    n = d.n_crossings
    partner = np.empty(4 * n, dtype=np.int64)
    for e in d.head:
        (i, s), (j, t) = d.tail[e], d.head[e]
        partner[4 * i + s] = 4 * j + t
        partner[4 * j + t] = 4 * i + s
    return partner


def kauffman_bracket(d: LinkDiagram) -> LaurentPoly:
    """Bracket by summing over all 2^n smoothing states."""
    n = d.n_crossings
    free = len(d.crossingless)
    if n == 0:
        return _loop() ** (free - 1)
    partner = _dart_index(d)
    states = np.arange(1 << n, dtype=np.int64)
    bits = ((states[:, None] >> np.arange(n)) & 1).astype(bool)  # True = B-smoothing
    base = np.arange(4 * n)
    slot = base % 4
    # A: 0<->1, 2<->3 ; B: 0<->3, 1<->2
    a_mate = base + np.where(slot % 2 == 0, 1, -1)
    b_mate = base + np.select([slot == 0, slot == 3, slot == 1, slot == 2], [3, -3, 1, -1])
    cross = base // 4
    smooth = np.where(bits[:, cross], b_mate[None, :], a_mate[None, :])
    perm = smooth[:, partner]  # dart -> partner -> smoothing mate
    label = np.broadcast_to(base, perm.shape).copy()
    step = perm.copy()
    rows = np.arange(perm.shape[0])[:, None]
    for _ in range(int(np.ceil(np.log2(4 * n))) + 1):
        label = np.minimum(label, label[rows, step])
        step = step[rows, step]
    loops = (label == base).sum(axis=1) // 2 + free
    nb = bits.sum(axis=1)
    keys, cnt = np.unique(nb * (4 * n + free + 1) + loops, return_counts=True)
    counts = {(int(k) // (4 * n + free + 1), int(k) % (4 * n + free + 1)): int(c)
              for k, c in zip(keys, cnt)}
    return _assemble(n, counts)


def bracket_skein(d: LinkDiagram) -> LaurentPoly:
    """Bracket by recursive smoothing with label merging."""
    xs = [tuple(c.slots) for c in d.crossings]
    counts: dict[tuple[int, int], int] = {}

    def join(crossings, pairs, loops):
        crossings = [list(c) for c in crossings]
        pending = list(pairs)
        while pending:
            x, y = pending.pop()
            if x == y:
                loops += 1
                continue
            for c in crossings:
                for k in range(4):
                    if c[k] == y:
                        c[k] = x
            pending = [(x if p == y else p, x if q == y else q) for p, q in pending]
        return [tuple(c) for c in crossings], loops

    def rec(crossings, b, loops, open_labels):
        if not crossings:
            counts[(b, loops)] = counts.get((b, loops), 0) + 1
            return
        (a1, b1, c1, d1), rest = crossings[0], crossings[1:]
        for pairs, extra in ((((a1, b1), (c1, d1)), 0), (((a1, d1), (b1, c1)), 1)):
            nxt, lp = join(rest, pairs, loops)
            rec(nxt, b + extra, lp, open_labels)

    rec(xs, 0, len(d.crossingless), None)
    return _assemble(d.n_crossings, counts)


def jones(d: LinkDiagram, bracket: LaurentPoly | None = None) -> LaurentPoly:
    br = bracket if bracket is not None else kauffman_bracket(d)
    w = sum(d.signs)
    v = br * LaurentPoly({-3 * w: -1 if w % 2 else 1}, "A")
    # A^k = t^(-k/4) = (t^(1/2))^(-k/2)
    if any(k % 2 for k in v.coeffs):
        raise ArithmeticError("odd A-exponent in normalised bracket")
    return LaurentPoly({-k // 2: c for k, c in v.coeffs.items()}, "t", 2).normalize_step()


# --------------------------------------------------------------------------
# forms from a Seifert matrix

def normalize_alexander(coeffs: list[int]) -> LaurentPoly:
    """Centre the exponents at 0 and make the leading coefficient positive."""
    return LaurentPoly(dict(enumerate(coeffs)), "t").symmetrize()


def alexander_from_matrix(v: list[list[int]]) -> LaurentPoly:
    n = len(v)
    if n == 0:
        return LaurentPoly({0: 1}, "t")
    coeffs = poly_det(lambda t: [[v[i][j] - t * v[j][i] for j in range(n)] for i in range(n)], n, n)
    return normalize_alexander(coeffs)


def signature_from_matrix(v: list[list[int]]) -> int:
    n = len(v)
    return signature_sym([[v[i][j] + v[j][i] for j in range(n)] for i in range(n)])


def determinant_from_matrix(v: list[list[int]]) -> int:
    n = len(v)
    return abs(det_int([[v[i][j] + v[j][i] for j in range(n)] for i in range(n)]))


# --------------------------------------------------------------------------
# checkerboard (Goeritz) route

def _checkerboard(d: LinkDiagram):
    from .embedding import faces as face_set
    fs = face_set(d)
    sf = fs.side_face
    n = len(fs)
    color = [-1] * n
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in d.edges:
        a, b = sf[(e, 1)], sf[(e, -1)]
        adj[a].append(b)
        adj[b].append(a)
    for start in range(n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if color[g] < 0:
                    color[g] = 1 - color[f]
                    stack.append(g)
                elif color[g] == color[f]:
                    raise ArithmeticError("faces are not two-colourable")
    return fs, color


def goeritz_matrix(d: LinkDiagram):
    """Goeritz matrix of the shading containing the outer face, and the correction term."""
    if len(pieces_of(d)) != 1 or d.crossingless:
        raise ValueError("Goeritz route needs a connected diagram with crossings")
    fs, color = _checkerboard(d)
    sf = fs.side_face
    shade = 1 - color[fs.outer]
    regions = sorted(f for f in range(len(fs)) if color[f] == shade)
    pos = {f: k for k, f in enumerate(regions)}
    m = len(regions)
    g = [[0] * m for _ in range(m)]
    mu = 0
    for i, sign in enumerate(d.signs):
        # corner (s, s+1) is the face left of the dart leaving through slot s
        corner = [sf[d.dart_side((i, s))] for s in range(4)]
        if color[corner[0]] == shade:  # B-corners (0,1) and (2,3) are shaded
            eta, r1, r2 = 1, corner[0], corner[2]
        else:
            eta, r1, r2 = -1, corner[1], corner[3]
        # type II: the oriented smoothing keeps the shaded corners apart
        if sign == eta:
            mu += eta
        if r1 != r2:
            a, b = pos[r1], pos[r2]
            g[a][b] -= eta
            g[b][a] -= eta
    for a in range(m):
        g[a][a] = -sum(g[a][b] for b in range(m) if b != a)
    reduced = [row[1:] for row in g[1:]]
    return reduced, mu


def goeritz_signature(d: LinkDiagram) -> int:
    g, mu = goeritz_matrix(d)
    return signature_sym(g) - mu


def goeritz_determinant(d: LinkDiagram) -> int:
    g, _ = goeritz_matrix(d)
    return abs(det_int(g))


# --------------------------------------------------------------------------
# Wirtinger / Fox route

def fox_alexander(d: LinkDiagram) -> LaurentPoly:
    """Alexander polynomial from a Wirtinger presentation (one row and column deleted)."""
    if d.crossingless and d.n_crossings:
        return LaurentPoly({}, "t")
    if d.n_crossings == 0:
        return LaurentPoly({0: 1} if len(d.crossingless) == 1 else {}, "t")
    # arcs: union edges joined through over-passages
    parent = {e: e for e in d.head}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, c in enumerate(d.crossings):
        a, b = find(c.slots[1]), find(c.slots[3])
        if a != b:
            parent[max(a, b)] = min(a, b)
    arcs = sorted({find(e) for e in d.head})
    col = {a: k for k, a in enumerate(arcs)}
    n = len(arcs)
    if n != d.n_crossings:
        # some component never passes under: it lifts off, so the link is split
        return LaurentPoly({}, "t")
    rows = []
    for i, c in enumerate(d.crossings):
        k, ii, jj = col[find(c.slots[1])], col[find(c.slots[0])], col[find(c.slots[2])]
        rows.append((k, ii, jj, d.signs[i]))

    def mat(t):
        m = [[0] * n for _ in range(len(rows))]
        for r, (k, ii, jj, s) in enumerate(rows):
            if s > 0:
                m[r][k] += 1 - t
                m[r][ii] += t
                m[r][jj] -= 1
            else:
                m[r][k] += 1 - t
                m[r][ii] -= 1
                m[r][jj] += t
        return [row[1:] for row in m[1:]]

    coeffs = poly_det(mat, n - 1, n - 1)
    return normalize_alexander(coeffs)
