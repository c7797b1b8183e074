"""Brute-force reference computations used only by the tests.

They read the raw slots plus the edge orientation (tail and head darts) and
recompute signs and Seifert circles by separate, deliberately naive code.
"""

from __future__ import annotations

import itertools

# slot k of a crossing sits at compass angle -45 + 90k degrees
_POS = {0: (1, -1), 1: (1, 1), 2: (-1, 1), 3: (-1, -1)}


def _over_in(d, i):
    c = d.crossings[i]
    for s in (1, 3):
        if d.head[c.slots[s]] == (i, s) and d.tail[c.slots[(s + 2) % 4]] == (i, (s + 2) % 4):
            return s
    raise AssertionError("no incoming over-strand")


def sign_by_vectors(d, i):
    """Right-hand rule: positive iff (over direction x under direction) points up."""
    s = _over_in(d, i)
    a, b = _POS[s], _POS[(s + 2) % 4]
    ox, oy = b[0] - a[0], b[1] - a[1]
    ux, uy = _POS[2][0] - _POS[0][0], _POS[2][1] - _POS[0][1]
    return 1 if ox * uy - oy * ux > 0 else -1


def circles_by_darts(d):
    """Seifert circles: at each crossing an incoming strand turns into the
    outgoing strand of the *other* pass."""
    succ = {}
    for e in d.edges:
        if e in d.crossingless:
            succ[e] = e
            continue
        i, s = d.head[e]
        c = d.crossings[i]
        outs = [t for t in range(4) if d.tail[c.slots[t]] == (i, t)]
        straight = (s + 2) % 4
        other = [t for t in outs if t != straight]
        assert len(other) == 1
        succ[e] = c.slots[other[0]]
    seen, circles = set(), []
    for e in sorted(d.edges):
        if e in seen:
            continue
        cyc = []
        while e not in seen:
            seen.add(e)
            cyc.append(e)
            e = succ[e]
        circles.append(sorted(cyc))
    return circles


def brute_counts(d):
    """(#pos, #neg, #circles, #circles touching a positive crossing)."""
    signs = [sign_by_vectors(d, i) for i in range(d.n_crossings)]
    circles = circles_by_darts(d)
    where = {e: k for k, cyc in enumerate(circles) for e in cyc}
    ge = set()
    for i, c in enumerate(d.crossings):
        if signs[i] > 0:
            ge |= {where[e] for e in c.slots}
    return signs.count(1), signs.count(-1), len(circles), len(ge)


def faces_by_permutation(d):
    """Number of faces of the rotation system, from dart permutations."""
    darts = [(i, s) for i in range(d.n_crossings) for s in range(4)]
    partner = {}
    for e in d.head:
        partner[d.tail[e]] = d.head[e]
        partner[d.head[e]] = d.tail[e]
    seen = set()
    count = 0
    for start in darts:
        if start in seen:
            continue
        count += 1
        x = start
        while x not in seen:
            seen.add(x)
            j, t = partner[x]
            x = (j, (t - 1) % 4)
    return count + 2 * len(d.crossingless)


def bracket_brute(d):
    """Kauffman bracket as {A-exponent: coeff} by explicit state loops."""
    n = d.n_crossings
    total = {}
    for state in itertools.product((0, 1), repeat=n):
        parent = {e: e for e in d.edges}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for bit, c in zip(state, d.crossings):
            a, b, cc, dd = c.slots
            pairs = ((a, b), (cc, dd)) if bit == 0 else ((a, dd), (b, cc))
            for x, y in pairs:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        loops = len({find(e) for e in d.edges})
        expo = state.count(0) - state.count(1)
        # (-A^2 - A^-2)^(loops-1)
        poly = {0: 1}
        for _ in range(loops - 1):
            nxt = {}
            for k, v in poly.items():
                nxt[k + 2] = nxt.get(k + 2, 0) - v
                nxt[k - 2] = nxt.get(k - 2, 0) - v
            poly = nxt
        for k, v in poly.items():
            total[k + expo] = total.get(k + expo, 0) + v
    return {k: v for k, v in total.items() if v}
