"""Deterministic diagram generators.

Random choices come from SplitMix64 so that a (generator, parameters, seed)
triple names the same diagram on every platform.
"""

from __future__ import annotations

from .diagram import DiagramError, LinkDiagram, braid_closure, parse_braid, pieces_of
from .seifert import Chord, SeifertArrangement, SeifertCircle, arrangement_to_pd

__all__ = ["SplitMix64", "torus2k", "positive_braid", "random_braid", "pretzel", "chain",
           "from_layout", "GENERATORS", "positive_corpus", "mixed_corpus", "FIGURE_EIGHT"]

FIGURE_EIGHT = "3: 1 -2 1 -2"

_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, golden-ratio increment."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Integer in [0, n); plain modulo, the bias is irrelevant here."""
        return self.next64() % n


def torus2k(k: int) -> LinkDiagram:
    if k < 1:
        raise DiagramError("torus2k needs k >= 1")
    return braid_closure(2, [1] * k, f"torus2k({k})")


def positive_braid(n: int, length: int, seed: int) -> LinkDiagram:
    if n < 2 or length < 0:
        raise DiagramError("positiveBraid needs n >= 2 and length >= 0")
    rng = SplitMix64(seed)
    word = [1 + rng.below(n - 1) for _ in range(length)]
    return braid_closure(n, word, f"positiveBraid({n},{length},{seed})")


def random_braid(n: int, length: int, seed: int) -> LinkDiagram:
    """Braid closure with independently signed letters."""
    if n < 2 or length < 0:
        raise DiagramError("randomBraid needs n >= 2 and length >= 0")
    rng = SplitMix64(seed)
    word = []
    for _ in range(length):
        g = 1 + rng.below(n - 1)
        word.append(g if rng.below(2) else -g)
    return braid_closure(n, word, f"randomBraid({n},{length},{seed})")


def from_layout(circles: list[list[str]], chords: dict, name: str) -> LinkDiagram:
    """Diagram from Seifert circles given as chord labels in traversal order.

    ``chords`` maps a label to ``(sign, under_index, over_index)``.  Edges are
    numbered circle by circle; on a circle ``[x0, x1, ...]`` edge k runs from
    x_k to x_{k+1}.
    """
    sc = []
    where: dict[tuple[str, int], int] = {}
    nxt = 1
    for ci, seq in enumerate(circles):
        m = max(len(seq), 1)
        edges = tuple(range(nxt, nxt + m))
        nxt += m
        sc.append(SeifertCircle(edges[0], edges))
        for k, lab in enumerate(seq):
            where[(lab, ci)] = (k - 1) % m
    chs = []
    for cid, (lab, (sign, u, o)) in enumerate(sorted(chords.items(), key=lambda t: _natural(t[0])), 1):
        chs.append(Chord(cid, sign, sc[u].id, sc[o].id, where[(lab, u)], where[(lab, o)]))
    dummy = LinkDiagram((), ((1,),))
    return arrangement_to_pd(SeifertArrangement(dummy, tuple(sc), tuple(chs)), name)


def _natural(label: str):
    return tuple(int(p) if p.isdigit() else p for p in label.replace(",", ".").split("."))


def chain(ks: list[int]) -> LinkDiagram:
    """Circles C0..Cm side by side; ks[i] positive crossings join C_i and C_{i+1}.

    The smallest edge runs along the top of C1, so the default outer face is
    the unbounded one and every circle is outermost.
    """
    ks = list(ks)
    if not ks or any(k < 1 for k in ks):
        raise DiagramError("chain needs a non-empty list of positive counts")
    m = len(ks)
    chords = {}
    right: list[list[str]] = [[] for _ in range(m + 1)]
    left: list[list[str]] = [[] for _ in range(m + 1)]
    for i, k in enumerate(ks):
        for j in range(k):
            lab = f"{i}.{j}"
            right[i].append(lab)
            left[i + 1].append(lab)
            ccw = i % 2 == 0
            u, o = (i + 1, i) if ccw else (i, i + 1)
            chords[lab] = (1, u, o)
    seqs = []
    for i in range(m + 1):
        if i % 2 == 0:  # counterclockwise: up the right side, down the left
            seqs.append(right[i] + left[i][::-1])
        else:  # clockwise: up the left side, down the right
            seqs.append(left[i] + right[i][::-1])
    # C1 first, starting at its topmost left chord
    c1 = seqs[1]
    top = len(left[1]) - 1
    seqs[1] = c1[top:] + c1[:top]
    order = [1, 0] + list(range(2, m + 1))
    remap = {old: new for new, old in enumerate(order)}
    chords = {lab: (s, remap[u], remap[o]) for lab, (s, u, o) in chords.items()}
    return from_layout([seqs[i] for i in order], chords, f"chain({','.join(map(str, ks))})")


def pretzel(*cols: int) -> LinkDiagram:
    """Pretzel diagram with antiparallel twist columns.

    Column j has |cols[j]| crossings of sign sign(cols[j]).  All columns must
    have the same parity for this orientation to exist.
    """
    if len(cols) < 1 or any(c == 0 for c in cols):
        raise DiagramError("pretzel needs non-zero column lengths")
    if len({abs(c) % 2 for c in cols}) != 1:
        raise DiagramError("pretzel columns of mixed parity are not supported")
    # circle 0 = top (counterclockwise), circle 1 = bottom, then the small ones
    seqs: list[list[str]] = [[], []]
    chords = {}
    even = abs(cols[0]) % 2 == 0
    for j, c in enumerate(cols):
        n, sign = abs(c), (1 if c > 0 else -1)
        stack = [0]
        for t in range(n - 1):
            seqs.append([])
            stack.append(len(seqs) - 1)
        stack.append(1)
        for t in range(n):
            a, b = stack[t], stack[t + 1]  # a above b
            lab = f"{j}.{t}"
            ccw_a = (t % 2 == 0)
            # travelling east (a ccw) the lower circle is on the right
            right, leftc = (b, a) if ccw_a else (a, b)
            u, o = (right, leftc) if sign > 0 else (leftc, right)
            chords[lab] = (sign, u, o)
            seqs[a].append(lab)
            seqs[b].append(lab)
    if even:  # bottom circle counterclockwise: its top side runs west
        seqs[1] = seqs[1][::-1]
    return from_layout(seqs, chords, f"pretzel({','.join(map(str, cols))})")


GENERATORS = {
    "torus2k": (torus2k, ["k"]),
    "positiveBraid": (positive_braid, ["n", "length", "seed"]),
    "randomBraid": (random_braid, ["n", "length", "seed"]),
    "pretzel": (pretzel, ["p", "q", "r"]),
    "chain": (chain, ["k..."]),
}


def _connected(d: LinkDiagram) -> bool:
    return len(pieces_of(d)) + len(d.crossingless) == 1


def positive_corpus(seed: int = 1, n_random: int = 80) -> list[LinkDiagram]:
    """Torus fibers, seeded positive braids and multi-outermost layouts."""
    out = [torus2k(k) for k in range(1, 11)]
    rng = SplitMix64(seed)
    while len(out) < 10 + n_random:
        n = 2 + rng.below(3)
        length = 1 + rng.below(12)
        d = positive_braid(n, length, rng.next64() & 0xFFFFFFFF)
        if _connected(d):
            out.append(d)
    out += [chain(ks) for ks in ([1, 1], [2, 3], [2, 3, 2], [1, 2, 1, 2], [3, 1, 1, 3], [2, 2, 2, 2, 2])]
    out += [pretzel(1, 3, 3), pretzel(3, 3, 3), pretzel(1, 1, 1), pretzel(2, 2, 2), pretzel(1, 3, 5, 1)]
    return out


def mixed_corpus(seed: int = 1, n_random: int = 60, max_length: int = 12) -> list[LinkDiagram]:
    """Seeded signed braids plus a few named diagrams, all connected."""
    out = [parse_braid(FIGURE_EIGHT, "figure8"), pretzel(-1, 3, 3), pretzel(1, -3, 5)]
    rng = SplitMix64(seed ^ 0x5EED)
    while len(out) < 3 + n_random:
        n = 2 + rng.below(3)
        length = 1 + rng.below(max_length)
        d = random_braid(n, length, rng.next64() & 0xFFFFFFFF)
        if _connected(d):
            out.append(d)
    return out
