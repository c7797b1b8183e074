"""Euler characteristic bounds read off a diagram's Seifert circles.

``star`` is (#O>= - #O<) - (#X> - #X<) and ``sbi`` is (#O>= + #O<) - (#X> - #X<),
where O>= are the Seifert circles touching a positive crossing and O< the rest.
The star value is only claimed as an upper bound for the slice Euler
characteristic when every component of the Seifert graph carries a positive
crossing; otherwise the report is marked degenerate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import (LinkDiagram, PreconditionError, connected_sum, monogon_crossings,
                      remove_kink)
from .seifert import (DiagramStats, classify_circles, seifert_graph_components,
                      seifert_smooth, stats)

__all__ = [
    "BoundReport", "AlmostPositiveReport", "bound_star", "bound_sbi", "unknot_estimate",
    "almost_positive_analyze", "verify_first_invariant_of_cor1_proof", "is_degenerate",
    "star_value",
]


@dataclass(frozen=True)
class BoundReport:
    star: int
    sbi: int
    euler_s: int
    degenerate: bool
    chi_s_exact_if_positive: int | None
    u_lower_bound: Fraction | None

    def as_dict(self) -> dict:
        u = self.u_lower_bound
        return {
            "star": self.star,
            "sbi": self.sbi,
            "eulerS": self.euler_s,
            "degenerate": self.degenerate,
            "chiSExactIfPositive": self.chi_s_exact_if_positive,
            "uLowerBound": None if u is None else str(u),
        }


@dataclass(frozen=True)
class AlmostPositiveReport:
    case: str  # Positive-after-RI | ConnectedSumBound | TorusCaseFlagged | NotAlmostPositive
    detail: dict = field(default_factory=dict)
    reduced: LinkDiagram | None = None

    def as_dict(self) -> dict:
        return {"case": self.case, "detail": self.detail}


def star_value(st: DiagramStats) -> int:
    return (st.n_ge - st.n_lt) - (st.n_pos - st.n_neg)


def bound_sbi(d: LinkDiagram) -> int:
    st = stats(d)
    return (st.n_ge + st.n_lt) - (st.n_pos - st.n_neg)


def is_degenerate(d: LinkDiagram) -> bool:
    """True if some Seifert-graph component has no positive crossing."""
    a = seifert_smooth(d)
    comp_of = {}
    for k, group in enumerate(seifert_graph_components(a)):
        for c in group:
            comp_of[c] = k
    hit = {comp_of[ch.under] for ch in a.chords if ch.sign > 0}
    return len(hit) < len(set(comp_of.values()))


def bound_star(d: LinkDiagram) -> BoundReport:
    st = stats(d)
    star = star_value(st)
    sbi = st.n_circles - st.writhe
    degenerate = is_degenerate(d)
    exact = st.euler_s if st.n_neg == 0 and not degenerate else None
    u = None
    if len(d.components) == 1 and not degenerate:
        u = Fraction(1 - star, 2)
    return BoundReport(star, sbi, st.euler_s, degenerate, exact, u)


def unknot_estimate(d: LinkDiagram) -> Fraction:
    """Lower bound (1 - star)/2 for the unknotting number of a knot diagram."""
    if len(d.components) != 1:
        raise PreconditionError(f"unknotting estimate needs a knot, got {len(d.components)} components")
    return Fraction(1 - star_value(stats(d)), 2)


def verify_first_invariant_of_cor1_proof(d: LinkDiagram) -> bool:
    st = stats(d)
    n_o, n_x = st.n_circles, st.n_crossings
    lhs = 2 * (st.n_ge - st.n_pos) - (n_o - n_x)
    if lhs != star_value(st):
        return False
    # the positive sub-arrangement: O>= circles joined by the positive chords
    a = classify_circles(seifert_smooth(d))
    kept = {c.id for c in a.circles if c.label == "ge"}
    pos = [ch for ch in a.chords if ch.sign > 0]
    if any(ch.under not in kept or ch.over not in kept for ch in pos):
        return False
    return len(kept) - len(pos) == st.n_ge - st.n_pos


def almost_positive_analyze(d: LinkDiagram) -> AlmostPositiveReport:
    if len(d.components) != 1:
        raise PreconditionError("almost-positive analysis needs a knot diagram")
    st = stats(d)
    if st.n_neg != 1:
        raise PreconditionError(f"almost-positive analysis needs exactly one negative crossing, got {st.n_neg}")
    neg = d.signs.index(-1)
    chi = st.euler_s
    if st.n_lt == 1:
        if neg not in monogon_crossings(d):
            raise PreconditionError("the negative-only Seifert circle is not a kink")
        reduced = remove_kink(d, neg)
        return AlmostPositiveReport("Positive-after-RI",
                                    {"crossing": d.crossings[neg].id,
                                     "reducedCrossings": reduced.n_crossings,
                                     "reducedNegative": sum(1 for s in reduced.signs if s < 0)},
                                    reduced)
    if chi == 1:
        # the Seifert surface is a disk, so the knot is trivial
        return AlmostPositiveReport("NotAlmostPositive", {"eulerS": chi, "circlesLt": st.n_lt})
    if st.n_lt == 0 and chi < -1:
        e = min(d.edges)
        double = connected_sum(d, e, d, e)
        rep = bound_star(double)
        return AlmostPositiveReport("ConnectedSumBound",
                                    {"eulerS": chi, "starSum": rep.star,
                                     "degenerate": rep.degenerate}, None)
    if chi == -1:
        return AlmostPositiveReport("TorusCaseFlagged",
                                    {"eulerS": chi, "circles": st.n_circles,
                                     "crossings": st.n_crossings})
    raise PreconditionError(f"unexpected configuration: #O< = {st.n_lt}, chi(S) = {chi}")
