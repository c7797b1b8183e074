"""Diagram-level invariants with crossing limits and cross-checks."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .diagram import DiagramError, LinkDiagram, format_pd, mirror, parse_pd, split_pieces
from .laurent import LaurentPoly
from .linalg import det_int
from .oracle import (alexander_from_matrix, jones, kauffman_bracket, signature_from_matrix)
from .seifert import seifert_smooth
from .seifertform import seifert_matrix

__all__ = [
    "CrossingLimitError", "InconsistencyError", "Witness", "max_crossings", "diagram_seifert_matrix",
    "signature", "alexander", "determinant", "jones_checked", "jones_at_minus_one",
    "chirality_witness", "invariants_report",
]

DEFAULT_MAX_CROSSINGS = 16


class CrossingLimitError(DiagramError):
    pass


class InconsistencyError(AssertionError):
    pass


def max_crossings(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("LINKDIAG_MAX_CROSSINGS")
    return int(env) if env else DEFAULT_MAX_CROSSINGS


def jones_checked(d: LinkDiagram, limit: int | None = None) -> LaurentPoly:
    lim = max_crossings(limit)
    if d.n_crossings > lim:
        raise CrossingLimitError(f"{d.n_crossings} crossings exceed the state-sum limit {lim}")
    return jones(d, kauffman_bracket(d))


def diagram_seifert_matrix(d: LinkDiagram) -> list[list[int]]:
    """Block sum of the Seifert matrices of the diagram's pieces."""
    body = format_pd(d).split("\n", 1)[1] if d.name else format_pd(d)
    return [list(row) for row in _matrix_of(body)]


@lru_cache(maxsize=256)
def _matrix_of(pd_text: str) -> tuple[tuple[int, ...], ...]:
    d = parse_pd(pd_text)
    blocks = [seifert_matrix(seifert_smooth(p)) for p in split_pieces(d) if p.n_crossings]
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[k + i][k:k + len(row)] = row
        k += len(b)
    return tuple(tuple(r) for r in out)


def _n_pieces(d: LinkDiagram) -> int:
    return len(split_pieces(d))


def signature(d: LinkDiagram) -> int:
    return signature_from_matrix(diagram_seifert_matrix(d))


def alexander(d: LinkDiagram) -> LaurentPoly:
    if _n_pieces(d) > 1:
        return LaurentPoly({}, "t")
    return alexander_from_matrix(diagram_seifert_matrix(d))


def jones_at_minus_one(j: LaurentPoly) -> int:
    """|J(-1)| exactly, taking t^(1/2) = i when half powers occur."""
    re = im = 0
    for e, v in j.coeffs.items():
        if j.step == 1:
            re += v if e % 2 == 0 else -v
        else:
            r = e % 4
            if r == 0:
                re += v
            elif r == 1:
                im += v
            elif r == 2:
                re -= v
            else:
                im -= v
    if re and im:
        raise InconsistencyError("J(-1) is not real or purely imaginary")
    return abs(re) + abs(im)


def determinant(d: LinkDiagram, limit: int | None = None) -> int:
    """|det(V+V^T)|, cross-checked against |J(-1)| when the state sum is allowed."""
    if _n_pieces(d) > 1:
        via_v = 0
    else:
        v = diagram_seifert_matrix(d)
        n = len(v)
        via_v = abs(det_int([[v[i][j] + v[j][i] for j in range(n)] for i in range(n)]))
    try:
        j = jones_checked(d, limit)
    except CrossingLimitError:
        return via_v
    via_j = jones_at_minus_one(j)
    if via_j != via_v:
        raise InconsistencyError(f"determinant mismatch: |det(V+V^T)| = {via_v}, |J(-1)| = {via_j}")
    return via_v


@dataclass(frozen=True)
class Witness:
    kind: str  # signature | jones | inconclusive
    value: object = None
    mirror_value: object = None

    def as_dict(self) -> dict:
        conv = (lambda x: x if x is None or isinstance(x, int) else str(x))
        return {"kind": self.kind, "value": conv(self.value), "mirrorValue": conv(self.mirror_value)}


def chirality_witness(d: LinkDiagram, limit: int | None = None) -> Witness:
    m = mirror(d)
    s, sm = signature(d), signature(m)
    if s != sm:
        return Witness("signature", s, sm)
    try:
        j, jm = jones_checked(d, limit), jones_checked(m, limit)
    except CrossingLimitError:
        return Witness("inconclusive")
    if j != jm:
        return Witness("jones", j, jm)
    return Witness("inconclusive")


def invariants_report(d: LinkDiagram, limit: int | None = None) -> dict:
    out = {
        "alexander": str(alexander(d)),
        "signature": signature(d),
        "determinant": determinant(d, limit),
    }
    try:
        out["jones"] = str(jones_checked(d, limit))
    except CrossingLimitError:
        out["jones"] = None
    return out
