from __future__ import annotations

from dataclasses import dataclass

from .diagram import PDSyntaxError, PreconditionError

__all__ = ["BandWord", "parse_braid_word", "band_word_positive_braid", "band_word_expand"]


@dataclass(frozen=True)
class BandWord:
    n: int
    bands: tuple[tuple[int, int], ...]  # (i, j) with 1 <= i < j <= n

    @property
    def euler_characteristic(self) -> int:
        return self.n - len(self.bands)

    def __str__(self) -> str:
        return f"{self.n}: " + " ".join(f"({i},{j})" for i, j in self.bands)


def parse_braid_word(spec: str) -> tuple[int, list[int]]:
    head, sep, body = spec.partition(":")
    if not sep:
        raise PDSyntaxError("braid word must look like 'n: g1 g2 ...'")
    try:
        n = int(head)
        word = [int(t) for t in body.split()]
    except ValueError as exc:
        raise PDSyntaxError(f"bad braid word {spec!r}") from exc
    if n < 1 or any(g == 0 or abs(g) >= n for g in word):
        raise PDSyntaxError(f"generator out of range in {spec!r}")
    return n, word


def band_word_positive_braid(spec: str) -> BandWord:
    n, word = parse_braid_word(spec)
    for k, g in enumerate(word):
        if g < 0:
            raise PreconditionError(f"negative generator {g} at position {k + 1}")
    return BandWord(n, tuple((g, g + 1) for g in word))


def band_word_expand(b: BandWord) -> list[int]:
    """Each band (i, j) becomes s_i..s_{j-2} s_{j-1} (s_i..s_{j-2})^-1."""
    out: list[int] = []
    for i, j in b.bands:
        if not 1 <= i < j <= b.n:
            raise PreconditionError(f"band ({i},{j}) is not valid on {b.n} strands")
        head = list(range(i, j - 1))
        out += head + [j - 1] + [-g for g in reversed(head)]
    return out
