import pytest
from hypothesis import given, strategies as st

from linkdiag.bands import BandWord, band_word_expand, band_word_positive_braid, parse_braid_word
from linkdiag.diagram import PDSyntaxError, PreconditionError, braid_closure
from linkdiag.oracle import jones
from linkdiag.seifert import stats


def test_generators_become_adjacent_bands():
    b = band_word_positive_braid("3: 1 2 1")
    assert b == BandWord(3, ((1, 2), (2, 3), (1, 2)))
    assert b.euler_characteristic == 0
    assert band_word_positive_braid("2: 1 1 1").euler_characteristic == -1


def test_negative_generator_rejected():
    with pytest.raises(PreconditionError, match="negative generator"):
        band_word_positive_braid("3: 1 -2")


def test_parse_errors():
    for bad in ("3 1 2", "3: 3", "0:", "2: a"):
        with pytest.raises(PDSyntaxError):
            parse_braid_word(bad)


@pytest.mark.parametrize("band,word", [
    ((1, 2), [1]),
    ((1, 3), [1, 2, -1]),
    ((2, 5), [2, 3, 4, -3, -2]),
])
def test_expansion_examples(band, word):
    assert band_word_expand(BandWord(5, (band,))) == word


def test_invalid_band_rejected():
    with pytest.raises(PreconditionError):
        band_word_expand(BandWord(3, ((2, 4),)))


@st.composite
def band_words(draw):
    n = draw(st.integers(2, 5))
    pair = st.tuples(st.integers(1, n - 1), st.integers(2, n)).filter(lambda p: p[0] < p[1])
    return BandWord(n, tuple(draw(st.lists(pair, max_size=5))))


@given(band_words())
def test_expansion_length(b):
    assert len(band_word_expand(b)) == sum(2 * (j - i) - 1 for i, j in b.bands)


@given(band_words())
def test_expansion_keeps_link_type_data(b):
    # a band is a conjugate of a positive generator: writhe +1 and the
    # permutation of a transposition (i j)
    word = band_word_expand(b)
    assert sum(1 if g > 0 else -1 for g in word) == len(b.bands)
    perm = list(range(b.n + 1))
    for g in word:
        k = abs(g)
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
    ref = list(range(b.n + 1))
    for i, j in b.bands:
        ref[i], ref[j] = ref[j], ref[i]
    assert perm == ref


def test_positive_braid_surface_matches_seifert_surface():
    spec = "3: 1 2 1 2"
    b = band_word_positive_braid(spec)
    n, word = parse_braid_word(spec)
    assert b.euler_characteristic == stats(braid_closure(n, word)).euler_s


def test_conjugated_band_is_same_link():
    # sigma_{1,3} closes to the same link as sigma_2 on three strands
    w = band_word_expand(BandWord(3, ((1, 3),)))
    assert jones(braid_closure(3, w)) == jones(braid_closure(3, [2]))


def test_str():
    assert str(BandWord(3, ((1, 2), (1, 3)))) == "3: (1,2) (1,3)"
