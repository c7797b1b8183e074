import pytest
from hypothesis import given, strategies as st

from linkdiag import parse_pd
from linkdiag.diagram import PreconditionError, braid_closure, mirror
from linkdiag.embedding import embed, faces
from linkdiag.generate import chain, positive_corpus, pretzel, torus2k
from linkdiag.seifert import arrangement_to_pd, seifert_smooth, stats

from conftest import TREFOIL_PD
from oracles import faces_by_permutation

FIG8_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


@st.composite
def positive_full_braids(draw):
    """Positive words that use every generator, so the closure is connected."""
    n = draw(st.integers(2, 4))
    extra = draw(st.lists(st.integers(1, n - 1), max_size=8))
    word = list(range(1, n)) + extra
    return n, draw(st.permutations(word))


# ---------------------------------------------------------------- faces

def test_faces_torus_three():
    d = torus2k(3)
    f = len(faces(d))
    assert f == 5
    assert d.n_crossings - len(d.edges) + f == 2


def test_faces_unknot():
    assert len(faces(parse_pd("circle:"))) == 2


def test_faces_trefoil_pd():
    d = parse_pd(TREFOIL_PD)
    assert len(faces(d)) == faces_by_permutation(d) == 5


@given(positive_full_braids())
def test_faces_match_permutation_count(nw):
    d = braid_closure(*nw)
    f = len(faces(d))
    assert f == faces_by_permutation(d)
    assert d.n_crossings - len(d.edges) + f == 2


def test_faces_split_diagram_counts_each_piece():
    d = parse_pd(TREFOIL_PD + "\ncircle:")
    # V - E + F = 1 + #pieces
    assert d.n_crossings - len(d.edges) + len(faces(d)) == 3


def test_bad_outer_marker():
    with pytest.raises(PreconditionError):
        faces(torus2k(3), (99, 1))


# ---------------------------------------------------------------- nesting

def test_torus_closure_nests():
    e = embed(torus2k(3))
    assert sorted(e.depth.values()) == [0, 1]
    assert len(e.roots) == 1


def test_side_by_side_pair():
    e = embed(chain([2]))
    assert sorted(e.depth.values()) == [0, 0]
    assert sorted(e.orientation_flags().values()) == ["preserving", "reversing"]


def test_three_chain_all_outermost():
    d = chain([1, 1])
    e = embed(d)
    assert len(e.roots) == 3
    a = seifert_smooth(d)
    deg = {c.id: 0 for c in a.circles}
    for ch in a.chords:
        deg[ch.under] += 1
        deg[ch.over] += 1
    middle = next(c for c, k in deg.items() if k == 2)
    ends = [c for c in deg if c != middle]
    assert e.preserving[ends[0]] == e.preserving[ends[1]] != e.preserving[middle]


def test_single_circle():
    u = parse_pd("circle: 1")
    e = embed(u, (1, -1))  # outer face on the right: counterclockwise circle
    assert e.roots == [1] and e.depth == {1: 0}
    assert e.orientation_flags() == {1: "preserving"}
    assert embed(u, (1, 1)).orientation_flags() == {1: "reversing"}


def test_nested_pair_equal_flags():
    e = embed(torus2k(1))
    assert len(set(e.preserving.values())) == 1


@given(positive_full_braids())
def test_braid_closure_circles_concentric(nw):
    n, word = nw
    e = embed(braid_closure(n, word))
    assert sorted(e.depth.values()) == list(range(n))
    assert len(e.roots) == 1


def test_parity_and_root_flags_on_corpus():
    for d in positive_corpus():
        e = embed(d)
        e.check_parity()
        assert e.roots
        if len(e.roots) >= 2:
            assert len({e.preserving[r] for r in e.roots}) == 2


def test_flags_ignore_crossing_type():
    d = pretzel(1, 3, 3)
    assert embed(d).orientation_flags() == embed(mirror(d)).orientation_flags()


# ---------------------------------------------------------------- re-embedding

@pytest.mark.parametrize("k", range(1, 7))
def test_reembed_gives_two_roots(k):
    d = torus2k(k)
    e = embed(d)
    assert len(e.roots) == 1
    outer = e.reembed_for_two_roots()
    e2 = embed(d, outer)
    assert len(e2.roots) == 2
    # re-rooting leaves circles and chords untouched
    assert e2.arr.circles == e.arr.circles
    assert e2.arr.chords == e.arr.chords


def test_reembed_rejects_two_roots():
    with pytest.raises(PreconditionError):
        embed(chain([3])).reembed_for_two_roots()


def test_embedding_needs_connected_diagram():
    with pytest.raises(PreconditionError):
        embed(parse_pd(TREFOIL_PD + "\ncircle:"))


# ---------------------------------------------------------------- un-smoothing

def test_round_trip_torus():
    d = torus2k(3)
    assert stats(arrangement_to_pd(seifert_smooth(d))) == stats(d)


def test_round_trip_figure_eight_signs():
    d = parse_pd(FIG8_PD)
    back = arrangement_to_pd(seifert_smooth(d))
    assert sorted(back.signs) == [-1, -1, 1, 1]
    assert back == d


@given(st.integers(2, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(
        st.integers(1, n - 1).flatmap(lambda g: st.sampled_from((g, -g))), max_size=10))))
def test_round_trip_exact(nw):
    d = braid_closure(*nw)
    assert arrangement_to_pd(seifert_smooth(d)) == d
