import json
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from linkdiag import parse_pd
from linkdiag.certify import (DiskLeaf, EmbedNode, HopfLeaf, PlumbNode, SplitNode, TorusFiberLeaf,
                              ambient_chi, cert_from_dict, cert_to_dict, certify_positive, dumps,
                              embedded_chi, expand, expand_torus_fiber, hopf_count, leaf_kinds,
                              loads, merge_outermost, plumbing_split, verify_cert)
from linkdiag.diagram import PreconditionError, braid_closure, format_pd, relabel
from linkdiag.embedding import embed
from linkdiag.generate import chain, positive_corpus, pretzel, torus2k
from linkdiag.seifert import seifert_smooth, stats

FIG8_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


def disjoint(*ds):
    text, off = "", 0
    for d in ds:
        text += format_pd(relabel(d, off))
        off += max(d.edges) + 1
    return parse_pd(text)


def n_embeds(node):
    if isinstance(node, EmbedNode):
        return 1 + n_embeds(node.child)
    if isinstance(node, PlumbNode):
        return sum(n_embeds(c) for c in (node.left, node.center, node.right))
    if isinstance(node, SplitNode):
        return sum(n_embeds(c) for c in node.children)
    return 0


@st.composite
def positive_words(draw):
    n = draw(st.integers(2, 4))
    return n, draw(st.lists(st.integers(1, n - 1), min_size=1, max_size=12))


# ---------------------------------------------------------------- examples

def test_unknot_is_disk():
    d = parse_pd("circle:")
    c = certify_positive(d)
    assert c == DiskLeaf()
    assert verify_cert(c, d).ok


@pytest.mark.parametrize("k", range(1, 11))
def test_torus_closure_is_one_torus_fiber(k):
    d = torus2k(k)
    c = certify_positive(d)
    assert isinstance(c, PlumbNode)
    assert (c.left, c.center, c.right) == (DiskLeaf(), TorusFiberLeaf(k), DiskLeaf())
    rep = verify_cert(c, d)
    assert rep.ok and rep.chi == 2 - k


def test_three_chain_merges_then_plumbs():
    d = chain([1, 1])
    c = certify_positive(d)
    assert isinstance(c, EmbedNode)
    a, b = c.merge.circle_pair
    e = embed(d)
    assert {a, b} <= set(e.roots) and e.preserving[a] == e.preserving[b]
    inner = c.child
    assert isinstance(inner, PlumbNode)
    assert inner.center == TorusFiberLeaf(2)
    assert inner.left == inner.right == DiskLeaf()
    rep = verify_cert(c, d)
    assert rep.ok and rep.chi == 1 and rep.ambient_chi == 0


def test_negative_crossing_is_named():
    with pytest.raises(PreconditionError, match=r"negative crossing at id \d+"):
        certify_positive(parse_pd(FIG8_PD))


def test_split_diagrams():
    d = disjoint(torus2k(3), parse_pd("circle:"))
    c = certify_positive(d)
    assert isinstance(c, SplitNode) and len(c.children) == 2
    assert verify_cert(c, d).ok
    d = disjoint(torus2k(3), torus2k(2))
    c = certify_positive(d)
    centers = sorted(ch.center.k for ch in c.children)
    assert centers == [2, 3]
    assert verify_cert(c, d).ok


def test_connected_diagram_is_not_split():
    assert not isinstance(certify_positive(pretzel(1, 3, 3)), SplitNode)


# ---------------------------------------------------------------- moves

def test_merge_outermost_stats():
    d = chain([2, 3, 2])
    e = embed(d)
    assert len(e.roots) >= 3
    rec, d2 = merge_outermost(d, e)
    s, s2 = stats(d), stats(d2)
    assert s2.n_circles == s.n_circles - 1
    assert s2.n_crossings == s.n_crossings
    assert d2.signs == d.signs
    assert len(embed(d2, e.outer_side).roots) == len(e.roots) - 1


def test_merge_needs_three_roots():
    d = chain([3])
    with pytest.raises(PreconditionError):
        merge_outermost(d, embed(d))


def test_plumbing_split_conserves_chords():
    for d in positive_corpus():
        e = embed(d)
        if len(e.roots) != 2:
            continue
        g1, k, g2, ids = plumbing_split(d, e)
        assert k == len(ids) >= 1
        assert g1.n_crossings + k + g2.n_crossings == d.n_crossings


def test_plumbing_split_torus_after_reembed():
    d = torus2k(4)
    e = embed(d)
    e = embed(d, e.reembed_for_two_roots())
    g1, k, g2, _ = plumbing_split(d, e)
    assert (g1.n_crossings, k, g2.n_crossings) == (0, 4, 0)


def test_plumbing_split_needs_two_roots():
    d = torus2k(3)
    with pytest.raises(PreconditionError):
        plumbing_split(d, embed(d))


# ---------------------------------------------------------------- torus fiber expansion

def test_expand_small_fibers():
    assert expand_torus_fiber(1) == DiskLeaf()
    assert expand_torus_fiber(2) == HopfLeaf()
    three = expand_torus_fiber(3)
    assert isinstance(three, PlumbNode)
    assert embedded_chi(three) == -1


@pytest.mark.parametrize("k", range(1, 12))
def test_expanded_fiber_chi_and_bands(k):
    node = expand_torus_fiber(k)
    assert embedded_chi(node) == 2 - k
    assert hopf_count(node) == k - 1
    assert leaf_kinds(node) <= {"DiskLeaf", "HopfLeaf"}


def test_expand_fiber_rejects_zero():
    with pytest.raises(ValueError):
        expand_torus_fiber(0)


# ---------------------------------------------------------------- checker

def test_corpus_certificates_verify():
    for d in positive_corpus():
        c = certify_positive(d)
        rep = verify_cert(c, d)
        assert rep.ok, (d.name, rep.errors)
        assert rep.chi == stats(d).euler_s
        x = expand(c)
        assert leaf_kinds(x) <= {"DiskLeaf", "HopfLeaf"}
        xr = verify_cert(x, d)
        assert xr.ok, (d.name, xr.errors)
        assert hopf_count(x) == 1 - ambient_chi(x) == xr.hopf_bands


@settings(max_examples=40)
@given(positive_words())
def test_random_positive_braids_certify(nw):
    d = braid_closure(*nw)
    c = certify_positive(d, expanded=True)
    rep = verify_cert(c, d)
    assert rep.ok, rep.errors
    # ambient surface: one circle fewer per merge, same chords
    n_pieces = len(c.children) if isinstance(c, SplitNode) else 1
    assert rep.ambient_chi == stats(d).euler_s - n_embeds(c)
    assert hopf_count(c) == n_pieces - rep.ambient_chi


def test_tampered_torus_fiber_rejected():
    d = torus2k(3)
    c = certify_positive(d)
    bad = replace(c, center=TorusFiberLeaf(4))
    rep = verify_cert(bad, d)
    assert not rep.ok
    assert "chi" in rep.errors[0] or "fiber" in rep.errors[0]


def test_tampered_merge_pair_rejected():
    d = chain([1, 1])
    c = certify_positive(d)
    e = embed(d)
    a = c.merge.circle_pair[0]
    other = next(r for r in e.roots if e.preserving[r] != e.preserving[a])
    bad = replace(c, merge=replace(c.merge, circle_pair=(a, other)))
    assert not verify_cert(bad, d).ok


def test_tampered_merge_hash_rejected():
    d = chain([1, 1])
    c = certify_positive(d)
    bad = replace(c, merge=replace(c.merge, merged_hash="0" * 64))
    assert not verify_cert(bad, d).ok


def test_certificate_for_other_diagram_rejected():
    c = certify_positive(torus2k(3))
    assert not verify_cert(c, torus2k(5)).ok
    assert not verify_cert(c, parse_pd(FIG8_PD)).ok


def test_wrong_chord_partition_rejected():
    d = pretzel(1, 3, 3)
    c = certify_positive(d)
    node = c
    while isinstance(node, EmbedNode):
        node = node.child
    assert isinstance(node, PlumbNode)
    path = []
    x = c
    while isinstance(x, EmbedNode):
        path.append(x)
        x = x.child
    broken = replace(node, chords=node.chords[:-1])
    for parent in reversed(path):
        broken = replace(parent, child=broken)
    assert not verify_cert(broken, d).ok


# ---------------------------------------------------------------- serialization

def test_dict_round_trip_on_corpus():
    for d in positive_corpus()[:40]:
        c = certify_positive(d)
        assert cert_from_dict(json.loads(json.dumps(cert_to_dict(c)))) == c


def test_document_round_trip_and_header():
    d = chain([2, 3])
    c = certify_positive(d)
    text = dumps(c, d)
    assert text == dumps(c, d)
    back, header = loads(text)
    assert back == c
    assert header["diagramHash"]
    assert "orientationSeed" in header and "outerFacePolicy" in header


def test_loads_rejects_foreign_json():
    with pytest.raises(ValueError):
        loads(json.dumps({"root": {}}))
