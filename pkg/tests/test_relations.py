from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from catsset.dyck import degeneracy, enumerate_dyck, face
from catsset.errors import BoundaryError, RelationConditionError
from catsset.relations import (
    EdgeRelation,
    enumerate_k_relations,
    filler,
    from_relation,
    is_k_relation,
    relation_degeneracy,
    relation_face,
    to_relation,
)


def test_is_k_relation_examples():
    assert is_k_relation(set(), 2)
    assert not is_k_relation({(0, 2)}, 2)
    assert is_k_relation({(0, 1), (1, 2), (0, 2)}, 2)
    assert not is_k_relation({(1, 0)}, 2)
    assert not is_k_relation({(0, 3)}, 2)


def _all_pair_subsets(n):
    pairs = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    for r in range(len(pairs) + 1):
        for subset in combinations(pairs, r):
            yield frozenset(subset)


@pytest.mark.parametrize("n", range(5))
def test_enumerate_matches_brute_force(n):
    brute = {s for s in _all_pair_subsets(n) if is_k_relation(s, n)}
    enumerated = {rel.pairs for rel in enumerate_k_relations(n)}
    assert enumerated == brute


@pytest.mark.parametrize("n", range(8))
def test_relation_count_equals_simplex_count(n):
    assert len(enumerate_k_relations(n)) == len(enumerate_dyck(n))


@given(
    st.integers(1, 4),
    st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=8),
)
def test_constructor_enforces_conditions(n, pairs):
    if is_k_relation(pairs, n):
        EdgeRelation(n, frozenset(pairs))
    else:
        with pytest.raises(RelationConditionError):
            EdgeRelation(n, frozenset(pairs))


def test_to_relation_examples():
    assert to_relation("UUDD").pairs == {(0, 1)}
    assert to_relation("UDUDUD").pairs == frozenset()
    assert to_relation("UDUUDD").pairs == {(1, 2)}


def test_from_relation_examples():
    assert from_relation(EdgeRelation(1, frozenset())) == "UDUD"
    assert from_relation(EdgeRelation(2, frozenset({(1, 2)}))) == "UDUUDD"
    full = frozenset({(0, 1), (0, 2), (1, 2)})
    assert from_relation(EdgeRelation(2, full)) == "UUUDDD"


@pytest.mark.parametrize("n", range(8))
def test_mutual_inverse(n):
    for w in enumerate_dyck(n):
        rel = to_relation(w)
        assert from_relation(rel) == w
    for rel in enumerate_k_relations(n):
        assert to_relation(from_relation(rel)) == rel


@pytest.mark.parametrize("n", range(7))
def test_relation_sets_agree(n):
    via_words = {to_relation(w) for w in enumerate_dyck(n)}
    assert via_words == set(enumerate_k_relations(n))


def test_relation_face_examples():
    rel = EdgeRelation(2, frozenset({(0, 1), (0, 2), (1, 2)}))
    assert relation_face(rel, 1).pairs == {(0, 1)}
    assert relation_face(EdgeRelation(2, frozenset()), 0).pairs == frozenset()
    assert relation_face(EdgeRelation(2, frozenset({(1, 2)})), 2).pairs == frozenset()
    with pytest.raises(IndexError):
        relation_face(rel, 3)


@pytest.mark.parametrize("n", range(1, 8))
def test_face_naturality(n):
    for w in enumerate_dyck(n):
        rel = to_relation(w)
        for i in range(n + 1):
            assert to_relation(face(w, i)) == relation_face(rel, i)


@pytest.mark.parametrize("n", range(7))
def test_degeneracy_naturality(n):
    for w in enumerate_dyck(n):
        rel = to_relation(w)
        for i in range(n + 1):
            assert to_relation(degeneracy(w, i)) == relation_degeneracy(rel, i)


def _word_facets(word):
    n = len(word) // 2 - 1
    return [to_relation(face(word, i)) for i in range(n + 1)]


def test_filler_examples():
    # the all-free-edge 3-simplex
    assert filler(_word_facets("UDUDUDUD")).pairs == frozenset()
    # the totally degenerate 3-simplex
    w = degeneracy(degeneracy(degeneracy("UD", 0), 0), 0)
    assert filler(_word_facets(w)).pairs == {
        (i, j) for i in range(4) for j in range(i + 1, 4)
    }
    # the 3-simplex whose faces are (i, s1 c, t, s1 c)
    target = next(
        w
        for w in enumerate_dyck(3)
        if tuple(face(w, q) for q in range(4))
        == ("UUDUDD", "UDUUDD", "UDUDUD", "UDUUDD")
    )
    expected = to_relation(target)
    assert expected.pairs == {(1, 2), (2, 3)}
    assert filler(_word_facets(target)) == expected


def test_filler_accepts_words():
    facets = ["UDUDUD"] * 4
    assert filler(facets).pairs == frozenset()


@pytest.mark.parametrize("n", (3, 4))
def test_filler_reproduces_every_simplex(n):
    for w in enumerate_dyck(n):
        assert filler(_word_facets(w)) == to_relation(w)


def test_filler_errors():
    with pytest.raises(ValueError):
        filler(["UDUD", "UUDD", "UDUD"])  # dimension 2 has no canonical filler
    good = _word_facets("UDUDUDUD")
    bad = good[:3] + [to_relation(degeneracy("UUDD", 0))]
    with pytest.raises(BoundaryError):
        filler(bad)
