import math

import pytest
from hypothesis import given, strategies as st

from catsset.dyck import (
    SurjectionPath,
    apply_surjection,
    degeneracy,
    degeneracy_witness,
    dimension,
    enumerate_dyck,
    enumerate_surjections,
    ez_decompose,
    face,
    is_degenerate,
    is_dyck,
    nondegenerate_dyck,
)
from catsset.errors import InvalidWordError
from catsset.motzkin import catalan_number


def test_is_dyck_basic():
    assert is_dyck("UUDD")
    assert not is_dyck("UDDU")
    assert is_dyck("UUDDUD")
    assert not is_dyck("")
    assert not is_dyck("UD" * 3 + "U")


def test_is_dyck_rejects_bad_alphabet():
    with pytest.raises(InvalidWordError):
        is_dyck("UXDD")


def _stack_oracle(word):
    # independent counter check: balanced and never below zero
    height = 0
    for c in word:
        height += 1 if c == "U" else -1
        if height < 0:
            return False
    return height == 0 and len(word) > 0


@given(st.text(alphabet="UD", max_size=24))
def test_is_dyck_matches_counter_oracle(word):
    assert is_dyck(word) == _stack_oracle(word)


def test_enumerate_low_dimensions():
    assert enumerate_dyck(0) == ["UD"]
    assert set(enumerate_dyck(1)) == {"UUDD", "UDUD"}
    assert set(enumerate_dyck(2)) == {"UUUDDD", "UUDDUD", "UDUUDD", "UUDUDD", "UDUDUD"}


@pytest.mark.parametrize("n", range(11))
def test_census_matches_closed_form(n):
    words = enumerate_dyck(n)
    assert len(words) == catalan_number(n + 1)
    assert all(is_dyck(w) and dimension(w) == n for w in words)


def test_face_examples():
    assert face("UDUDUD", 0) == "UDUD"
    assert face("UUDUDD", 1) == "UDUD"
    assert face("UUDDUD", 2) == "UUDD"


def test_face_errors():
    with pytest.raises(ValueError):
        face("UD", 0)
    with pytest.raises(IndexError):
        face("UUDD", 2)


def test_degeneracy_examples():
    assert degeneracy("UD", 0) == "UUDD"
    assert degeneracy("UDUD", 0) == "UUDDUD"
    assert degeneracy("UDUD", 1) == "UDUUDD"
    with pytest.raises(IndexError):
        degeneracy("UD", 1)


def test_degeneracy_witness_examples():
    assert degeneracy_witness("UUDDUD") == 0
    assert degeneracy_witness("UDUDUD") is None
    # both degeneracies of UUDD give UUUDDD; the smaller witness wins
    assert degeneracy_witness("UUUDDD") == 0
    assert not is_degenerate("UUDUDD")


@pytest.mark.parametrize("n", range(1, 7))
def test_witness_is_honest(n):
    for w in enumerate_dyck(n):
        i = degeneracy_witness(w)
        if i is not None:
            assert degeneracy(face(w, i), i) == w
        else:
            assert all(degeneracy(face(w, j), j) != w for j in range(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_simplicial_identities_on_words(n):
    for w in enumerate_dyck(n):
        for j in range(n + 1):
            for i in range(j):
                assert face(face(w, j), i) == face(face(w, i), j - 1)
        for j in range(n + 1):
            for i in range(j + 1):
                assert degeneracy(degeneracy(w, j), i) == degeneracy(
                    degeneracy(w, i), j + 1
                )
        for j in range(n + 1):
            sj = degeneracy(w, j)
            for i in range(n + 2):
                if i in (j, j + 1):
                    assert face(sj, i) == w
                elif i < j:
                    assert face(sj, i) == degeneracy(face(w, i), j - 1)
                else:
                    assert face(sj, i) == degeneracy(face(w, i - 1), j)


def test_the_four_nondegenerate_three_simplices():
    # these four words and their face tuples drive the classification
    expected = {
        "UDUDUDUD": ("UDUDUD", "UDUDUD", "UDUDUD", "UDUDUD"),
        "UDUUDUDD": ("UUDUDD", "UDUUDD", "UDUDUD", "UDUUDD"),
        "UUDUDDUD": ("UUDDUD", "UDUDUD", "UUDDUD", "UUDUDD"),
        "UUDUDUDD": ("UUDUDD", "UDUUDD", "UUDDUD", "UUDUDD"),
    }
    assert set(nondegenerate_dyck(3)) == set(expected)
    for w, faces in expected.items():
        assert tuple(face(w, i) for i in range(4)) == faces


def test_nine_nondegenerate_four_simplices():
    words = nondegenerate_dyck(4)
    assert len(words) == 9
    # identified by their face tuples over the four 3-simplex names
    names = {
        "UD": "*",
        "UDUD": "c",
        "UDUDUD": "t",
        "UUDUDD": "i",
        "UDUDUDUD": "a",
        "UDUUDUDD": "l",
        "UUDUDDUD": "r",
        "UUDUDUDD": "k",
    }

    def name_of(word):
        if word in names:
            return names[word]
        i = degeneracy_witness(word)
        return f"s{i}({name_of(face(word, i))})"

    tuples = {tuple(name_of(face(w, i)) for i in range(5)) for w in words}
    assert tuples == {
        ("a", "a", "a", "a", "a"),
        ("r", "s1(t)", "a", "s1(t)", "l"),
        ("l", "l", "s2(t)", "a", "s2(t)"),
        ("s0(t)", "a", "s0(t)", "r", "r"),
        ("s1(i)", "s2(i)", "k", "s0(i)", "s1(i)"),
        ("s0(i)", "l", "k", "r", "s2(i)"),
        ("k", "l", "s0(s1(c))", "r", "k"),
        ("r", "s1(t)", "s0(t)", "r", "k"),
        ("k", "l", "s2(t)", "s1(t)", "l"),
    }


def test_surjection_validation():
    with pytest.raises(ValueError):
        SurjectionPath(2, 1, (0, 1))
    with pytest.raises(ValueError):
        SurjectionPath(2, 1, (1, 0, 1))
    with pytest.raises(ValueError):
        SurjectionPath(2, 1, (0, 0, 0))
    assert SurjectionPath.identity(3).is_identity


@pytest.mark.parametrize("n", range(9))
def test_surjection_counts(n):
    for k in range(n + 1):
        assert len(enumerate_surjections(n, k)) == math.comb(n, k)


def test_apply_surjection_rejects_mismatched_word():
    phi = SurjectionPath(2, 1, (0, 0, 1))
    with pytest.raises(ValueError):
        apply_surjection(phi, "UD")


def test_ez_examples():
    phi, core = ez_decompose("UUDUDD")
    assert phi.is_identity and core == "UUDUDD"
    phi, core = ez_decompose("UUUDDD")
    assert (phi.source_dim, phi.target_dim, core) == (2, 0, "UD")
    phi, core = ez_decompose("UUDDUD")
    assert phi.image == (0, 0, 1) and core == "UDUD"


@pytest.mark.parametrize("n", range(7))
def test_ez_roundtrip_and_witness_consistency(n):
    for w in enumerate_dyck(n):
        phi, core = ez_decompose(w)
        assert not is_degenerate(core)
        assert apply_surjection(phi, w if phi.is_identity else core) == w
        assert is_degenerate(w) == (not phi.is_identity)


@pytest.mark.parametrize("n", range(5))
def test_ez_against_brute_force(n):
    # oracle: act on every lower non-degenerate word by every surjection
    produced = {}
    for k in range(n + 1):
        for phi in enumerate_surjections(n, k):
            for core in nondegenerate_dyck(k):
                word = apply_surjection(phi, core)
                produced.setdefault(word, []).append((phi, core))
    for w in enumerate_dyck(n):
        assert len(produced[w]) == 1
        assert produced[w][0] == ez_decompose(w)


@given(st.integers(0, 2), st.lists(st.integers(0, 6), max_size=4), st.integers(0, 30))
def test_random_degeneracy_chains_recompose(base_dim, indices, pick):
    words = enumerate_dyck(base_dim)
    w = words[pick % len(words)]
    for i in indices:
        w = degeneracy(w, i % (dimension(w) + 1))
    phi, core = ez_decompose(w)
    assert apply_surjection(phi, core) == w
