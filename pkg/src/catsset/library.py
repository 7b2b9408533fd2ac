"""A small library of finite strict monoidal structures used throughout.

Five structures exercise the classification and checking machinery: the
two-element Boolean poset under disjunction, the 3-chain under max and
under addition truncated at the top, a 2-element antichain with an
idempotent unital tensor, and a one-object category over the idempotent
monoid {1, z}.
"""

from __future__ import annotations

from .finmon import (
    FinCategory,
    FinMonoidalStructure,
    MonoidalPoset,
    Poset,
    antichain_poset,
    chain_poset,
    poset_as_category,
)

BOT, TOP = "bot", "top"


def boolean_poset() -> Poset:
    return chain_poset([BOT, TOP])


def boolean_or() -> FinMonoidalStructure:
    """The poset bot <= top under disjunction, with unit bot."""
    join = {
        (BOT, BOT): BOT,
        (BOT, TOP): TOP,
        (TOP, BOT): TOP,
        (TOP, TOP): TOP,
    }
    return poset_as_category(MonoidalPoset(boolean_poset(), join, BOT))


def chain3_poset() -> Poset:
    return chain_poset(["0", "1", "2"])


def chain3_max() -> FinMonoidalStructure:
    """The chain 0 <= 1 <= 2 under max, with unit 0."""
    elems = ["0", "1", "2"]
    tensor = {(a, b): max(a, b) for a in elems for b in elems}
    return poset_as_category(MonoidalPoset(chain3_poset(), tensor, "0"))


def chain3_truncated_add() -> FinMonoidalStructure:
    """The chain 0 <= 1 <= 2 under addition capped at 2, with unit 0."""
    elems = ["0", "1", "2"]
    tensor = {(a, b): str(min(int(a) + int(b), 2)) for a in elems for b in elems}
    return poset_as_category(MonoidalPoset(chain3_poset(), tensor, "0"))


def antichain2() -> FinMonoidalStructure:
    """Two incomparable elements with unit a and idempotent b."""
    tensor = {
        ("a", "a"): "a",
        ("a", "b"): "b",
        ("b", "a"): "b",
        ("b", "b"): "b",
    }
    return poset_as_category(MonoidalPoset(antichain_poset(["a", "b"]), tensor, "a"))


def zmonoid_category() -> FinCategory:
    """One object whose endomorphisms form the idempotent monoid {1, z}."""
    compose = {
        ("1", "1"): "1",
        ("1", "z"): "z",
        ("z", "1"): "z",
        ("z", "z"): "z",
    }
    return FinCategory(
        ["*"], [("1", "*", "*"), ("z", "*", "*")], {"*": "1"}, compose
    )


def zmonoid() -> FinMonoidalStructure:
    """The {1, z} category with tensor given by multiplication.

    Commutativity of the monoid makes the multiplication tensor satisfy
    interchange.
    """
    cat = zmonoid_category()
    mor_tensor = dict(cat.composition)
    return FinMonoidalStructure(cat, {("*", "*"): "*"}, mor_tensor, "*")


def structure_library() -> dict[str, FinMonoidalStructure]:
    """The five named structures, in a fixed presentation order."""
    return {
        "two-or": boolean_or(),
        "chain3-max": chain3_max(),
        "chain3-truncated-add": chain3_truncated_add(),
        "antichain2": antichain2(),
        "zmonoid": zmonoid(),
    }
