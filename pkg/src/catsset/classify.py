"""Classification of simplicial maps into monoidal nerves by monoids.

A map out of the Dyck-word simplicial set is pinned down by the images
of the non-degenerate simplices in dimensions 1..3: an object A, a
multiplication candidate mu : A (x) A -> A, a unit candidate
eta' : I (x) I -> A, and four commuting-square conditions coming from
the non-degenerate 3-simplices.  In the strict setting eta' equals the
monoid unit eta, and the fourth condition holds for every candidate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyck import FREE_EDGE, POINT, UNIT_EDGE
from .errors import StructuralError
from .finmon import FinMonoidalStructure, MonoidObject, enumerate_monoids
from .nerve import monoidal_nerve, two_label, two_simplex_data
from .sset import (
    SimplicialMap,
    TruncatedSSet,
    _extend_by_fillers,
    catalan_sset,
    is_simplicial_map,
    make_map,
    simplicial_maps,
)

#: The non-degenerate 2-simplex with all edges free (multiplication shape).
MUL_TRIANGLE = "UDUDUD"
#: The non-degenerate 2-simplex with two degenerate edges (unit shape).
UNIT_TRIANGLE = "UUDUDD"


@dataclass(frozen=True)
class ClassificationRecord:
    """A classified map together with the monoid it corresponds to.

    ``eta_prime`` is the image of the unit-shaped 2-simplex; with the
    strict tensor it coincides with ``monoid.eta``, but both sides of the
    correspondence are kept.
    """

    map: SimplicialMap
    monoid: MonoidObject
    eta_prime: str

    def triple(self) -> tuple[str, str, str]:
        return (self.monoid.carrier, self.monoid.mu, self.eta_prime)


def _condition_associativity(m: FinMonoidalStructure, a: str, mu: str, etap: str) -> bool:
    c = m.category
    ida = c.id_of(a)
    return c.compose(mu, m.tensor_mor(mu, ida)) == c.compose(mu, m.tensor_mor(ida, mu))


def _condition_left_unit(m: FinMonoidalStructure, a: str, mu: str, etap: str) -> bool:
    c = m.category
    ida, idu = c.id_of(a), c.id_of(m.unit)
    return c.compose(mu, m.tensor_mor(etap, ida)) == c.compose(
        ida, m.tensor_mor(idu, ida)
    )


def _condition_right_unit(m: FinMonoidalStructure, a: str, mu: str, etap: str) -> bool:
    c = m.category
    ida, idu = c.id_of(a), c.id_of(m.unit)
    return c.compose(ida, m.tensor_mor(ida, idu)) == c.compose(
        mu, m.tensor_mor(ida, etap)
    )


def _condition_unit_square(m: FinMonoidalStructure, a: str, mu: str, etap: str) -> bool:
    c = m.category
    ida, idu = c.id_of(a), c.id_of(m.unit)
    return c.compose(ida, m.tensor_mor(etap, idu)) == c.compose(
        ida, m.tensor_mor(idu, etap)
    )


_CONDITIONS = (
    _condition_associativity,
    _condition_left_unit,
    _condition_right_unit,
    _condition_unit_square,
)


def _candidates(m: FinMonoidalStructure):
    c = m.category
    uu = m.tensor_obj(m.unit, m.unit)
    for a in sorted(c.objects):
        for mu in sorted(c.hom(m.tensor_obj(a, a), a)):
            for etap in sorted(c.hom(uu, a)):
                yield a, mu, etap


def _generator_components(
    S: TruncatedSSet, T: TruncatedSSet, m: FinMonoidalStructure, a: str, mu: str, etap: str
) -> list[dict[str, str]]:
    """Images on levels 0..2 induced by the generator assignment."""
    comps: list[dict[str, str]] = [{POINT: "*"}, {UNIT_EDGE: m.unit, FREE_EDGE: a}]
    level2: dict[str, str] = {
        MUL_TRIANGLE: two_label(a, a, a, mu),
        UNIT_TRIANGLE: two_label(m.unit, a, m.unit, etap),
    }
    for w in S.level(2):
        if w in level2:
            continue
        witness = S.degeneracy_witness(2, w)
        edge = comps[1][S.face(2, witness, w)]
        level2[w] = T.degeneracy(1, witness, edge)
    comps.append(level2)
    return comps


def classify_maps(m: FinMonoidalStructure) -> list[ClassificationRecord]:
    """All maps into the nerve of ``m``, built from candidate generator data.

    Candidates (A, mu, eta') are kept when the four 3-simplex conditions
    evaluate to commuting squares; each survivor extends uniquely to a
    full map and pairs with the monoid (A, mu, eta = eta').
    """
    S = catalan_sset(4)
    T = monoidal_nerve(m, 4)
    out = []
    for a, mu, etap in _candidates(m):
        if not all(cond(m, a, mu, etap) for cond in _CONDITIONS):
            continue
        comps = _generator_components(S, T, m, a, mu, etap)
        full = _extend_by_fillers(S, T, comps)
        if full is None or not is_simplicial_map(S, T, full):
            raise StructuralError(
                f"candidate ({a!r}, {mu!r}, {etap!r}) passed the square conditions "
                "but does not extend to a map"
            )
        # eta is eta' composed with the unit constraint, an identity here,
        # evaluated from the table rather than assumed
        eta = m.category.compose(etap, m.category.id_of(m.unit))
        out.append(
            ClassificationRecord(
                map=make_map(S, T, full),
                monoid=MonoidObject(a, mu, eta),
                eta_prime=etap,
            )
        )
    return out


def check_fk_automatic(m: FinMonoidalStructure) -> bool:
    """The fourth square condition holds for every candidate triple, not just monoids."""
    return all(
        _condition_unit_square(m, a, mu, etap) for a, mu, etap in _candidates(m)
    )


def map_triple(T: TruncatedSSet, f: SimplicialMap) -> tuple[str, str, str]:
    """Generator images (A, mu, eta') read off an engine-enumerated map."""
    a = f(1, FREE_EDGE)
    mu = two_simplex_data(f(2, MUL_TRIANGLE))[3]
    etap = two_simplex_data(f(2, UNIT_TRIANGLE))[3]
    return (a, mu, etap)


def verify_classification(m: FinMonoidalStructure) -> bool:
    """Three-way agreement: records, engine map enumeration, monoid enumeration.

    The strict tensor identifies eta with eta', so all three enumerations
    must produce exactly the same (A, mu, eta) triples.
    """
    records = classify_maps(m)
    monoids = enumerate_monoids(m)
    S = catalan_sset(4)
    T = monoidal_nerve(m, 4)
    maps = simplicial_maps(S, T, 3)
    record_triples = {r.triple() for r in records}
    monoid_triples = {(mo.carrier, mo.mu, mo.eta) for mo in monoids}
    engine_triples = {map_triple(T, f) for f in maps}
    return (
        len(records) == len(monoids) == len(maps)
        and record_triples == monoid_triples == engine_triples
    )
