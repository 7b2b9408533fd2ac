"""Finite categories by tables, strict monoidal structure, and monoids.

Everything is label-driven: objects and morphisms are strings, and
composition/tensor are explicit dicts.  Structural problems (unknown
labels, ill-typed entries) raise; law violations are collected into
reports so faults can be listed rather than swallowed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import SchemaError, StructuralError

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class LawViolation:
    law: str
    subject: tuple[str, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.law} at {self.subject}: {self.detail}"


class FinCategory:
    """A finite category: objects, typed morphisms, identities, composition.

    ``compose[(g, f)]`` is g after f and should be defined exactly on the
    composable pairs; gaps and law failures are reported by
    :func:`validate_category`, not silently repaired.
    """

    def __init__(
        self,
        objects: Sequence[str],
        morphisms: Sequence[tuple[str, str, str]],
        identities: Mapping[str, str],
        compose: Mapping[tuple[str, str], str],
    ) -> None:
        self.objects = tuple(objects)
        self.morphisms = tuple((str(l), str(s), str(t)) for l, s, t in morphisms)
        self.identities = dict(identities)
        self.composition = dict(compose)
        self._src = {l: s for l, s, _ in self.morphisms}
        self._tgt = {l: t for l, _, t in self.morphisms}
        self._validate_structure()
        self._hom: dict[tuple[str, str], tuple[str, ...]] = {}

    def _validate_structure(self) -> None:
        if len(set(self.objects)) != len(self.objects):
            raise StructuralError("duplicate object labels")
        labels = [l for l, _, _ in self.morphisms]
        if len(set(labels)) != len(labels):
            raise StructuralError("duplicate morphism labels")
        objset = set(self.objects)
        for l, s, t in self.morphisms:
            if s not in objset or t not in objset:
                raise StructuralError(f"morphism {l!r} has dangling src/tgt")
        if set(self.identities) != objset:
            raise StructuralError("identities must be given for exactly the objects")
        for a, l in self.identities.items():
            if l not in self._src:
                raise StructuralError(f"identity of {a!r} is an unknown morphism")
            if self._src[l] != a or self._tgt[l] != a:
                raise StructuralError(f"identity of {a!r} is not an endomorphism of it")
        for (g, f), h in self.composition.items():
            for l in (g, f, h):
                if l not in self._src:
                    raise StructuralError(f"composition table mentions unknown morphism {l!r}")

    def src(self, f: str) -> str:
        return self._src[f]

    def tgt(self, f: str) -> str:
        return self._tgt[f]

    def id_of(self, a: str) -> str:
        return self.identities[a]

    def is_composable(self, g: str, f: str) -> bool:
        return self._tgt[f] == self._src[g]

    def compose(self, g: str, f: str) -> str:
        """g after f; raises when the pair is not in the table."""
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise StructuralError(f"no composite for ({g!r} after {f!r})") from None

    def hom(self, a: str, b: str) -> tuple[str, ...]:
        key = (a, b)
        if key not in self._hom:
            self._hom[key] = tuple(
                l for l, s, t in self.morphisms if s == a and t == b
            )
        return self._hom[key]

    def morphism_labels(self) -> tuple[str, ...]:
        return tuple(l for l, _, _ in self.morphisms)

    def to_json_dict(self) -> dict:
        return {
            "objects": list(self.objects),
            "morphisms": [
                {"label": l, "src": s, "tgt": t} for l, s, t in self.morphisms
            ],
            "identities": {a: self.identities[a] for a in self.objects},
            "compose": [
                [g, f, h] for (g, f), h in sorted(self.composition.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "FinCategory":
        for key in ("objects", "morphisms", "identities", "compose"):
            if key not in doc:
                raise SchemaError(f"category block missing key {key!r}")
        morphisms = []
        for k, entry in enumerate(doc["morphisms"]):
            for fld in ("label", "src", "tgt"):
                if fld not in entry:
                    raise SchemaError(f"morphisms[{k}] missing field {fld!r}")
            morphisms.append((entry["label"], entry["src"], entry["tgt"]))
        compose = {}
        for k, entry in enumerate(doc["compose"]):
            if len(entry) != 3:
                raise SchemaError(f"compose[{k}] must be a [g, f, gof] triple")
            compose[(entry[0], entry[1])] = entry[2]
        try:
            return cls(doc["objects"], morphisms, doc["identities"], compose)
        except StructuralError as exc:
            raise SchemaError(f"category block invalid: {exc}") from exc


def validate_category(c: FinCategory) -> list[LawViolation]:
    """Identity and associativity laws plus exactness of the composition table."""
    bad: list[LawViolation] = []
    mors = c.morphism_labels()
    for (g, f) in c.composition:
        if not c.is_composable(g, f):
            bad.append(
                LawViolation("composability", (g, f), "table entry for a non-composable pair")
            )
    for g in mors:
        for f in mors:
            if c.is_composable(g, f) and (g, f) not in c.composition:
                bad.append(
                    LawViolation("composability", (g, f), "composable pair missing from table")
                )
    for f in mors:
        left = c.composition.get((c.id_of(c.tgt(f)), f))
        right = c.composition.get((f, c.id_of(c.src(f))))
        if left != f:
            bad.append(LawViolation("left identity", (f,), f"id . {f} = {left}"))
        if right != f:
            bad.append(LawViolation("right identity", (f,), f"{f} . id = {right}"))
    for h in mors:
        for g in mors:
            if not c.is_composable(h, g):
                continue
            hg = c.composition.get((h, g))
            for f in mors:
                if not c.is_composable(g, f):
                    continue
                gf = c.composition.get((g, f))
                if hg is None or gf is None:
                    continue
                if c.composition.get((hg, f)) != c.composition.get((h, gf)):
                    bad.append(
                        LawViolation(
                            "associativity",
                            (h, g, f),
                            f"(h.g).f = {c.composition.get((hg, f))}, "
                            f"h.(g.f) = {c.composition.get((h, gf))}",
                        )
                    )
    return bad


class FinMonoidalStructure:
    """A finite category with a strict tensor and unit, all by tables."""

    def __init__(
        self,
        category: FinCategory,
        obj_tensor: Mapping[tuple[str, str], str],
        mor_tensor: Mapping[tuple[str, str], str],
        unit: str,
    ) -> None:
        self.category = category
        self.obj_tensor = dict(obj_tensor)
        self.mor_tensor = dict(mor_tensor)
        self.unit = unit
        objset = set(category.objects)
        morset = set(category.morphism_labels())
        if unit not in objset:
            raise StructuralError(f"unit {unit!r} is not an object")
        for (a, b), v in self.obj_tensor.items():
            if a not in objset or b not in objset or v not in objset:
                raise StructuralError(f"object tensor entry ({a!r}, {b!r}) -> {v!r} dangles")
        for (f, g), v in self.mor_tensor.items():
            if f not in morset or g not in morset or v not in morset:
                raise StructuralError(f"morphism tensor entry ({f!r}, {g!r}) -> {v!r} dangles")

    def tensor_obj(self, a: str, b: str) -> str:
        try:
            return self.obj_tensor[(a, b)]
        except KeyError:
            raise StructuralError(f"object tensor undefined on ({a!r}, {b!r})") from None

    def tensor_mor(self, f: str, g: str) -> str:
        try:
            return self.mor_tensor[(f, g)]
        except KeyError:
            raise StructuralError(f"morphism tensor undefined on ({f!r}, {g!r})") from None

    def to_json_dict(self) -> dict:
        doc = {"schema_version": SCHEMA_VERSION, "kind": "strict_monoidal"}
        doc.update(self.category.to_json_dict())
        doc["obj_tensor"] = [[a, b, v] for (a, b), v in sorted(self.obj_tensor.items())]
        doc["mor_tensor"] = [[f, g, v] for (f, g), v in sorted(self.mor_tensor.items())]
        doc["unit"] = self.unit
        return doc

    def to_json_text(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "FinMonoidalStructure":
        if doc.get("kind") != "strict_monoidal":
            raise SchemaError(f"expected kind 'strict_monoidal', got {doc.get('kind')!r}")
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise SchemaError(f"unsupported schema_version {doc.get('schema_version')!r}")
        category = FinCategory.from_json_dict(doc)
        for key in ("obj_tensor", "mor_tensor", "unit"):
            if key not in doc:
                raise SchemaError(f"missing key {key!r}")
        obj_tensor = {}
        for k, entry in enumerate(doc["obj_tensor"]):
            if len(entry) != 3:
                raise SchemaError(f"obj_tensor[{k}] must be an [a, b, ab] triple")
            obj_tensor[(entry[0], entry[1])] = entry[2]
        mor_tensor = {}
        for k, entry in enumerate(doc["mor_tensor"]):
            if len(entry) != 3:
                raise SchemaError(f"mor_tensor[{k}] must be an [f, g, fg] triple")
            mor_tensor[(entry[0], entry[1])] = entry[2]
        try:
            return cls(category, obj_tensor, mor_tensor, doc["unit"])
        except StructuralError as exc:
            raise SchemaError(str(exc)) from exc

    @classmethod
    def from_json_text(cls, text: str) -> "FinMonoidalStructure":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(doc)


def validate_strict_monoidal(m: FinMonoidalStructure) -> list[LawViolation]:
    """Strict associativity/unitality on objects and morphisms, plus bifunctoriality."""
    bad: list[LawViolation] = []
    c = m.category
    objs = c.objects
    mors = c.morphism_labels()
    for a in objs:
        for b in objs:
            if (a, b) not in m.obj_tensor:
                bad.append(LawViolation("tensor totality", (a, b), "object pair missing"))
    for f in mors:
        for g in mors:
            if (f, g) not in m.mor_tensor:
                bad.append(LawViolation("tensor totality", (f, g), "morphism pair missing"))
    if bad:
        return bad
    for a in objs:
        if m.tensor_obj(m.unit, a) != a or m.tensor_obj(a, m.unit) != a:
            bad.append(LawViolation("strict unit", (a,), "unit does not act trivially"))
        for b in objs:
            for cc in objs:
                if m.tensor_obj(m.tensor_obj(a, b), cc) != m.tensor_obj(a, m.tensor_obj(b, cc)):
                    bad.append(
                        LawViolation("strict associativity", (a, b, cc), "object tensor")
                    )
    for f in mors:
        fg_src = c.src(f)
        fg_tgt = c.tgt(f)
        for g in mors:
            v = m.tensor_mor(f, g)
            if c.src(v) != m.tensor_obj(fg_src, c.src(g)) or c.tgt(v) != m.tensor_obj(
                fg_tgt, c.tgt(g)
            ):
                bad.append(LawViolation("tensor typing", (f, g), f"{v!r} has wrong ends"))
    if bad:
        return bad
    unit_id = c.id_of(m.unit)
    for f in mors:
        if m.tensor_mor(unit_id, f) != f or m.tensor_mor(f, unit_id) != f:
            bad.append(LawViolation("strict unit", (f,), "unit identity does not act trivially"))
        for g in mors:
            fg = m.tensor_mor(f, g)
            for h in mors:
                if m.tensor_mor(fg, h) != m.tensor_mor(f, m.tensor_mor(g, h)):
                    bad.append(
                        LawViolation("strict associativity", (f, g, h), "morphism tensor")
                    )
    for a in objs:
        for b in objs:
            if m.tensor_mor(c.id_of(a), c.id_of(b)) != c.id_of(m.tensor_obj(a, b)):
                bad.append(LawViolation("identity tensor", (a, b), "id (x) id is not id"))
    composable = [(g, f) for g in mors for f in mors if c.is_composable(g, f)]
    for g, f in composable:
        gf = c.compose(g, f)
        for g2, f2 in composable:
            left = m.tensor_mor(gf, c.compose(g2, f2))
            right = c.compose(m.tensor_mor(g, g2), m.tensor_mor(f, f2))
            if left != right:
                bad.append(
                    LawViolation("interchange", (g, f, g2, f2), f"{left!r} != {right!r}")
                )
    return bad


@dataclass(frozen=True)
class Poset:
    """A finite partial order; ``leq`` holds all pairs (a, b) with a <= b."""

    elements: tuple[str, ...]
    leq: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "leq", frozenset(tuple(p) for p in self.leq))
        elems = set(self.elements)
        for a, b in self.leq:
            if a not in elems or b not in elems:
                raise StructuralError(f"order pair ({a!r}, {b!r}) dangles")
        for a in elems:
            if (a, a) not in self.leq:
                raise StructuralError(f"order is not reflexive at {a!r}")
        for a, b in self.leq:
            if a != b and (b, a) in self.leq:
                raise StructuralError(f"order is not antisymmetric on ({a!r}, {b!r})")
            for b2, c in self.leq:
                if b2 == b and (a, c) not in self.leq:
                    raise StructuralError(f"order is not transitive via {b!r}")

    def le(self, a: str, b: str) -> bool:
        return (a, b) in self.leq


def chain_poset(labels: Sequence[str]) -> Poset:
    """The total order on ``labels`` in the given sequence order."""
    n = len(labels)
    leq = frozenset(
        (labels[i], labels[j]) for i in range(n) for j in range(i, n)
    )
    return Poset(tuple(labels), leq)


def antichain_poset(labels: Sequence[str]) -> Poset:
    return Poset(tuple(labels), frozenset((a, a) for a in labels))


@dataclass(frozen=True)
class MonoidalPoset:
    """A poset with a monotone, associative, strictly unital tensor."""

    poset: Poset
    tensor: Mapping[tuple[str, str], str]
    unit: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "tensor", dict(self.tensor))
        elems = self.poset.elements
        if self.unit not in elems:
            raise StructuralError(f"unit {self.unit!r} is not an element")
        for a in elems:
            for b in elems:
                if (a, b) not in self.tensor:
                    raise StructuralError(f"tensor undefined on ({a!r}, {b!r})")
                if self.tensor[(a, b)] not in elems:
                    raise StructuralError(f"tensor hits unknown element on ({a!r}, {b!r})")
        t = self.tensor
        for a in elems:
            if t[(self.unit, a)] != a or t[(a, self.unit)] != a:
                raise StructuralError(f"tensor is not strictly unital at {a!r}")
            for b in elems:
                for c in elems:
                    if t[(t[(a, b)], c)] != t[(a, t[(b, c)])]:
                        raise StructuralError("tensor is not associative")
        for a, b in self.poset.leq:
            for c in elems:
                if not self.poset.le(t[(a, c)], t[(b, c)]):
                    raise StructuralError("tensor is not monotone in the first argument")
                if not self.poset.le(t[(c, a)], t[(c, b)]):
                    raise StructuralError("tensor is not monotone in the second argument")


def leq_label(a: str, b: str) -> str:
    return f"{a}<={b}"


def poset_category(p: Poset) -> FinCategory:
    """The category with one morphism a -> b for each a <= b."""
    morphisms = [(leq_label(a, b), a, b) for a, b in sorted(p.leq)]
    identities = {a: leq_label(a, a) for a in p.elements}
    compose = {}
    for b, c in sorted(p.leq):
        for a, b2 in sorted(p.leq):
            if b2 == b:
                compose[(leq_label(b, c), leq_label(a, b))] = leq_label(a, c)
    return FinCategory(sorted(p.elements), morphisms, identities, compose)


def poset_as_category(mp: MonoidalPoset) -> FinMonoidalStructure:
    """A monoidal poset as a strict monoidal category by tables."""
    cat = poset_category(mp.poset)
    obj_tensor = dict(mp.tensor)
    mor_tensor = {}
    for a, b in mp.poset.leq:
        for c, d in mp.poset.leq:
            mor_tensor[(leq_label(a, b), leq_label(c, d))] = leq_label(
                mp.tensor[(a, c)], mp.tensor[(b, d)]
            )
    return FinMonoidalStructure(cat, obj_tensor, mor_tensor, mp.unit)


@dataclass(frozen=True)
class MonoidObject:
    """A carrier with multiplication and unit morphisms satisfying the monoid laws."""

    carrier: str
    mu: str
    eta: str


def monoid_laws_hold(m: FinMonoidalStructure, a: str, mu: str, eta: str) -> bool:
    """Associativity and both unit laws, evaluated from the tables."""
    c = m.category
    ida = c.id_of(a)
    if c.compose(mu, m.tensor_mor(mu, ida)) != c.compose(mu, m.tensor_mor(ida, mu)):
        return False
    if c.compose(mu, m.tensor_mor(eta, ida)) != ida:
        return False
    if c.compose(mu, m.tensor_mor(ida, eta)) != ida:
        return False
    return True


def enumerate_monoids(m: FinMonoidalStructure) -> list[MonoidObject]:
    """All (carrier, mu, eta) triples passing the three monoid laws.

    Enumeration order is lexicographic in (carrier, mu, eta) labels, so
    output listings are reproducible.
    """
    out = []
    c = m.category
    for a in sorted(c.objects):
        for mu in sorted(c.hom(m.tensor_obj(a, a), a)):
            for eta in sorted(c.hom(m.unit, a)):
                if monoid_laws_hold(m, a, mu, eta):
                    out.append(MonoidObject(a, mu, eta))
    return out
