"""Skew-monoidal data validation and the pentagon condition family.

A skew structure keeps a (not necessarily strict) tensor together with
explicit constraint components alpha : (A(x)B)(x)C -> A(x)(B(x)C),
lambda : I(x)A -> A and rho : A -> A(x)I, plus an endomorphism kappa of
the unit.  Five axioms characterize skew-monoidal structure; nine
pentagon conditions come from the non-degenerate 4-simplices of the
Dyck-word simplicial set, and the two families agree exactly when kappa
is the identity.

Every condition is evaluated pointwise as an equation between edge-path
composites read off the tables; nothing is normalized or rewritten.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Sequence

from .errors import BudgetExceededError, SchemaError, StructuralError
from .finmon import (
    SCHEMA_VERSION,
    FinCategory,
    FinMonoidalStructure,
    LawViolation,
    Poset,
    leq_label,
    poset_category,
)


class SkewData:
    """Tensor data with explicit, possibly non-invertible constraints.

    Construction validates the structural invariants: tables are total
    and well-typed, the tensor is a bifunctor (identities and
    interchange), and every constraint component has the stated
    endpoints.  Whether the axioms hold is a separate question answered
    by the checkers.
    """

    def __init__(
        self,
        category: FinCategory,
        obj_tensor: Mapping[tuple[str, str], str],
        mor_tensor: Mapping[tuple[str, str], str],
        unit: str,
        alpha: Mapping[tuple[str, str, str], str],
        lam: Mapping[str, str],
        rho: Mapping[str, str],
        kappa: str | None = None,
    ) -> None:
        self.category = category
        self.obj_tensor = dict(obj_tensor)
        self.mor_tensor = dict(mor_tensor)
        self.unit = unit
        self.alpha = dict(alpha)
        self.lam = dict(lam)
        self.rho = dict(rho)
        self.kappa = kappa if kappa is not None else category.id_of(unit)
        self._validate()

    # -- structure -----------------------------------------------------

    def obj(self, a: str, b: str) -> str:
        try:
            return self.obj_tensor[(a, b)]
        except KeyError:
            raise StructuralError(f"object tensor undefined on ({a!r}, {b!r})") from None

    def mor(self, f: str, g: str) -> str:
        try:
            return self.mor_tensor[(f, g)]
        except KeyError:
            raise StructuralError(f"morphism tensor undefined on ({f!r}, {g!r})") from None

    def _validate(self) -> None:
        c = self.category
        objs = c.objects
        mors = c.morphism_labels()
        morset = set(mors)
        if self.unit not in set(objs):
            raise StructuralError(f"unit {self.unit!r} is not an object")
        for a in objs:
            for b in objs:
                if (a, b) not in self.obj_tensor:
                    raise StructuralError(f"object tensor undefined on ({a!r}, {b!r})")
                if self.obj_tensor[(a, b)] not in set(objs):
                    raise StructuralError(f"object tensor dangles on ({a!r}, {b!r})")
        for f in mors:
            for g in mors:
                if (f, g) not in self.mor_tensor:
                    raise StructuralError(f"morphism tensor undefined on ({f!r}, {g!r})")
                v = self.mor_tensor[(f, g)]
                if v not in morset:
                    raise StructuralError(f"morphism tensor dangles on ({f!r}, {g!r})")
                if c.src(v) != self.obj(c.src(f), c.src(g)) or c.tgt(v) != self.obj(
                    c.tgt(f), c.tgt(g)
                ):
                    raise StructuralError(
                        f"morphism tensor ill-typed on ({f!r}, {g!r})"
                    )
        for a in objs:
            for b in objs:
                if self.mor(c.id_of(a), c.id_of(b)) != c.id_of(self.obj(a, b)):
                    raise StructuralError(
                        f"tensor of identities at ({a!r}, {b!r}) is not an identity"
                    )
        composable = [(g, f) for g in mors for f in mors if c.is_composable(g, f)]
        for g, f in composable:
            for g2, f2 in composable:
                left = self.mor(c.compose(g, f), c.compose(g2, f2))
                right = c.compose(self.mor(g, g2), self.mor(f, f2))
                if left != right:
                    raise StructuralError(
                        f"interchange fails on ({g!r}, {f!r}) x ({g2!r}, {f2!r})"
                    )
        for a in objs:
            for b in objs:
                for d in objs:
                    f = self.alpha.get((a, b, d))
                    if f is None:
                        raise StructuralError(f"alpha undefined at ({a!r}, {b!r}, {d!r})")
                    src = self.obj(self.obj(a, b), d)
                    tgt = self.obj(a, self.obj(b, d))
                    if f not in morset or c.src(f) != src or c.tgt(f) != tgt:
                        raise StructuralError(
                            f"alpha component at ({a!r}, {b!r}, {d!r}) is ill-typed"
                        )
        for a in objs:
            f = self.lam.get(a)
            if f is None or f not in morset or c.src(f) != self.obj(self.unit, a) or c.tgt(f) != a:
                raise StructuralError(f"lambda component at {a!r} is missing or ill-typed")
            f = self.rho.get(a)
            if f is None or f not in morset or c.src(f) != a or c.tgt(f) != self.obj(a, self.unit):
                raise StructuralError(f"rho component at {a!r} is missing or ill-typed")
        if (
            self.kappa not in morset
            or self.category.src(self.kappa) != self.unit
            or self.category.tgt(self.kappa) != self.unit
        ):
            raise StructuralError("kappa must be an endomorphism of the unit")

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        doc = {"schema_version": SCHEMA_VERSION, "kind": "skew_data"}
        doc.update(self.category.to_json_dict())
        doc["obj_tensor"] = [[a, b, v] for (a, b), v in sorted(self.obj_tensor.items())]
        doc["mor_tensor"] = [[f, g, v] for (f, g), v in sorted(self.mor_tensor.items())]
        doc["unit"] = self.unit
        doc["alpha"] = [[a, b, c, v] for (a, b, c), v in sorted(self.alpha.items())]
        doc["lambda"] = [[a, v] for a, v in sorted(self.lam.items())]
        doc["rho"] = [[a, v] for a, v in sorted(self.rho.items())]
        doc["kappa"] = self.kappa
        return doc

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "SkewData":
        if doc.get("kind") != "skew_data":
            raise SchemaError(f"expected kind 'skew_data', got {doc.get('kind')!r}")
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise SchemaError(f"unsupported schema_version {doc.get('schema_version')!r}")
        category = FinCategory.from_json_dict(doc)
        for key in ("obj_tensor", "mor_tensor", "unit", "alpha", "lambda", "rho"):
            if key not in doc:
                raise SchemaError(f"missing key {key!r}")
        obj_tensor = {(a, b): v for a, b, v in doc["obj_tensor"]}
        mor_tensor = {(f, g): v for f, g, v in doc["mor_tensor"]}
        alpha = {(a, b, c): v for a, b, c, v in doc["alpha"]}
        lam = {a: v for a, v in doc["lambda"]}
        rho = {a: v for a, v in doc["rho"]}
        try:
            return cls(
                category,
                obj_tensor,
                mor_tensor,
                doc["unit"],
                alpha,
                lam,
                rho,
                doc.get("kappa"),
            )
        except StructuralError as exc:
            raise SchemaError(str(exc)) from exc


def skew_from_strict(m: FinMonoidalStructure, kappa: str | None = None) -> SkewData:
    """A strict structure viewed as skew data with identity constraints."""
    c = m.category
    alpha = {}
    for a in c.objects:
        for b in c.objects:
            for d in c.objects:
                alpha[(a, b, d)] = c.id_of(m.tensor_obj(m.tensor_obj(a, b), d))
    lam = {a: c.id_of(a) for a in c.objects}
    rho = {a: c.id_of(a) for a in c.objects}
    return SkewData(c, m.obj_tensor, m.mor_tensor, m.unit, alpha, lam, rho, kappa)


# -- reports -----------------------------------------------------------


@dataclass(frozen=True)
class ConditionResult:
    name: str
    holds: bool
    witness: tuple[str, ...] | None

    def __str__(self) -> str:
        if self.holds:
            return f"{self.name}: pass"
        return f"{self.name}: FAIL at {self.witness}"


@dataclass(frozen=True)
class ConditionReport:
    results: tuple[ConditionResult, ...]

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.results)

    def result(self, name: str) -> ConditionResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> tuple[ConditionResult, ...]:
        return tuple(r for r in self.results if not r.holds)


def check_naturality(d: SkewData) -> list[LawViolation]:
    """Naturality of alpha in three arguments and of lambda/rho in one."""
    bad: list[LawViolation] = []
    c = d.category
    mors = c.morphism_labels()
    for f in mors:
        for g in mors:
            for h in mors:
                left = c.compose(
                    d.alpha[(c.tgt(f), c.tgt(g), c.tgt(h))],
                    d.mor(d.mor(f, g), h),
                )
                right = c.compose(
                    d.mor(f, d.mor(g, h)),
                    d.alpha[(c.src(f), c.src(g), c.src(h))],
                )
                if left != right:
                    bad.append(LawViolation("alpha naturality", (f, g, h), f"{left} != {right}"))
    idu = c.id_of(d.unit)
    for f in mors:
        left = c.compose(d.lam[c.tgt(f)], d.mor(idu, f))
        right = c.compose(f, d.lam[c.src(f)])
        if left != right:
            bad.append(LawViolation("lambda naturality", (f,), f"{left} != {right}"))
        left = c.compose(d.mor(f, idu), d.rho[c.src(f)])
        right = c.compose(d.rho[c.tgt(f)], f)
        if left != right:
            bad.append(LawViolation("rho naturality", (f,), f"{left} != {right}"))
    return bad


def _chain(cat: FinCategory, path: Sequence[str]) -> str:
    """Composite of a path, first morphism applied first."""
    out = path[0]
    for f in path[1:]:
        out = cat.compose(f, out)
    return out


# Each condition maps an object tuple to a (left path, right path) pair of
# edge lists; the condition holds when the two composites agree.


def _pentagon_alpha(d: SkewData, A: str, B: str, C: str, D: str):
    c = d.category
    top = [d.alpha[(d.obj(A, B), C, D)], d.alpha[(A, B, d.obj(C, D))]]
    bottom = [
        d.mor(d.alpha[(A, B, C)], c.id_of(D)),
        d.alpha[(A, d.obj(B, C), D)],
        d.mor(c.id_of(A), d.alpha[(B, C, D)]),
    ]
    return top, bottom


def _triangle_middle(d: SkewData, A: str, B: str):
    c = d.category
    ab = d.obj(A, B)
    top = [c.id_of(ab)]
    bottom = [
        d.mor(d.rho[A], c.id_of(B)),
        d.alpha[(A, d.unit, B)],
        d.mor(c.id_of(A), d.lam[B]),
    ]
    return top, bottom


def _triangle_left(d: SkewData, A: str, B: str):
    c = d.category
    top = [d.alpha[(d.unit, A, B)], d.lam[d.obj(A, B)]]
    bottom = [d.mor(d.lam[A], c.id_of(B))]
    return top, bottom


def _triangle_right(d: SkewData, A: str, B: str):
    c = d.category
    top = [d.rho[d.obj(A, B)], d.alpha[(A, B, d.unit)]]
    bottom = [d.mor(c.id_of(A), d.rho[B])]
    return top, bottom


def _unit_loop(d: SkewData):
    top = [d.rho[d.unit], d.lam[d.unit]]
    bottom = [d.category.id_of(d.unit)]
    return top, bottom


def _pent_a2(d: SkewData, A: str, B: str):
    c = d.category
    ab = d.obj(A, B)
    top = [c.id_of(ab), c.id_of(ab)]
    bottom = [
        d.mor(d.rho[A], c.id_of(B)),
        d.alpha[(A, d.unit, B)],
        d.mor(c.id_of(A), d.lam[B]),
    ]
    return top, bottom


def _pent_a3(d: SkewData, A: str, B: str):
    c = d.category
    ab = d.obj(A, B)
    top = [d.alpha[(d.unit, A, B)], d.lam[ab]]
    bottom = [d.mor(d.lam[A], c.id_of(B)), c.id_of(ab), c.id_of(ab)]
    return top, bottom


def _pent_a4(d: SkewData, A: str, B: str):
    c = d.category
    ab = d.obj(A, B)
    top = [d.rho[ab], d.alpha[(A, B, d.unit)]]
    bottom = [c.id_of(ab), c.id_of(ab), d.mor(c.id_of(A), d.rho[B])]
    return top, bottom


def _pent_a5(d: SkewData):
    idu = d.category.id_of(d.unit)
    return [idu, idu], [idu, d.kappa, idu]


def _pent_a6(d: SkewData):
    idu = d.category.id_of(d.unit)
    return [d.rho[d.unit], d.lam[d.unit]], [idu, d.kappa, idu]


def _pent_a7(d: SkewData):
    idu = d.category.id_of(d.unit)
    return [d.rho[d.unit], d.lam[d.unit]], [d.kappa, idu, d.kappa]


def _pent_a8(d: SkewData, A: str):
    c = d.category
    ai = d.obj(A, d.unit)
    top = [d.rho[A], c.id_of(ai)]
    bottom = [d.rho[A], c.id_of(ai), d.mor(c.id_of(A), d.kappa)]
    return top, bottom


def _pent_a9(d: SkewData, A: str):
    c = d.category
    ia = d.obj(d.unit, A)
    top = [c.id_of(ia), d.lam[A]]
    bottom = [d.mor(d.kappa, c.id_of(A)), c.id_of(ia), d.lam[A]]
    return top, bottom


AXIOMS: tuple[tuple[str, int, object], ...] = (
    ("5.1", 4, _pentagon_alpha),
    ("5.2", 2, _triangle_middle),
    ("5.3", 2, _triangle_left),
    ("5.4", 2, _triangle_right),
    ("5.5", 0, _unit_loop),
)

PENTAGONS: tuple[tuple[str, int, object], ...] = (
    ("A1", 4, _pentagon_alpha),
    ("A2", 2, _pent_a2),
    ("A3", 2, _pent_a3),
    ("A4", 2, _pent_a4),
    ("A5", 0, _pent_a5),
    ("A6", 0, _pent_a6),
    ("A7", 0, _pent_a7),
    ("A8", 1, _pent_a8),
    ("A9", 1, _pent_a9),
)


def _evaluate(d: SkewData, table) -> ConditionReport:
    results = []
    objs = sorted(d.category.objects)
    for name, arity, fn in table:
        witness = None
        for tup in product(objs, repeat=arity):
            left, right = fn(d, *tup)
            if _chain(d.category, left) != _chain(d.category, right):
                witness = tup
                break
        results.append(ConditionResult(name, witness is None, witness))
    return ConditionReport(tuple(results))


def check_axioms(d: SkewData) -> ConditionReport:
    """The five skew-monoidal axioms, evaluated pointwise over object tuples."""
    return _evaluate(d, AXIOMS)


def check_pentagons(d: SkewData) -> ConditionReport:
    """The nine pentagon conditions, kappa included, evaluated pointwise."""
    return _evaluate(d, PENTAGONS)


def verify_equivalence(d: SkewData) -> bool:
    """Pentagons all hold iff the axioms hold and kappa is the identity."""
    pentagons = check_pentagons(d).all_hold
    axioms = check_axioms(d).all_hold and d.kappa == d.category.id_of(d.unit)
    return pentagons == axioms


def is_monoidal(d: SkewData) -> bool:
    """True iff every alpha, lambda, rho component is invertible."""
    c = d.category
    invertible = set()
    for f in c.morphism_labels():
        a, b = c.src(f), c.tgt(f)
        for g in c.hom(b, a):
            if c.compose(g, f) == c.id_of(a) and c.compose(f, g) == c.id_of(b):
                invertible.add(f)
                break
    components = list(d.alpha.values()) + list(d.lam.values()) + list(d.rho.values())
    return all(f in invertible for f in components)


# -- candidate sweeps --------------------------------------------------


def _monotone_tensors(p: Poset) -> Iterator[dict[tuple[str, str], str]]:
    elems = sorted(p.elements)
    pairs = [(a, b) for a in elems for b in elems]
    for values in product(elems, repeat=len(pairs)):
        table = dict(zip(pairs, values))
        if all(
            p.le(table[(a, c)], table[(b, c)]) and p.le(table[(c, a)], table[(c, b)])
            for a, b in p.leq
            for c in elems
        ):
            yield table


def _poset_candidates(p: Poset) -> Iterator[SkewData]:
    """All skew data over a poset: monotone tensor, unit, forced components.

    Components are the unique order witnesses; a candidate is skipped
    when some required relation fails, because no component exists then.
    Every endomorphism in a poset is an identity, so kappa is forced.
    """
    cat = poset_category(p)
    elems = sorted(p.elements)
    for table in _monotone_tensors(p):
        mor_tensor = {}
        for a, b in p.leq:
            for c, e in p.leq:
                mor_tensor[(leq_label(a, b), leq_label(c, e))] = leq_label(
                    table[(a, c)], table[(b, e)]
                )
        for unit in elems:
            if not all(p.le(table[(unit, a)], a) and p.le(a, table[(a, unit)]) for a in elems):
                continue
            if not all(
                p.le(table[(table[(a, b)], c)], table[(a, table[(b, c)])])
                for a in elems
                for b in elems
                for c in elems
            ):
                continue
            alpha = {
                (a, b, c): leq_label(table[(table[(a, b)], c)], table[(a, table[(b, c)])])
                for a in elems
                for b in elems
                for c in elems
            }
            lam = {a: leq_label(table[(unit, a)], a) for a in elems}
            rho = {a: leq_label(a, table[(a, unit)]) for a in elems}
            yield SkewData(cat, dict(table), mor_tensor, unit, alpha, lam, rho)


def _is_bifunctor(
    cat: FinCategory,
    obj_tensor: Mapping[tuple[str, str], str],
    mor_tensor: Mapping[tuple[str, str], str],
) -> bool:
    mors = cat.morphism_labels()
    for f in mors:
        for g in mors:
            v = mor_tensor[(f, g)]
            if cat.src(v) != obj_tensor[(cat.src(f), cat.src(g))]:
                return False
            if cat.tgt(v) != obj_tensor[(cat.tgt(f), cat.tgt(g))]:
                return False
    for a in cat.objects:
        for b in cat.objects:
            if mor_tensor[(cat.id_of(a), cat.id_of(b))] != cat.id_of(obj_tensor[(a, b)]):
                return False
    composable = [(g, f) for g in mors for f in mors if cat.is_composable(g, f)]
    for g, f in composable:
        for g2, f2 in composable:
            left = mor_tensor[(cat.compose(g, f), cat.compose(g2, f2))]
            right = cat.compose(mor_tensor[(g, g2)], mor_tensor[(f, f2)])
            if left != right:
                return False
    return True


def _category_candidates(cat: FinCategory, budget: int) -> Iterator[SkewData]:
    """All skew data over a small category by brute-force table search.

    Object tensors, bifunctorial morphism tensors, units, components and
    every kappa choice are enumerated; the raw table count is capped.
    """
    objs = sorted(cat.objects)
    mors = sorted(cat.morphism_labels())
    obj_pairs = [(a, b) for a in objs for b in objs]
    mor_pairs = [(f, g) for f in mors for g in mors]
    raw = len(objs) ** len(obj_pairs) * len(mors) ** len(mor_pairs)
    if raw > budget:
        raise BudgetExceededError(
            f"{raw} raw tensor tables exceed the sweep budget {budget}"
        )
    for obj_values in product(objs, repeat=len(obj_pairs)):
        obj_tensor = dict(zip(obj_pairs, obj_values))
        for mor_values in product(mors, repeat=len(mor_pairs)):
            mor_tensor = dict(zip(mor_pairs, mor_values))
            if not _is_bifunctor(cat, obj_tensor, mor_tensor):
                continue
            for unit in objs:
                alpha_slots = [
                    (a, b, c,
                     obj_tensor[(obj_tensor[(a, b)], c)],
                     obj_tensor[(a, obj_tensor[(b, c)])])
                    for a in objs for b in objs for c in objs
                ]
                alpha_choices = [cat.hom(s, t) for (_, _, _, s, t) in alpha_slots]
                lam_choices = [cat.hom(obj_tensor[(unit, a)], a) for a in objs]
                rho_choices = [cat.hom(a, obj_tensor[(a, unit)]) for a in objs]
                kappa_choices = cat.hom(unit, unit)
                if not all(alpha_choices) or not all(lam_choices) or not all(rho_choices):
                    continue
                for alpha_pick in product(*alpha_choices):
                    alpha = {
                        (a, b, c): f
                        for (a, b, c, _, _), f in zip(alpha_slots, alpha_pick)
                    }
                    for lam_pick in product(*lam_choices):
                        lam = dict(zip(objs, lam_pick))
                        for rho_pick in product(*rho_choices):
                            rho = dict(zip(objs, rho_pick))
                            for kappa in kappa_choices:
                                yield SkewData(
                                    cat, obj_tensor, mor_tensor, unit,
                                    alpha, lam, rho, kappa,
                                )


def skew_candidates(
    carrier: "Poset | FinCategory", budget: int = 1_000_000
) -> Iterator[SkewData]:
    """Structurally valid skew data over a small carrier, every kappa included."""
    if isinstance(carrier, Poset):
        if len(carrier.elements) > 3:
            raise BudgetExceededError("poset sweeps are capped at 3 elements")
        yield from _poset_candidates(carrier)
        return
    if isinstance(carrier, FinCategory):
        if len(carrier.objects) > 2 or len(carrier.morphisms) > 6:
            raise BudgetExceededError(
                "category sweeps are capped at 2 objects and 6 morphisms"
            )
        yield from _category_candidates(carrier, budget)
        return
    raise TypeError(f"unsupported carrier type {type(carrier).__name__}")


def enumerate_skew_structures(
    carrier: "Poset | FinCategory", budget: int = 1_000_000
) -> list[SkewData]:
    """All candidates with identity kappa passing naturality and the axioms."""
    out = []
    for d in skew_candidates(carrier, budget):
        if d.kappa != d.category.id_of(d.unit):
            continue
        if check_naturality(d):
            continue
        if check_axioms(d).all_hold:
            out.append(d)
    return out


@dataclass(frozen=True)
class SweepSummary:
    candidates: int
    natural_candidates: int
    equivalence_holds: bool
    a5_forces_identity_kappa: bool
    a8_a9_pass_with_identity_kappa: bool
    skew_structure_count: int


def sweep_equivalence(
    carrier: "Poset | FinCategory", budget: int = 1_000_000
) -> SweepSummary:
    """Exhaustively verify the pentagon/axiom equivalence over a carrier."""
    candidates = 0
    natural = 0
    equivalence = True
    a5_forces = True
    a8_a9 = True
    structures = 0
    for d in skew_candidates(carrier, budget):
        candidates += 1
        if check_naturality(d):
            continue
        natural += 1
        identity_kappa = d.kappa == d.category.id_of(d.unit)
        pentagons = check_pentagons(d)
        axioms_ok = check_axioms(d).all_hold
        if pentagons.all_hold != (axioms_ok and identity_kappa):
            equivalence = False
        if pentagons.result("A5").holds and not identity_kappa:
            a5_forces = False
        if identity_kappa and not (
            pentagons.result("A8").holds and pentagons.result("A9").holds
        ):
            a8_a9 = False
        if identity_kappa and axioms_ok:
            structures += 1
    return SweepSummary(
        candidates=candidates,
        natural_candidates=natural,
        equivalence_holds=equivalence,
        a5_forces_identity_kappa=a5_forces,
        a8_a9_pass_with_identity_kappa=a8_a9,
        skew_structure_count=structures,
    )
