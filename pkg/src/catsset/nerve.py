"""The monoidal nerve of a finite strict monoidal structure.

Dimension 0 is a point, 1-simplices are objects, a 2-simplex is a
morphism A12 (x) A01 -> A02, a 3-simplex is a facet quadruple whose
square of composites commutes, and everything above is determined by
3-coskeletality.  Strictness makes the degeneracies of a 1-simplex the
identity morphisms.
"""

from __future__ import annotations

import json

from .errors import BudgetExceededError, StructuralError
from .finmon import FinMonoidalStructure, validate_strict_monoidal
from .sset import TruncatedSSet, _boundaries_naive, coskeletal_extension


def two_label(a12: str, a02: str, a01: str, mor: str) -> str:
    """Canonical label of a 2-simplex; JSON keeps distinct data distinct."""
    return json.dumps([a12, a02, a01, mor], separators=(",", ":"))


def two_simplex_data(label: str) -> tuple[str, str, str, str]:
    """Inverse of :func:`two_label`: (A12, A02, A01, morphism)."""
    try:
        a12, a02, a01, mor = json.loads(label)
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        raise StructuralError(f"not a 2-simplex label: {label!r}") from exc
    return a12, a02, a01, mor


def monoidal_nerve(
    m: FinMonoidalStructure, N: int, max_simplices: int = 1_000_000
) -> TruncatedSSet:
    """The nerve of ``m`` truncated at dimension N.

    Levels above 3 are produced by coskeletal extension; a size guard
    aborts construction past ``max_simplices`` simplices in total.
    """
    if N < 0:
        raise ValueError("truncation dimension must be non-negative")
    problems = validate_strict_monoidal(m)
    if problems:
        raise StructuralError(
            f"structure is not strict monoidal: {problems[0]} "
            f"({len(problems)} violation(s))"
        )
    cat = m.category

    levels: list[list[str]] = [["*"]]
    faces: list[list[dict[str, str]]] = [[]]
    degens: list[list[dict[str, str]]] = []
    if N >= 1:
        objs = sorted(cat.objects)
        levels.append(objs)
        faces.append([{a: "*" for a in objs}, {a: "*" for a in objs}])
        degens.append([{"*": m.unit}])
    if N >= 2:
        data2: dict[str, tuple[str, str, str, str]] = {}
        for a12 in cat.objects:
            for a01 in cat.objects:
                src = m.tensor_obj(a12, a01)
                for a02 in cat.objects:
                    for f in cat.hom(src, a02):
                        lab = two_label(a12, a02, a01, f)
                        data2[lab] = (a12, a02, a01, f)
        if len(data2) > max_simplices:
            raise BudgetExceededError(
                f"nerve level 2 would have {len(data2)} simplices"
            )
        two = sorted(data2)
        levels.append(two)
        faces.append(
            [
                {lab: data2[lab][0] for lab in two},
                {lab: data2[lab][1] for lab in two},
                {lab: data2[lab][2] for lab in two},
            ]
        )
        degens.append(
            [
                {a: two_label(a, a, m.unit, cat.id_of(a)) for a in levels[1]},
                {a: two_label(m.unit, a, a, cat.id_of(a)) for a in levels[1]},
            ]
        )
    if N >= 3:
        stub = TruncatedSSet(levels, faces, degens + [[]])

        def commutes(bt: tuple[str, ...]) -> bool:
            x0, x1, x2, x3 = (data2[lab] for lab in bt)
            a23, a01 = x0[0], x3[2]
            left = cat.compose(x2[3], m.tensor_mor(x0[3], cat.id_of(a01)))
            right = cat.compose(x1[3], m.tensor_mor(cat.id_of(a23), x3[3]))
            return left == right

        bts = sorted(bt for bt in _boundaries_naive(stub, 3) if commutes(bt))
        if len(bts) > max_simplices:
            raise BudgetExceededError(f"nerve level 3 would have {len(bts)} simplices")
        labels3 = [f"s3:{k}" for k in range(len(bts))]
        tup_to_label = dict(zip(bts, labels3))
        levels.append(labels3)
        faces.append(
            [{lab: bt[i] for lab, bt in zip(labels3, bts)} for i in range(4)]
        )

        def degen3(i: int, y: str) -> str:
            d0, d1, d2 = (faces[2][q][y] for q in range(3))
            if i == 0:
                quad = (y, y, degens[1][0][d1], degens[1][0][d2])
            elif i == 1:
                quad = (degens[1][0][d0], y, y, degens[1][1][d2])
            else:
                quad = (degens[1][1][d0], degens[1][1][d1], y, y)
            try:
                return tup_to_label[quad]
            except KeyError:
                raise StructuralError(
                    f"degeneracy of 2-simplex {y!r} is not a commuting square"
                ) from None

        degens.append([{y: degen3(i, y) for y in levels[2]} for i in range(3)])

    degens.append([])
    top = min(N, 3)
    base = TruncatedSSet(levels[: top + 1], faces[: top + 1], degens[: top + 1])
    if N <= 3:
        return base
    return coskeletal_extension(base, N, max_simplices=max_simplices)
