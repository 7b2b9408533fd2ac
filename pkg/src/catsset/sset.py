"""Finite truncated simplicial sets over opaque string labels.

The engine is presentation-agnostic: levels are finite label sets and
face/degeneracy tables are explicit dicts.  On top of that it provides
identity checking, boundary and filler analysis, coskeletality tests,
coskeletal extension, and backtracking enumeration of simplicial maps
and isomorphisms.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import dyck
from .errors import BudgetExceededError, SchemaError, StructuralError

SCHEMA_VERSION = 1

BoundaryTuple = tuple[str, ...]


class TruncatedSSet:
    """Levelwise finite simplicial set truncated at dimension N.

    ``levels[n]`` lists the n-simplex labels, ``faces[n][i]`` maps level n
    to level n-1 and ``degens[n][i]`` maps level n to level n+1.  Labels
    are unique within a level but carry no meaning to the engine.
    Instances are never mutated after construction; query indexes are
    cached lazily.
    """

    def __init__(
        self,
        levels: Sequence[Sequence[str]],
        faces: Sequence[Sequence[Mapping[str, str]]],
        degens: Sequence[Sequence[Mapping[str, str]]],
    ) -> None:
        if not levels:
            raise StructuralError("at least dimension 0 is required")
        self.levels: tuple[tuple[str, ...], ...] = tuple(tuple(lv) for lv in levels)
        self.N: int = len(self.levels) - 1
        self.faces: tuple[tuple[dict[str, str], ...], ...] = tuple(
            tuple(dict(m) for m in maps) for maps in faces
        )
        self.degens: tuple[tuple[dict[str, str], ...], ...] = tuple(
            tuple(dict(m) for m in maps) for maps in degens
        )
        self._level_sets = tuple(frozenset(lv) for lv in self.levels)
        self._nondeg_cache: dict[int, tuple[str, ...]] = {}
        self._filler_cache: dict[int, dict[BoundaryTuple, tuple[str, ...]]] = {}
        self._validate()

    def _validate(self) -> None:
        for n, lv in enumerate(self.levels):
            if len(set(lv)) != len(lv):
                raise StructuralError(f"duplicate labels at level {n}")
        if len(self.faces) != self.N + 1 or len(self.degens) != self.N + 1:
            raise StructuralError("face/degeneracy tables must cover every level")
        for n in range(self.N + 1):
            want = n + 1 if n >= 1 else 0
            if len(self.faces[n]) != want:
                raise StructuralError(f"level {n} needs {want} face maps")
            want = n + 1 if n < self.N else 0
            if len(self.degens[n]) != want:
                raise StructuralError(f"level {n} needs {want} degeneracy maps")
        for n in range(1, self.N + 1):
            for i, table in enumerate(self.faces[n]):
                if set(table) != self._level_sets[n]:
                    raise StructuralError(f"face map d_{i} at level {n} is not total")
                for value in table.values():
                    if value not in self._level_sets[n - 1]:
                        raise StructuralError(
                            f"face map d_{i} at level {n} hits unknown label {value!r}"
                        )
        for n in range(self.N):
            for i, table in enumerate(self.degens[n]):
                if set(table) != self._level_sets[n]:
                    raise StructuralError(
                        f"degeneracy map s_{i} at level {n} is not total"
                    )
                for value in table.values():
                    if value not in self._level_sets[n + 1]:
                        raise StructuralError(
                            f"degeneracy map s_{i} at level {n} hits unknown label {value!r}"
                        )

    # -- basic queries -------------------------------------------------

    def level(self, n: int) -> tuple[str, ...]:
        if not 0 <= n <= self.N:
            raise IndexError(f"level {n} outside truncation 0..{self.N}")
        return self.levels[n]

    def face(self, n: int, i: int, label: str) -> str:
        return self.faces[n][i][label]

    def degeneracy(self, n: int, i: int, label: str) -> str:
        return self.degens[n][i][label]

    def face_vector(self, n: int, label: str) -> BoundaryTuple:
        return tuple(self.faces[n][i][label] for i in range(n + 1))

    def degeneracy_witness(self, n: int, label: str) -> int | None:
        for i in range(n):
            if self.degens[n - 1][i][self.faces[n][i][label]] == label:
                return i
        return None

    def is_degenerate(self, n: int, label: str) -> bool:
        return self.degeneracy_witness(n, label) is not None

    def nondegenerate(self, n: int) -> tuple[str, ...]:
        if n not in self._nondeg_cache:
            self._nondeg_cache[n] = tuple(
                x for x in self.level(n) if self.degeneracy_witness(n, x) is None
            )
        return self._nondeg_cache[n]

    def filler_index(self, n: int) -> dict[BoundaryTuple, tuple[str, ...]]:
        """Map from face vectors at level n to the labels carrying them."""
        if n not in self._filler_cache:
            index: dict[BoundaryTuple, list[str]] = defaultdict(list)
            for x in self.level(n):
                index[self.face_vector(n, x)].append(x)
            self._filler_cache[n] = {k: tuple(v) for k, v in index.items()}
        return self._filler_cache[n]

    def size(self) -> int:
        return sum(len(lv) for lv in self.levels)

    # -- serialization -------------------------------------------------

    def to_json_dict(self) -> dict:
        index = [{lab: k for k, lab in enumerate(lv)} for lv in self.levels]
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "truncated_sset",
            "levels": [list(lv) for lv in self.levels],
            "faces": [
                [[index[n - 1][table[x]] for x in self.levels[n]] for table in self.faces[n]]
                for n in range(1, self.N + 1)
            ],
            "degens": [
                [[index[n + 1][table[x]] for x in self.levels[n]] for table in self.degens[n]]
                for n in range(self.N)
            ],
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "TruncatedSSet":
        for key in ("schema_version", "kind", "levels", "faces", "degens"):
            if key not in doc:
                raise SchemaError(f"missing key {key!r}")
        if doc["kind"] != "truncated_sset":
            raise SchemaError(f"unexpected kind {doc['kind']!r}")
        levels = doc["levels"]
        if not isinstance(levels, list) or not all(isinstance(lv, list) for lv in levels):
            raise SchemaError("levels must be a list of label arrays")
        N = len(levels) - 1
        if len(doc["faces"]) != N or len(doc["degens"]) != N:
            raise SchemaError("faces/degens arrays must have one entry per positive level")
        faces: list[list[dict[str, str]]] = [[]]
        for n in range(1, N + 1):
            maps = []
            for idx_list in doc["faces"][n - 1]:
                if len(idx_list) != len(levels[n]):
                    raise SchemaError(f"face table length mismatch at level {n}")
                maps.append(
                    {levels[n][k]: levels[n - 1][v] for k, v in enumerate(idx_list)}
                )
            faces.append(maps)
        degens: list[list[dict[str, str]]] = []
        for n in range(N):
            maps = []
            for idx_list in doc["degens"][n]:
                if len(idx_list) != len(levels[n]):
                    raise SchemaError(f"degeneracy table length mismatch at level {n}")
                maps.append(
                    {levels[n][k]: levels[n + 1][v] for k, v in enumerate(idx_list)}
                )
            degens.append(maps)
        degens.append([])
        return cls(levels, faces, degens)

    @classmethod
    def from_json_text(cls, text: str) -> "TruncatedSSet":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(doc)


def catalan_sset(N: int) -> TruncatedSSet:
    """The Dyck-word simplicial set truncated at dimension N."""
    if N < 0:
        raise ValueError("truncation dimension must be non-negative")
    levels = [dyck.enumerate_dyck(n) for n in range(N + 1)]
    faces: list[list[dict[str, str]]] = [[]]
    for n in range(1, N + 1):
        faces.append([{w: dyck.face(w, i) for w in levels[n]} for i in range(n + 1)])
    degens: list[list[dict[str, str]]] = []
    for n in range(N):
        degens.append(
            [{w: dyck.degeneracy(w, i) for w in levels[n]} for i in range(n + 1)]
        )
    degens.append([])
    return TruncatedSSet(levels, faces, degens)


def point_sset(N: int) -> TruncatedSSet:
    """The one-point simplicial set, a single simplex in every dimension."""
    levels = [["pt"] for _ in range(N + 1)]
    faces: list[list[dict[str, str]]] = [[]]
    faces.extend([[{"pt": "pt"} for _ in range(n + 1)] for n in range(1, N + 1)])
    degens = [[{"pt": "pt"} for _ in range(n + 1)] for n in range(N)]
    degens.append([])
    return TruncatedSSet(levels, faces, degens)


# -- simplicial identities ----------------------------------------------


@dataclass(frozen=True)
class SimplicialViolation:
    identity: str
    dimension: int
    indices: tuple[int, ...]
    simplex: str

    def __str__(self) -> str:
        return (
            f"{self.identity} fails at dimension {self.dimension}, "
            f"indices {self.indices}, simplex {self.simplex!r}"
        )


def check_simplicial_identities(S: TruncatedSSet) -> list[SimplicialViolation]:
    """Every violated identity instance within the truncation; empty means pass."""
    bad: list[SimplicialViolation] = []
    for n in range(2, S.N + 1):
        for x in S.level(n):
            for j in range(n + 1):
                dj = S.face(n, j, x)
                for i in range(j):
                    if S.face(n - 1, i, dj) != S.face(n - 1, j - 1, S.face(n, i, x)):
                        bad.append(SimplicialViolation("d_i d_j = d_{j-1} d_i", n, (i, j), x))
    for n in range(S.N - 1):
        for x in S.level(n):
            for j in range(n + 1):
                sj = S.degeneracy(n, j, x)
                for i in range(j + 1):
                    left = S.degeneracy(n + 1, i, sj)
                    right = S.degeneracy(n + 1, j + 1, S.degeneracy(n, i, x))
                    if left != right:
                        bad.append(SimplicialViolation("s_i s_j = s_{j+1} s_i", n, (i, j), x))
    for n in range(S.N):
        for x in S.level(n):
            for j in range(n + 1):
                sj = S.degeneracy(n, j, x)
                for i in range(n + 2):
                    got = S.face(n + 1, i, sj)
                    if i in (j, j + 1):
                        want = x
                    elif i < j:
                        want = S.degeneracy(n - 1, j - 1, S.face(n, i, x))
                    else:
                        want = S.degeneracy(n - 1, j, S.face(n, i - 1, x))
                    if got != want:
                        bad.append(SimplicialViolation("d_i s_j", n, (i, j), x))
    return bad


# -- boundaries and fillers ----------------------------------------------


def _boundaries_naive(S: TruncatedSSet, n: int) -> list[BoundaryTuple]:
    """Compatible facet tuples by direct filtered search.

    Valid for any ``n`` with level n-1 inside the truncation, including
    ``n == S.N + 1``.
    """
    lower = S.level(n - 1)
    if n == 1:
        return [(a, b) for a in lower for b in lower]
    # facet x_m must satisfy d_i(x_m) = d_{m-1}(x_i) for all i < m, so its
    # first m faces are pinned once x_0 .. x_{m-1} are chosen
    prefix: list[dict[BoundaryTuple, list[str]]] = [dict() for _ in range(n + 1)]
    for m in range(1, n + 1):
        index: dict[BoundaryTuple, list[str]] = defaultdict(list)
        for x in lower:
            index[tuple(S.face(n - 1, i, x) for i in range(m))].append(x)
        prefix[m] = index
    out: list[BoundaryTuple] = []
    tup: list[str] = []

    def extend(m: int) -> None:
        if m > n:
            out.append(tuple(tup))
            return
        if m == 0:
            candidates: Iterable[str] = lower
        else:
            req = tuple(S.face(n - 1, m - 1, tup[i]) for i in range(m))
            candidates = prefix[m].get(req, ())
        for x in candidates:
            tup.append(x)
            extend(m + 1)
            tup.pop()

    extend(0)
    return out


def _boundaries_skeleton(S: TruncatedSSet, n: int, depth: int) -> list[BoundaryTuple]:
    """Boundaries reconstructed from labelings of the depth-skeleton.

    Exact whenever every compatible boundary in dimensions depth+1 .. n-1
    fills uniquely; the assembly raises if that assumption breaks.
    """
    if n < depth + 1:
        raise ValueError("target dimension below skeleton depth")
    verts = tuple(range(n + 1))
    # assign in stages by largest vertex so every simplex is placed as soon
    # as its faces exist; failures then prune whole subtrees early
    order = sorted(
        (subset for d in range(depth + 1) for subset in combinations(verts, d + 1)),
        key=lambda subset: (subset[-1], len(subset), subset),
    )
    label: dict[tuple[int, ...], str] = {}
    out: list[BoundaryTuple] = []

    def candidates(subset: tuple[int, ...]) -> Iterable[str]:
        d = len(subset) - 1
        if d == 0:
            return S.level(0)
        req = tuple(
            label[subset[:q] + subset[q + 1 :]] for q in range(d + 1)
        )
        return S.filler_index(d).get(req, ())

    def realize() -> BoundaryTuple:
        full = dict(label)
        for size in range(depth + 2, n + 1):
            for subset in combinations(verts, size):
                req = tuple(full[subset[:q] + subset[q + 1 :]] for q in range(size))
                hits = S.filler_index(size - 1).get(req, ())
                if len(hits) != 1:
                    raise StructuralError(
                        "skeleton encoding of boundaries needs unique fillers "
                        f"below the target dimension (dimension {size - 1} broke)"
                    )
                full[subset] = hits[0]
        return tuple(
            full[tuple(v for v in verts if v != m)] for m in range(n + 1)
        )

    def extend(k: int) -> None:
        if k == len(order):
            out.append(realize())
            return
        subset = order[k]
        for y in candidates(subset):
            label[subset] = y
            extend(k + 1)
            del label[subset]

    extend(0)
    return out


def boundaries(S: TruncatedSSet, n: int, method: str = "auto") -> list[BoundaryTuple]:
    """All compatible facet tuples (x_0 .. x_n) in dimension n.

    ``naive`` filters facet tuples directly; ``skeleton`` reconstructs
    boundaries from 2-skeleton labelings and is exact exactly when unique
    fillers exist in dimensions 3 .. n-1.  ``auto`` switches to the
    skeleton method above dimension 4.
    """
    if not 1 <= n <= S.N + 1:
        raise ValueError(f"boundary dimension {n} outside 1..{S.N + 1}")
    if method == "auto":
        method = "naive" if n <= 4 else "skeleton"
    if method == "naive":
        return _boundaries_naive(S, n)
    if method == "skeleton":
        return _boundaries_skeleton(S, n, depth=2)
    raise ValueError(f"unknown method {method!r}")


def fillers(S: TruncatedSSet, boundary: Sequence[str]) -> list[str]:
    """All n-simplices whose face vector equals the given facet tuple."""
    n = len(boundary) - 1
    if not 1 <= n <= S.N:
        raise ValueError(f"boundary length {n + 1} outside truncation")
    for x in boundary:
        if x not in S._level_sets[n - 1]:
            raise StructuralError(f"unknown facet label {x!r} at level {n - 1}")
    return list(S.filler_index(n).get(tuple(boundary), ()))


def is_r_coskeletal_up_to(S: TruncatedSSet, r: int, maxdim: int) -> bool:
    """True iff every boundary in dimensions r+1 .. maxdim has exactly one filler.

    Works upward, so the skeleton encoding used above dimension 4 is
    justified by the dimensions already verified.
    """
    if not 0 <= r < maxdim <= S.N:
        raise ValueError("need 0 <= r < maxdim <= truncation")
    for n in range(r + 1, maxdim + 1):
        if n <= 4 or n < r + 2:
            bts = _boundaries_naive(S, n)
        else:
            bts = _boundaries_skeleton(S, n, depth=r)
        index = S.filler_index(n)
        for b in bts:
            if len(index.get(b, ())) != 1:
                return False
    return True


# -- coskeletal extension -------------------------------------------------


def coskeletal_extension(
    S: TruncatedSSet, N: int, max_simplices: int = 1_000_000
) -> TruncatedSSet:
    """Extend a consistent truncation to dimension N by boundary tuples.

    Each new level consists of the compatible facet tuples over the level
    below; faces project to components and degeneracies are computed
    through the simplicial identities.
    """
    if N < S.N:
        raise ValueError("cannot extend below the current truncation")
    if check_simplicial_identities(S):
        raise StructuralError("input truncation violates the simplicial identities")
    levels = [list(lv) for lv in S.levels]
    faces = [[dict(m) for m in maps] for maps in S.faces]
    degens = [[dict(m) for m in maps] for maps in S.degens[:-1]]
    degens.append([])
    current = S
    total = current.size()
    for n in range(S.N + 1, N + 1):
        bts = sorted(_boundaries_naive(current, n))
        total += len(bts)
        if total > max_simplices:
            raise BudgetExceededError(
                f"extension to dimension {n} needs more than {max_simplices} simplices"
            )
        labels = [f"s{n}:{k}" for k in range(len(bts))]
        tup_to_label = dict(zip(bts, labels))
        levels.append(labels)
        faces.append(
            [
                {lab: bt[i] for lab, bt in zip(labels, bts)}
                for i in range(n + 1)
            ]
        )
        m = n - 1
        new_degens = []
        for i in range(m + 1):
            table = {}
            for x in levels[m]:
                parts = []
                for k in range(n + 1):
                    if k in (i, i + 1):
                        parts.append(x)
                    elif k < i:
                        parts.append(degens[m - 1][i - 1][faces[m][k][x]])
                    else:
                        parts.append(degens[m - 1][i][faces[m][k - 1][x]])
                key = tuple(parts)
                if key not in tup_to_label:
                    raise StructuralError(
                        f"degenerate boundary at level {m} is not compatible"
                    )
                table[x] = tup_to_label[key]
            new_degens.append(table)
        degens[m] = new_degens
        degens.append([])
        current = TruncatedSSet(levels, faces, degens)
    return current


# -- simplicial maps -------------------------------------------------------


@dataclass(frozen=True)
class SimplicialMap:
    """A levelwise map commuting with faces and degeneracies.

    Components are stored as sorted pair tuples so that maps compare and
    hash by their graph; source and target do not enter equality.
    """

    source: TruncatedSSet = field(compare=False, repr=False)
    target: TruncatedSSet = field(compare=False, repr=False)
    components: tuple[tuple[tuple[str, str], ...], ...] = ()

    @property
    def depth(self) -> int:
        return len(self.components) - 1

    def level_map(self, n: int) -> dict[str, str]:
        return dict(self.components[n])

    def __call__(self, n: int, label: str) -> str:
        return dict(self.components[n])[label]


def make_map(
    S: TruncatedSSet, T: TruncatedSSet, comps: Sequence[Mapping[str, str]]
) -> SimplicialMap:
    return SimplicialMap(
        S, T, tuple(tuple(sorted(dict(c).items())) for c in comps)
    )


def is_simplicial_map(
    S: TruncatedSSet, T: TruncatedSSet, comps: Sequence[Mapping[str, str]]
) -> bool:
    """Check totality and commutation with every face and degeneracy."""
    upto = len(comps) - 1
    if upto > min(S.N, T.N):
        return False
    for n in range(upto + 1):
        comp = comps[n]
        if set(comp) != set(S.level(n)):
            return False
        for x, y in comp.items():
            if y not in set(T.level(n)):
                return False
    for n in range(1, upto + 1):
        for x, y in comps[n].items():
            for i in range(n + 1):
                if comps[n - 1][S.face(n, i, x)] != T.face(n, i, y):
                    return False
    for n in range(upto):
        for x, y in comps[n].items():
            for i in range(n + 1):
                if comps[n + 1][S.degeneracy(n, i, x)] != T.degeneracy(n, i, y):
                    return False
    return True


def _enumerate_level_maps(
    S: TruncatedSSet, T: TruncatedSSet, k: int, bijective: bool
) -> list[list[dict[str, str]]]:
    """All ways to map levels 0..k, assigning non-degenerate simplices.

    Degenerate simplices take forced images through their smallest
    witness; face compatibility prunes candidates as images are chosen.
    """
    if k > min(S.N, T.N):
        raise ValueError("level bound exceeds a truncation")
    if bijective and any(len(S.level(n)) != len(T.level(n)) for n in range(k + 1)):
        return []
    results: list[list[dict[str, str]]] = []
    comps: list[dict[str, str]] = [dict() for _ in range(k + 1)]
    used: list[set[str]] = [set() for _ in range(k + 1)]

    def descend(n: int) -> None:
        if n > k:
            results.append([dict(c) for c in comps])
            return
        assign(n, S.nondegenerate(n), 0)

    def assign(n: int, nondeg: tuple[str, ...], idx: int) -> None:
        if idx == len(nondeg):
            place_degenerate(n)
            return
        x = nondeg[idx]
        if n == 0:
            candidates: Iterable[str] = T.level(0)
        else:
            req = tuple(comps[n - 1][S.face(n, i, x)] for i in range(n + 1))
            candidates = T.filler_index(n).get(req, ())
        for y in candidates:
            if bijective and y in used[n]:
                continue
            comps[n][x] = y
            if bijective:
                used[n].add(y)
            assign(n, nondeg, idx + 1)
            del comps[n][x]
            if bijective:
                used[n].discard(y)

    def place_degenerate(n: int) -> None:
        added: list[tuple[str, str]] = []
        ok = True
        for x in S.level(n):
            if x in comps[n]:
                continue
            w = S.degeneracy_witness(n, x)
            y = T.degeneracy(n - 1, w, comps[n - 1][S.face(n, w, x)])
            if bijective and y in used[n]:
                ok = False
                break
            comps[n][x] = y
            if bijective:
                used[n].add(y)
            added.append((x, y))
        if ok:
            descend(n + 1)
        for x, y in added:
            del comps[n][x]
            if bijective:
                used[n].discard(y)

    descend(0)
    return results


def _extend_by_fillers(
    S: TruncatedSSet, T: TruncatedSSet, comps: Sequence[Mapping[str, str]]
) -> list[dict[str, str]] | None:
    """Extend a partial map upward through unique fillers.

    Returns None when some image boundary has no filler; raises when a
    filler is ambiguous, since then the target is not coskeletal enough
    for the extension to be well-defined.
    """
    upto = min(S.N, T.N)
    full = [dict(c) for c in comps]
    for n in range(len(full), upto + 1):
        comp: dict[str, str] = {}
        index = T.filler_index(n)
        for x in S.level(n):
            req = tuple(full[n - 1][S.face(n, i, x)] for i in range(n + 1))
            hits = index.get(req, ())
            if not hits:
                return None
            if len(hits) > 1:
                raise StructuralError(
                    "ambiguous filler while extending a map; target is not coskeletal"
                )
            comp[x] = hits[0]
        full.append(comp)
    return full


def isomorphisms(S: TruncatedSSet, T: TruncatedSSet) -> list[SimplicialMap]:
    """All levelwise-bijective simplicial maps between equal truncations."""
    if S.N != T.N:
        raise ValueError("both objects must be truncated at the same dimension")
    out = []
    for comps in _enumerate_level_maps(S, T, S.N, bijective=True):
        if is_simplicial_map(S, T, comps):
            out.append(make_map(S, T, comps))
    return out


def simplicial_maps(S: TruncatedSSet, T: TruncatedSSet, k: int) -> list[SimplicialMap]:
    """All simplicial maps S -> T, for a target k-coskeletal within truncation.

    Images of non-degenerate simplices of dimension <= k determine the
    map; candidates above are produced by unique filling, and a candidate
    dies when some image boundary one dimension above k has no filler.
    """
    if S.N < k + 1:
        raise ValueError("source truncation must reach k + 1")
    if T.N < k + 1:
        raise ValueError("target truncation must reach k + 1 to check fillability")
    if not is_r_coskeletal_up_to(T, k, T.N):
        raise StructuralError(
            f"target is not {k}-coskeletal within its truncation"
        )
    out = []
    for comps in _enumerate_level_maps(S, T, k, bijective=False):
        full = _extend_by_fillers(S, T, comps)
        if full is not None and is_simplicial_map(S, T, full):
            out.append(make_map(S, T, full))
    return out
