"""Edge-relation presentation of simplices and boundary filling.

An n-simplex can be recorded as the set of pairs i < j whose connecting
edge is the degenerate one.  Such pair sets are exactly the relations R
on {0..n} with (i) i R j implying i < j and (ii) i R k implying i R j
and j R k for every i < j < k.  Faces restrict the carrier, the
bijection with Dyck words commutes with all simplicial structure, and
compatible facet tuples above dimension 2 fill uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .dyck import _positions, dimension
from .errors import BoundaryError, RelationConditionError

Pair = tuple[int, int]


def is_k_relation(pairs: Iterable[Pair], n: int) -> bool:
    """True iff ``pairs`` satisfies the order and interval-closure conditions on {0..n}."""
    rel = set(tuple(p) for p in pairs)
    for i, j in rel:
        if not (0 <= i < j <= n):
            return False
    for i, k in rel:
        for j in range(i + 1, k):
            if (i, j) not in rel or (j, k) not in rel:
                return False
    return True


@dataclass(frozen=True)
class EdgeRelation:
    """A simplex of dimension ``n`` as a valid pair set on {0..n}."""

    n: int
    pairs: frozenset[Pair]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))
        if self.n < 0:
            raise RelationConditionError("dimension must be non-negative")
        if not is_k_relation(self.pairs, self.n):
            raise RelationConditionError(
                f"pair set violates the relation conditions on {{0..{self.n}}}: "
                f"{sorted(self.pairs)}"
            )

    def sorted_pairs(self) -> list[list[int]]:
        """Serialized form: sorted pair list."""
        return [list(p) for p in sorted(self.pairs)]


def to_relation(word: str) -> EdgeRelation:
    """Relation of a Dyck word: (i, j) is in when the (j+1)-st U precedes the (i+1)-st D."""
    n = dimension(word)
    ups = _positions(word, "U")
    downs = _positions(word, "D")
    pairs = frozenset(
        (i, j)
        for i in range(n + 1)
        for j in range(i + 1, n + 1)
        if ups[j] < downs[i]
    )
    return EdgeRelation(n, pairs)


def reach_vector(rel: EdgeRelation) -> list[int]:
    """reach[i] is the largest j related to i, or i itself when row i is empty."""
    reach = list(range(rel.n + 1))
    for i, j in rel.pairs:
        reach[i] = max(reach[i], j)
    return reach


def from_relation(rel: EdgeRelation) -> str:
    """The unique Dyck word whose relation is ``rel``.

    Block m (m = 0..n) emits one U followed by a D for every index i
    with reach(i) = m, in increasing i.
    """
    reach = reach_vector(rel)
    out = []
    for m in range(rel.n + 1):
        out.append("U")
        out.extend("D" for i in range(rel.n + 1) if reach[i] == m)
    return "".join(out)


def relation_face(rel: EdgeRelation, k: int) -> EdgeRelation:
    """Restrict to {0..n} minus k and renumber order-preservingly."""
    if not 0 <= k <= rel.n:
        raise IndexError(f"face index {k} out of range for dimension {rel.n}")
    if rel.n < 1:
        raise ValueError("the 0-simplex has no faces")
    renum = {v: v - (v > k) for v in range(rel.n + 1) if v != k}
    pairs = frozenset(
        (renum[i], renum[j]) for i, j in rel.pairs if i != k and j != k
    )
    return EdgeRelation(rel.n - 1, pairs)


def relation_degeneracy(rel: EdgeRelation, i: int) -> EdgeRelation:
    """Pull back along the collapse of i and i+1.

    The fresh edge (i, i+1) sits over a collapsed vertex, hence is the
    degenerate edge and belongs to the result.
    """
    if not 0 <= i <= rel.n:
        raise IndexError(f"degeneracy index {i} out of range for dimension {rel.n}")

    def sig(x: int) -> int:
        return x if x <= i else x - 1

    pairs = frozenset(
        (a, b)
        for a in range(rel.n + 2)
        for b in range(a + 1, rel.n + 2)
        if sig(a) == sig(b) or (sig(a), sig(b)) in rel.pairs
    )
    return EdgeRelation(rel.n + 1, pairs)


def enumerate_k_relations(n: int) -> list[EdgeRelation]:
    """All valid relations on {0..n}, via reach vectors.

    A valid relation is determined by its reach vector, and a vector
    arises exactly when reach(i) >= i and every j strictly inside
    (i, reach(i)) satisfies reach(j) >= reach(i).
    """
    if n < 0:
        raise ValueError("dimension must be non-negative")
    out: list[EdgeRelation] = []
    reach = [0] * (n + 1)

    def assign(i: int) -> None:
        if i > n:
            pairs = frozenset(
                (a, j) for a in range(n + 1) for j in range(a + 1, reach[a] + 1)
            )
            out.append(EdgeRelation(n, pairs))
            return
        lower = max([i] + [reach[a] for a in range(i) if reach[a] > i])
        for v in range(lower, n + 1):
            reach[i] = v
            assign(i + 1)

    assign(0)
    return out


def _as_relation(facet: "EdgeRelation | str") -> EdgeRelation:
    return facet if isinstance(facet, EdgeRelation) else to_relation(facet)


def filler(facets: Sequence["EdgeRelation | str"]) -> EdgeRelation:
    """The unique relation restricting to a compatible facet tuple.

    ``facets`` lists x_0 .. x_n of dimension n - 1 (as relations or Dyck
    words) with d_j(x_i) = d_i(x_{j+1}); above dimension 2 the filler
    always exists and is unique.
    """
    rels = [_as_relation(f) for f in facets]
    n = len(rels) - 1
    if n <= 2:
        raise ValueError("canonical fillers exist only above dimension 2")
    if any(r.n != n - 1 for r in rels):
        raise BoundaryError("every facet must have dimension n - 1")
    for i in range(n):
        for j in range(i, n):
            if relation_face(rels[i], j) != relation_face(rels[j + 1], i):
                raise BoundaryError(
                    f"facets {i} and {j + 1} disagree on their common face"
                )
    pairs = set()
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            k = next(v for v in range(n + 1) if v not in (a, b))
            if (a - (a > k), b - (b > k)) in rels[k].pairs:
                pairs.add((a, b))
    result = EdgeRelation(n, frozenset(pairs))
    for k in range(n + 1):
        if relation_face(result, k) != rels[k]:
            raise BoundaryError(f"no relation restricts to facet {k}")
    return result
