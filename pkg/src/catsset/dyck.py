"""Dyck-word presentation of the Catalan simplicial set.

An n-simplex is a Dyck word of length 2n + 2: a string over {U, D} with
as many U's as D's in which the i-th U occurs before the i-th D.  The
i-th face deletes the (i+1)-st U together with the (i+1)-st D, the i-th
degeneracy repeats them in place, and every word factors uniquely as a
non-degenerate word acted on by an order-preserving surjection.

Words are kept as plain strings; the dimensions in play are small
enough that clarity beats packing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidWordError

ALPHABET = frozenset("UD")

#: The unique 0-simplex.
POINT = "UD"
#: The degenerate edge (degeneracy of the point).
UNIT_EDGE = "UUDD"
#: The non-degenerate edge.
FREE_EDGE = "UDUD"


def _check_alphabet(word: str) -> None:
    bad = set(word) - ALPHABET
    if bad:
        raise InvalidWordError(f"letters outside {{U, D}}: {sorted(bad)!r}")


def is_dyck(word: str) -> bool:
    """True iff ``word`` is nonempty, balanced, and every prefix has #U >= #D."""
    _check_alphabet(word)
    if not word:
        return False
    height = 0
    for letter in word:
        height += 1 if letter == "U" else -1
        if height < 0:
            return False
    return height == 0


def require_dyck(word: str) -> None:
    if not is_dyck(word):
        raise InvalidWordError(f"not a Dyck word: {word!r}")


def dimension(word: str) -> int:
    """Simplex dimension: a word of length 2n + 2 has dimension n."""
    require_dyck(word)
    return len(word) // 2 - 1


def enumerate_dyck(n: int) -> list[str]:
    """All Dyck words of length 2n + 2, sorted lexicographically."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    half = n + 1
    out: list[str] = []
    prefix: list[str] = []

    def extend(ups: int, downs: int) -> None:
        if ups == half and downs == half:
            out.append("".join(prefix))
            return
        if ups < half:
            prefix.append("U")
            extend(ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append("D")
            extend(ups, downs + 1)
            prefix.pop()

    extend(0, 0)
    return sorted(out)


def _positions(word: str, letter: str) -> list[int]:
    return [p for p, c in enumerate(word) if c == letter]


def face(word: str, i: int) -> str:
    """Delete the (i+1)-st U and the (i+1)-st D (0-based face index)."""
    n = dimension(word)
    if n < 1:
        raise ValueError("the 0-simplex has no faces")
    if not 0 <= i <= n:
        raise IndexError(f"face index {i} out of range for dimension {n}")
    drop = {_positions(word, "U")[i], _positions(word, "D")[i]}
    return "".join(c for p, c in enumerate(word) if p not in drop)


def degeneracy(word: str, i: int) -> str:
    """Repeat the (i+1)-st U and the (i+1)-st D, raising dimension by one."""
    n = dimension(word)
    if not 0 <= i <= n:
        raise IndexError(f"degeneracy index {i} out of range for dimension {n}")
    double = {_positions(word, "U")[i], _positions(word, "D")[i]}
    return "".join(c + c if p in double else c for p, c in enumerate(word))


def degeneracy_witness(word: str) -> int | None:
    """Smallest i with ``word == degeneracy(face(word, i), i)``, else None.

    A word is degenerate at i exactly when its (i+1)-st and (i+2)-nd U's
    are adjacent and so are its (i+1)-st and (i+2)-nd D's.
    """
    n = dimension(word)
    ups = _positions(word, "U")
    downs = _positions(word, "D")
    for i in range(n):
        if ups[i + 1] == ups[i] + 1 and downs[i + 1] == downs[i] + 1:
            return i
    return None


def is_degenerate(word: str) -> bool:
    return degeneracy_witness(word) is not None


def nondegenerate_dyck(n: int) -> list[str]:
    """The non-degenerate Dyck words of dimension ``n``, sorted."""
    return [w for w in enumerate_dyck(n) if not is_degenerate(w)]


@dataclass(frozen=True)
class SurjectionPath:
    """An order-preserving surjection between ordinals, stored pointwise.

    ``image[x]`` is the value of the map at x; the map sends
    {0..source_dim} onto {0..target_dim}.
    """

    source_dim: int
    target_dim: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.image) != self.source_dim + 1:
            raise ValueError("image length must be source_dim + 1")
        if any(b < a for a, b in zip(self.image, self.image[1:])):
            raise ValueError("image must be monotone non-decreasing")
        if set(self.image) != set(range(self.target_dim + 1)):
            raise ValueError("image must cover the whole target ordinal")

    @property
    def is_identity(self) -> bool:
        return self.source_dim == self.target_dim

    @classmethod
    def identity(cls, n: int) -> "SurjectionPath":
        return cls(n, n, tuple(range(n + 1)))


def enumerate_surjections(n: int, k: int) -> list[SurjectionPath]:
    """All order-preserving surjections from {0..n} onto {0..k}.

    There are binomial(n, k) of them: one per choice of the k positions
    at which the value steps up.
    """
    if k < 0 or k > n:
        return []
    paths = []
    for steps in combinations(range(1, n + 1), k):
        image, value = [0], 0
        for x in range(1, n + 1):
            if x in steps:
                value += 1
            image.append(value)
        paths.append(SurjectionPath(n, k, tuple(image)))
    return paths


def ez_decompose(word: str) -> tuple[SurjectionPath, str]:
    """Factor ``word`` as a degenerated non-degenerate core.

    Returns the unique pair (phi, core) with core non-degenerate and
    ``apply_surjection(phi, core) == word``.  The map phi is the identity
    exactly when ``word`` itself is non-degenerate.  The factorization is
    computed by repeatedly stripping the smallest degeneracy witness.
    """
    n = dimension(word)
    image = list(range(n + 1))
    current = word
    while True:
        i = degeneracy_witness(current)
        if i is None:
            break
        current = face(current, i)
        # post-compose the running map with the collapse of i and i+1
        image = [v if v <= i else v - 1 for v in image]
    return SurjectionPath(n, dimension(current), tuple(image)), current


def apply_surjection(phi: SurjectionPath, word: str) -> str:
    """Act on ``word`` by the degeneracies encoded in ``phi``."""
    if dimension(word) != phi.target_dim:
        raise ValueError(
            f"word dimension {dimension(word)} does not match surjection target {phi.target_dim}"
        )
    image = list(phi.image)
    ops: list[int] = []
    while len(image) - 1 > phi.target_dim:
        j = next(x for x in range(len(image) - 1) if image[x] == image[x + 1])
        ops.append(j)
        del image[j]
    result = word
    for j in reversed(ops):
        result = degeneracy(result, j)
    return result
