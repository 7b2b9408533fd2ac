"""Motzkin words and their bijection with non-degenerate simplices.

A Motzkin word of length n is a string over {U, C, D} that becomes a
(possibly empty) Dyck word once every C is struck out.  Reading off, for
each i, whether consecutive U's or consecutive D's of a non-degenerate
Dyck word are adjacent gives a Motzkin word of length equal to the
dimension, and the correspondence is a bijection.

All arithmetic is exact; nothing here touches floating point.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .dyck import dimension, is_degenerate, _positions
from .errors import DegenerateWordError, InvalidWordError

MOTZKIN_ALPHABET = frozenset("UCD")


@lru_cache(maxsize=None)
def motzkin_number(n: int) -> int:
    """n-th Motzkin number, by the convolution recurrence (1, 1, 2, 4, 9, ...)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if n == 0:
        return 1
    return motzkin_number(n - 1) + sum(
        motzkin_number(k) * motzkin_number(n - 2 - k) for k in range(n - 1)
    )


def catalan_number(n: int) -> int:
    """n-th Catalan number, binomial(2n, n) / (n + 1) in exact integers."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return math.comb(2 * n, n) // (n + 1)


def is_motzkin(word: str) -> bool:
    """True iff striking out every C leaves a balanced, prefix-positive word."""
    bad = set(word) - MOTZKIN_ALPHABET
    if bad:
        raise InvalidWordError(f"letters outside {{U, C, D}}: {sorted(bad)!r}")
    height = 0
    for letter in word:
        if letter == "U":
            height += 1
        elif letter == "D":
            height -= 1
            if height < 0:
                return False
    return height == 0


def enumerate_motzkin(n: int) -> list[str]:
    """All Motzkin words of length n, sorted; there are motzkin_number(n)."""
    if n < 0:
        raise ValueError("length must be non-negative")
    out: list[str] = []
    prefix: list[str] = []

    def extend(remaining: int, height: int) -> None:
        if remaining == 0:
            if height == 0:
                out.append("".join(prefix))
            return
        for letter, delta in (("U", 1), ("C", 0), ("D", -1)):
            if height + delta < 0 or height + delta > remaining - 1:
                continue
            prefix.append(letter)
            extend(remaining - 1, height + delta)
            prefix.pop()

    extend(n, 0)
    return sorted(out)


def dyck_to_motzkin(word: str) -> str:
    """Motzkin word of a non-degenerate Dyck word.

    Letter i is U when the i-th and (i+1)-st U's are adjacent, D when the
    corresponding D's are, and C otherwise; on non-degenerate words the
    first two cases never overlap.
    """
    n = dimension(word)
    if is_degenerate(word):
        raise DegenerateWordError(f"degenerate word has no Motzkin form: {word!r}")
    ups = _positions(word, "U")
    downs = _positions(word, "D")
    letters = []
    for i in range(n):
        if ups[i + 1] == ups[i] + 1:
            letters.append("U")
        elif downs[i + 1] == downs[i] + 1:
            letters.append("D")
        else:
            letters.append("C")
    return "".join(letters)


def motzkin_to_dyck(word: str) -> str:
    """Non-degenerate Dyck word of dimension len(word) inverse to dyck_to_motzkin.

    With a_1 < ... < a_k the positions carrying D or C and b_1 < ... < b_k
    those carrying U or C (1-based), the result is the concatenation of U/D
    runs with successive differences of the a's and b's as run lengths.
    """
    if not is_motzkin(word):
        raise InvalidWordError(f"not a Motzkin word: {word!r}")
    n = len(word)
    a = [i for i in range(1, n + 1) if word[i - 1] in "DC"]
    b = [i for i in range(1, n + 1) if word[i - 1] in "UC"]
    runs = []
    prev_a = prev_b = 0
    for ai, bi in zip(a, b):
        runs.append("U" * (ai - prev_a) + "D" * (bi - prev_b))
        prev_a, prev_b = ai, bi
    runs.append("U" * (n + 1 - prev_a) + "D" * (n + 1 - prev_b))
    return "".join(runs)


def verify_binomial_identity(n: int) -> bool:
    """Check C_{n+1} == sum_k binomial(n, k) * M_k with exact arithmetic."""
    if n < 0:
        raise ValueError("index must be non-negative")
    total = sum(math.comb(n, k) * motzkin_number(k) for k in range(n + 1))
    return catalan_number(n + 1) == total
