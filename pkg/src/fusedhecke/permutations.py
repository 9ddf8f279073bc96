"""Permutations of {1, ..., m} in one-line notation.

A permutation is a plain tuple `w` with `w[i-1] = w(i)`; tuples are hashable
and index the standard basis of the Hecke algebra.  The composition
convention is (a o b)(i) = a(b(i)).

>>> compose((2, 1, 3), (1, 3, 2))
(2, 3, 1)
>>> length((3, 2, 1))
3
>>> reduced_word((3, 2, 1))
(1, 2, 1)
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

from .errors import DomainError, ResourceError

Perm = tuple[int, ...]

ENUMERATION_BOUND = 10


def max_strands() -> int:
    """Strand bound for algebra elements; FUSED_HECKE_MAX_STRANDS overrides."""
    return int(os.environ.get("FUSED_HECKE_MAX_STRANDS", "9"))


def is_permutation(w) -> bool:
    """True iff w is a bijection of {1, ..., len(w)} in one-line notation."""
    return sorted(w) == list(range(1, len(w) + 1))


def identity(m: int) -> Perm:
    """The identity of S_m.

    >>> identity(3)
    (1, 2, 3)
    """
    if m < 1:
        raise DomainError("m must be a positive integer")
    return tuple(range(1, m + 1))


def compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(i) = a(b(i)); both factors must have the same size."""
    if len(a) != len(b):
        raise DomainError(f"size mismatch: {len(a)} vs {len(b)}")
    return tuple(a[x - 1] for x in b)


def inverse(w: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return tuple(inv)


def length(w: Perm) -> int:
    """Number of inversions of w, i.e. its Coxeter length."""
    m = len(w)
    return sum(1 for i in range(m) for j in range(i + 1, m) if w[i] > w[j])


def simple_transposition(i: int, m: int) -> Perm:
    """The adjacent transposition s_i in S_m (1 <= i <= m-1)."""
    if not 1 <= i <= m - 1:
        raise DomainError(f"generator index {i} out of range for m={m}")
    w = list(range(1, m + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def swap_positions(w: Perm, i: int) -> Perm:
    """w * s_i: exchange the entries at positions i, i+1 (1-based)."""
    return w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]


def swap_values(w: Perm, i: int) -> Perm:
    """s_i * w: exchange the values i, i+1 wherever they occur."""
    j = i + 1
    return tuple(j if x == i else i if x == j else x for x in w)


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """A canonical reduced word (i_1, ..., i_l) with s_{i_1}...s_{i_l} = w.

    Canonical choice: the descending staircase -- repeatedly move the largest
    misplaced value into place with adjacent transpositions.  The output has
    length equal to length(w).

    >>> reduced_word((2, 3, 1))
    (1, 2)
    """
    cur = list(w)
    word = []
    for v in range(len(w), 1, -1):
        p = cur.index(v) + 1
        for a in range(p, v):
            cur[a - 1], cur[a] = cur[a], cur[a - 1]
            word.append(a)
    # cur is now the identity and w = s_{word[-1]} ... s_{word[0]}
    word.reverse()
    return tuple(word)


def all_permutations(m: int):
    """All of S_m, each exactly once, lexicographic in one-line notation."""
    if m < 1:
        raise DomainError("m must be a positive integer")
    if m > ENUMERATION_BOUND:
        raise ResourceError(
            f"refusing to enumerate S_{m} (bound {ENUMERATION_BOUND})"
        )
    return list(itertools.permutations(range(1, m + 1)))


def perm_to_str(w: Perm) -> str:
    """One-line notation serialization, e.g. "[2,1,3]"."""
    return "[" + ",".join(str(x) for x in w) + "]"


def perm_from_str(text: str) -> Perm:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise DomainError(f"not a one-line permutation: {text!r}")
    w = tuple(int(part) for part in body[1:-1].split(","))
    if not is_permutation(w):
        raise DomainError(f"not a bijection of 1..{len(w)}: {text!r}")
    return w
