"""Geodesic words from minimal digit vectors.

A digit vector ``x`` with ``sigma(x) = v`` is turned into a word for
``t^-u a^v t^w`` in one of four shapes.  The word length depends on ``x`` only
through ``||x||_1`` and ``k``, so a geodesic is found by minimising that length
over the box, which is what :func:`minimal_vector` does exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache

from .group import GroupElement
from .lattice import (
    BoxParams,
    DigitVector,
    final_digit_bound,
    in_box,
    l1_norm,
    reduce_to_box,
    sigma,
)


class Shape(IntEnum):
    SHAPE1 = 1
    SHAPE2 = 2
    SHAPE3 = 3
    SHAPE4 = 4


@dataclass(frozen=True)
class PathWord:
    word: str
    shape: Shape
    strict1: bool

    def __len__(self):
        return len(self.word)


def shape_of(k, u, w):
    """Shape selected for a vector whose final nonzero index is ``k``."""
    if k is None or k <= w:
        return Shape.SHAPE1
    if k <= u:
        return Shape.SHAPE2
    if u <= w:
        return Shape.SHAPE3
    return Shape.SHAPE4


def is_strict_shape1(k, w):
    # The zero vector renders as the single digit (0,).
    return (0 if k is None else k) < w


def _power(letter, inverse_letter, e):
    return letter * e if e >= 0 else inverse_letter * (-e)


def eta(x, u, w, n=None):
    """Render ``x`` as a word for ``t^-u a^sigma(x) t^w``.

    Shapes 1 and 3 read the digits upward (``t^-u a^x0 t a^x1 ... t^(w-k)``),
    shapes 2 and 4 read them downward (``t^(k-u) a^xk T ... T a^x0 t^w``).
    """
    k = x.k
    shape = shape_of(k, u, w)
    digits = x.digits or (0,)
    kk = len(digits) - 1
    if shape in (Shape.SHAPE1, Shape.SHAPE3):
        body = "t".join(_power("a", "A", d) for d in digits)
        word = "T" * u + body + _power("t", "T", w - kk)
    else:
        body = "T".join(_power("a", "A", d) for d in reversed(digits))
        word = _power("t", "T", kk - u) + body + "t" * w
    return PathWord(word, shape, shape is Shape.SHAPE1 and is_strict_shape1(k, w))


def path_length(x, u, w, n=None):
    """Length of ``eta(x, u, w)`` without building the word."""
    k = x.k
    if k is None or k <= max(u, w):
        return l1_norm(x) + u + w
    return l1_norm(x) + 2 * k - abs(u - w)


def _length_cap(v, u, w, n):
    """Number of digit positions that can matter for a minimiser.

    A vector with ``k > max(u, w)`` costs at least ``u + w + 2(k - max(u, w)) + 1``,
    so beating the carried standard expansion bounds ``k``.
    """
    reach = max(u, w)
    upper = path_length(reduce_to_box(DigitVector((v,)), BoxParams(u, w, n)), u, w, n)
    return max(reach, reach + (upper - u - w) // 2) + 1


@lru_cache(maxsize=65536)
def _minimal_digits(u, v, w, n):
    reach = max(u, w)
    alpha = n // 2
    cap = _length_cap(v, u, w, n)
    memo = {}

    def best(i, carry):
        # Returns (cost, |digits|, digits) for positions i.. or None.
        if carry == 0:
            return (0, (), ())
        if i >= cap:
            return None
        key = (i, carry)
        if key in memo:
            return memo[key]
        drift = carry - v // n**i
        if abs(drift) > 3:
            raise AssertionError(f"carry drifted by {drift} at index {i}")
        options = []
        if abs(carry) <= final_digit_bound(i, reach, n):
            cost = abs(carry) + 2 * max(0, i - reach)
            options.append((cost, (abs(carry),), (carry,)))
        r = carry % n
        for d in (r - n, r):
            if d != carry and abs(d) <= alpha:
                sub = best(i + 1, (carry - d) // n)
                if sub is not None:
                    options.append((abs(d) + sub[0], (abs(d),) + sub[1], (d,) + sub[2]))
        result = min(options) if options else None
        memo[key] = result
        return result

    found = best(0, v)
    if found is None:
        raise AssertionError(f"no box vector found for {(u, v, w)} n={n}")
    return found[2]


def minimal_vector_for(u, v, w, n):
    """Minimal box vector for the triple ``(u, v, w)`` (need not be a normal form).

    Among vectors of least path length the one whose absolute digits are
    lexicographically smallest (index 0 most significant) is returned; this is
    the canonical choice for even n and a deterministic tie-break for odd n.
    """
    return DigitVector(_minimal_digits(u, v, w, n))


def minimal_vector(g, n):
    return minimal_vector_for(g.u, g.v, g.w, n)


def minimal_length(g, n):
    return path_length(minimal_vector(g, n), g.u, g.w, n)


def is_minimal(x, u, w, n):
    """Exact minimality of ``x`` for ``(u, w)`` by comparison with the search.

    Odd n: least path length over the box.  Even n: additionally the
    lexicographically smallest absolute digits.
    """
    if not in_box(x, BoxParams(u, w, n)):
        return False
    best = minimal_vector_for(u, sigma(x, n), w, n)
    if n % 2:
        return path_length(x, u, w, n) == path_length(best, u, w, n)
    return x == best


def geodesic(g, n):
    return eta(minimal_vector(g, n), g.u, g.w, n)


def pretty_word(word):
    """Group a letter string into powers: ``"AtaaT"`` -> ``"a^-1 t a^2 t^-1"``."""
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        base = word[i].lower()
        e = (j - i) * (1 if word[i].islower() else -1)
        parts.append(base if e == 1 else f"{base}^{e}")
        i = j
    return " ".join(parts)
