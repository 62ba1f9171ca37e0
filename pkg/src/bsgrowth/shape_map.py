"""Flattening every geodesic onto a strict-shape-1 geodesic three letters longer.

``c_map`` rewrites the tail of a minimal vector so that no digit exceeds
``n // 2``, ``beta`` measures the norm it saved (plus 3), and ``phi`` picks the
new ``(u', w')`` so the image path has strict shape 1.  ``preimage_count``
bounds how many minimal vectors share one image.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geodesic import Shape, is_minimal, path_length, shape_of
from .lattice import BoxParams, DigitVector, basis_vector, in_box, l1_norm, sigma


@dataclass(frozen=True)
class PhiResult:
    u: int
    w: int
    x: DigitVector

    @property
    def strict1(self):
        k = self.x.k
        return (0 if k is None else k) < self.w


def _combination(terms, n):
    """Sum of ``coef * basis_vector(i)`` over ``(i, coef)`` pairs."""
    total = DigitVector()
    for i, coef in terms:
        total = total + coef * basis_vector(i, n)
    return total


def tail_start(x, n):
    """Least ``j`` with ``|x_i| >= n/2`` for every ``j <= i <= k``, or None."""
    k = x.k
    if k is None:
        return None
    j = None
    for i in range(k, -1, -1):
        # 2|x_i| >= n is |x_i| >= n/2 without rounding n/2 for odd n.
        if 2 * abs(x.digits[i]) >= n:
            j = i
        else:
            break
    return j


def condition_a(x, n):
    """The n = 2 case that needs two extra positions."""
    j = tail_start(x, n)
    if n != 2 or j is None:
        return False
    last = abs(x.digits[x.k])
    return last == 3 or (last == 2 and j < x.k)


def c_map(x, box):
    """Rewrite the maximal run of large tail digits using lattice vectors.

    Uses the lattice formulas only; ``sigma`` is preserved by construction.
    """
    n = box.n
    j = tail_start(x, n)
    if j is None:
        return x
    k = x.k
    last = x.digits[k]
    delta = 1 if last > 0 else -1
    if condition_a(x, n):
        terms = [(i, delta) for i in range(j, k)] + [(k, 2 * delta), (k + 1, delta)]
        return x + _combination(terms, n)
    if abs(last) == n // 2 + 1 or j < k:
        return x + _combination([(i, delta) for i in range(j, k + 1)], n)
    return x


def beta(x, box):
    return 3 + l1_norm(x) - l1_norm(c_map(x, box))


def phi(u, w, x, n):
    box = BoxParams(u, w, n)
    cx = c_map(x, box)
    b = 3 + l1_norm(x) - l1_norm(cx)
    k = x.k
    shape = shape_of(k, u, w)
    if shape is Shape.SHAPE1:
        return PhiResult(u, w + b, cx)
    if shape is Shape.SHAPE2:
        return PhiResult(w, u + b, cx)
    if shape is Shape.SHAPE3:
        return PhiResult(u, 2 * k - w + b, cx)
    return PhiResult(w, 2 * k - u + b, cx)


def candidate_preimages(y, n):
    """Vectors that ``c_map`` could have rewritten into ``y``.

    Inverts each tail rewrite: ``y - d * sum_{i=j}^{k_y-1} w(i)`` for every
    start ``j`` and sign ``d``, and for n = 2 also the two-extra-position form
    ``y - d * (sum_{i=j}^{k_y-3} w(i) + 2 w(k_y-2) + w(k_y-1))``.  The identity
    candidate ``y`` itself comes first.
    """
    out = [y]
    k = y.k
    if k is None:
        return out
    base = list(y.digits)
    for delta in (1, -1):
        # sum_{i=j}^{k-1} w(i) has -n at j, 1-n strictly between, 1 at k.
        for j in range(k - 1, -1, -1):
            cand = list(base)
            cand[j] += delta * n
            for i in range(j + 1, k):
                cand[i] += delta * (n - 1)
            cand[k] -= delta
            out.append(DigitVector(cand))
        if n == 2:
            for j in range(k - 2, -1, -1):
                terms = [(i, delta) for i in range(j, k - 2)] + [(k - 2, 2 * delta), (k - 1, delta)]
                out.append(y - _combination(terms, n))
    seen = set()
    unique = []
    for cand in out:
        if cand not in seen:
            seen.add(cand)
            unique.append(cand)
    return unique


def _loose_box(x, n):
    # Digit bounds shared by every box: all but the last digit within n // 2.
    return in_box(x, BoxParams(0, 0, n))


def minimal_somewhere(x, n, search_bound):
    """Is ``x`` minimal for some ``(u, w)``?

    Minimality depends on ``(u, w)`` only through ``max(u, w)``, so it is
    enough to try ``(0, m)`` for ``0 <= m <= k_x + search_bound``.
    """
    k = x.k if x.k is not None else 0
    # Large m first: the strict-shape-1 boxes are the common success.
    return any(is_minimal(x, 0, m, n) for m in range(k + search_bound, -1, -1))


def _viable_preimages(y, n):
    """The candidates of :func:`candidate_preimages` that lie in the loose box.

    A digit strictly between ``j`` and ``k`` is ``y_i + d(n-1)`` for every start
    ``j`` below it, so once one is out of range every smaller ``j`` is too.
    """
    k = y.k
    if k is None or n == 2:
        return [x for x in candidate_preimages(y, n) if _loose_box(x, n)]
    wide = n // 2 + 2
    base = y.digits
    out = [y] if _loose_box(y, n) else []
    for delta in (1, -1):
        for j in range(k - 1, -1, -1):
            if j < k - 1 and abs(base[j + 1] + delta * (n - 1)) > wide:
                break
            if abs(base[j] + delta * n) > wide:
                continue
            cand = list(base)
            cand[j] += delta * n
            for i in range(j + 1, k):
                cand[i] += delta * (n - 1)
            cand[k] -= delta
            x = DigitVector(cand)
            if _loose_box(x, n) and x not in out:
                out.append(x)
    return out


def preimage_count(y, box, search_bound=3):
    """Number of vectors minimal for some ``(u, w)`` that ``c_map`` sends to ``y``."""
    n = box.n
    count = 0
    for x in _viable_preimages(y, n):
        if c_map(x, BoxParams(0, 0, n)) != y:
            continue
        if minimal_somewhere(x, n, search_bound):
            count += 1
    return count


def preimages_exhaustive(y, n, search_bound=3):
    """Slow oracle: scan every vector with ``sigma(y)`` and at most ``k_y + 1`` digits.

    Digits are bounded by ``n // 2 + 2``, the widest final-digit bound of any box.
    """
    from itertools import product

    v = sigma(y, n)
    k = y.k if y.k is not None else 0
    wide = n // 2 + 2
    found = []
    for length in range(0, k + 2):
        for digits in product(range(-wide, wide + 1), repeat=length):
            if length and digits[-1] == 0:
                continue
            x = DigitVector(digits)
            if sigma(x, n) != v or not _loose_box(x, n):
                continue
            if c_map(x, BoxParams(0, 0, n)) == y and minimal_somewhere(x, n, search_bound):
                found.append(x)
    return found


CLAMP_DEGREE_BOUND = {"n=2": 5, "even": 3, "odd": 2}


def clamp_degree_bound(n):
    if n == 2:
        return CLAMP_DEGREE_BOUND["n=2"]
    return CLAMP_DEGREE_BOUND["even" if n % 2 == 0 else "odd"]


def path_length_after_phi(u, w, x, n):
    r = phi(u, w, x, n)
    return path_length(r.x, r.u, r.w, n)
