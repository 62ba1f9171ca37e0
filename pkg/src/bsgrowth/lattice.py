"""Digit vectors over base n.

A digit vector ``x = (x_0, ..., x_k)`` evaluates to ``sigma(x) = sum x_i n^i``.
The vectors with ``sigma == 0`` form a lattice spanned by the
``basis_vector(i, n)`` (``-n`` at ``i``, ``1`` at ``i + 1``).  For a normal form
``t^-u a^v t^w`` the *box* restricts digits to ``|x_i| <= n // 2`` with a
relaxed bound on the final digit when ``k >= max(u, w)``.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple


class DigitVector:
    """Finite integer vector with trailing zeros trimmed.

    Indexing past the end returns 0.  ``k`` is the index of the final nonzero
    digit, or ``None`` for the zero vector.
    """

    __slots__ = ("digits",)

    def __init__(self, digits=()):
        ds = [int(d) for d in digits]
        while ds and ds[-1] == 0:
            ds.pop()
        object.__setattr__(self, "digits", tuple(ds))

    def __setattr__(self, name, value):
        raise AttributeError("DigitVector is immutable")

    @property
    def k(self):
        return len(self.digits) - 1 if self.digits else None

    def __len__(self):
        return len(self.digits)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return self.digits[i]
        if i < 0:
            raise IndexError("negative digit index")
        return self.digits[i] if i < len(self.digits) else 0

    def __iter__(self):
        return iter(self.digits)

    def __eq__(self, other):
        if isinstance(other, DigitVector):
            return self.digits == other.digits
        if isinstance(other, tuple):
            return self.digits == DigitVector(other).digits
        return NotImplemented

    def __hash__(self):
        return hash(self.digits)

    def __add__(self, other):
        size = max(len(self), len(other))
        return DigitVector(self[i] + other[i] for i in range(size))

    def __sub__(self, other):
        size = max(len(self), len(other))
        return DigitVector(self[i] - other[i] for i in range(size))

    def __neg__(self):
        return DigitVector(-d for d in self.digits)

    def __rmul__(self, scalar):
        return DigitVector(scalar * d for d in self.digits)

    def __bool__(self):
        return bool(self.digits)

    def __repr__(self):
        return f"DigitVector({self.digits})"

    def abs_digits(self):
        return tuple(abs(d) for d in self.digits)

    def padded(self, length):
        return self.digits + (0,) * (length - len(self.digits))


ZERO = DigitVector()


class BoxParams(NamedTuple):
    u: int
    w: int
    n: int

    @property
    def reach(self):
        return max(self.u, self.w)


def half(n):
    return n // 2


def sigma(x, n):
    total = 0
    for d in reversed(x.digits):
        total = total * n + d
    return total


def basis_vector(i, n):
    if i < 0:
        raise ValueError("index must be non-negative")
    return DigitVector((0,) * i + (-n, 1))


def l1_norm(x):
    return sum(abs(d) for d in x.digits)


def final_digit_bound(k, reach, n):
    """Largest allowed ``|x_k|`` for the final digit at index ``k``."""
    if k < reach:
        return n // 2
    return n // 2 + (2 if n == 2 else 1)


def in_box(x, box):
    k = x.k
    if k is None:
        return True
    alpha = box.n // 2
    if any(abs(d) > alpha for d in x.digits[:k]):
        return False
    return abs(x.digits[k]) <= final_digit_bound(k, box.reach, box.n)


def balanced_residue(d, n):
    """Residue of ``d`` mod ``n`` in ``[-(n-1)//2, n//2]``; +n/2 wins for even n."""
    shift = (n - 1) // 2
    return (d + shift) % n - shift


def standard_digits(v, n):
    """Balanced base-n digits of ``v`` (every digit within ``n // 2``)."""
    digits = []
    while v:
        if abs(v) <= n // 2:
            digits.append(v)
            break
        r = balanced_residue(v, n)
        digits.append(r)
        v = (v - r) // n
    return DigitVector(digits)


def reduce_to_box(x, box):
    """Move ``x`` into the box by least-index-first carrying.

    Each out-of-bound digit is replaced by its balanced residue and the quotient
    is carried into the next index, i.e. a multiple of ``basis_vector(i)`` is
    added.  ``sigma`` is unchanged and the path length never increases.
    """
    n, reach = box.n, box.reach
    alpha = n // 2
    digits = list(x.digits)
    i = 0
    while True:
        while digits and digits[-1] == 0:
            digits.pop()
        if i >= len(digits):
            break
        d = digits[i]
        final = i == len(digits) - 1
        bound = final_digit_bound(i, reach, n) if final else alpha
        if abs(d) > bound:
            r = balanced_residue(d, n)
            if final:
                digits.append(0)
            digits[i] = r
            digits[i + 1] += (d - r) // n
        i += 1
    return DigitVector(digits)


def enumerate_box(v, box, max_len) -> Iterator[DigitVector]:
    """Every box vector with ``sigma == v`` and at most ``max_len`` digits.

    For n = 2 the box is infinite (e.g. ``(-1, ..., -1, 1)``), hence the cap.
    """
    n, reach = box.n, box.reach
    alpha = n // 2
    prefix = []

    def walk(i, carry):
        if carry == 0:
            yield DigitVector(prefix)
            return
        if i >= max_len:
            return
        if abs(carry) <= final_digit_bound(i, reach, n):
            prefix.append(carry)
            yield DigitVector(prefix)
            prefix.pop()
        r = carry % n
        for d in (r - n, r, r + n) if r else (-n, 0, n):
            if d != carry and abs(d) <= alpha:
                prefix.append(d)
                yield from walk(i + 1, (carry - d) // n)
                prefix.pop()

    yield from walk(0, v)


def _require_parity(n, odd):
    if (n % 2 == 1) != odd:
        raise ValueError(f"n={n} must be {'odd' if odd else 'even'} here")


def is_minimal_odd(x, box):
    """Minimality of a box vector for odd n.

    A box vector is non-minimal exactly when ``k > max(u, w)`` and its last
    two digits are ``(delta * n//2, -delta)``.  When ``k < max(u, w)`` the box
    is a singleton, so ``x`` is trivially minimal.
    """
    _require_parity(box.n, odd=True)
    k = x.k
    if k is None or k <= box.reach:
        return True
    alpha = box.n // 2
    last2 = (x.digits[k - 1], x.digits[k])
    return last2 not in ((alpha, -1), (-alpha, 1))


def forbidden_pair(a, b, n):
    """True for adjacent digits ``(d n/2, d n/2)`` or ``(d n/2, b)`` with sign(b) = -d."""
    h = n // 2
    if abs(a) != h:
        return False
    delta = 1 if a > 0 else -1
    return b == a or (b != 0 and (b > 0) != (delta > 0))


def is_minimal_strict_shape1(x, box):
    """Minimality (including the lexicographic tie-break) for even n, ``k < max(u, w)``."""
    _require_parity(box.n, odd=False)
    k = x.k
    if k is not None and k >= box.reach:
        raise ValueError("criterion only applies when k < max(u, w)")
    ds = x.digits
    return not any(forbidden_pair(ds[i], ds[i + 1], box.n) for i in range(len(ds) - 1))
