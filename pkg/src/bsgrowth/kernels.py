"""Numeric inner loops.

Every kernel has a numba-compiled body and a numpy fallback.  The public
wrappers pick one according to ``bsgrowth._accel.HAVE_NUMBA`` unless a
``backend`` is passed explicitly ("numba" or "numpy"), which the benchmark and
the backend-equivalence tests use.
"""

import numpy as np

from ._accel import HAVE_NUMBA, njit

#: Integer codes used for letters in batched word arrays.
CODE_A, CODE_A_INV, CODE_T, CODE_T_INV = 0, 1, 2, 3
LETTER_CODES = {"a": CODE_A, "A": CODE_A_INV, "t": CODE_T, "T": CODE_T_INV}
CODE_LETTERS = "aAtT"

_INT64_SAFE = 2**62


def _resolve(backend):
    if backend is None:
        return "numba" if HAVE_NUMBA else "numpy"
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is unavailable or disabled")
    return backend


def all_words(length):
    """All ``4**length`` words of the given length as an int8 code array.

    Rows are in lexicographic order of the codes (a < A < t < T).
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    count = 4**length
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, length), dtype=np.int8)
    for p in range(length):
        out[:, p] = (idx >> (2 * (length - 1 - p))) & 3
    return out


def encode_words(words):
    """Encode equal-length letter strings over ``aAtT`` as an int8 array."""
    words = list(words)
    length = len(words[0]) if words else 0
    out = np.empty((len(words), length), dtype=np.int8)
    for r, word in enumerate(words):
        if len(word) != length:
            raise ValueError("encode_words needs words of equal length")
        out[r] = [LETTER_CODES[ch] for ch in word]
    return out


def decode_words(codes):
    return ["".join(CODE_LETTERS[c] for c in row) for row in np.asarray(codes)]


@njit(cache=True)
def _evaluate_words_jit(codes, n):
    m, length = codes.shape
    out = np.empty((m, 3), dtype=np.int64)
    for r in range(m):
        u = 0
        v = 0
        w = 0
        pw = 1
        for p in range(length):
            c = codes[r, p]
            if c == 0:
                v += pw
            elif c == 1:
                v -= pw
            elif c == 2:
                if w == 0 and u > 0 and v % n == 0:
                    u -= 1
                    v //= n
                else:
                    w += 1
                    pw *= n
            else:
                if w > 0:
                    w -= 1
                    pw //= n
                else:
                    u += 1
                    v *= n
        out[r, 0] = u
        out[r, 1] = v
        out[r, 2] = w
    return out


def _evaluate_words_numpy(codes, n):
    m, length = codes.shape
    u = np.zeros(m, dtype=np.int64)
    v = np.zeros(m, dtype=np.int64)
    w = np.zeros(m, dtype=np.int64)
    pw = np.ones(m, dtype=np.int64)
    for p in range(length):
        c = codes[:, p]
        v += np.where(c == CODE_A, pw, 0) - np.where(c == CODE_A_INV, pw, 0)

        is_t = c == CODE_T
        reduce = is_t & (w == 0) & (u > 0) & (v % n == 0)
        grow = is_t & ~reduce
        u -= reduce
        v = np.where(reduce, v // n, v)
        w += grow
        pw = np.where(grow, pw * n, pw)

        is_ti = c == CODE_T_INV
        shrink = is_ti & (w > 0)
        push = is_ti & ~shrink
        u += push
        v = np.where(push, v * n, v)
        w -= shrink
        pw = np.where(shrink, pw // n, pw)
    return np.stack([u, v, w], axis=1)


def evaluate_words(codes, n, backend=None):
    """Normal forms ``(u, v, w)`` of a batch of encoded words.

    Raises ``OverflowError`` when ``|v|`` could leave the int64 range; callers
    fall back to the arbitrary-precision path in :mod:`bsgrowth.group` then.
    """
    codes = np.ascontiguousarray(codes, dtype=np.int8)
    if codes.ndim != 2:
        raise ValueError("codes must be a 2-d array")
    length = codes.shape[1]
    if (length + 1) * n ** (length + 1) >= _INT64_SAFE:
        raise OverflowError(f"words of length {length} may overflow int64 for n={n}")
    if _resolve(backend) == "numba":
        return _evaluate_words_jit(codes, np.int64(n))
    return _evaluate_words_numpy(codes, n)


def triple_keys(triples, v_offset, span):
    """Pack ``(u, v, w)`` rows into sortable int64 keys.

    ``span`` must exceed every ``u`` and ``w``; ``v_offset`` must make every
    ``v + v_offset`` non-negative.
    """
    t = np.asarray(triples, dtype=np.int64)
    return ((t[:, 1] + v_offset) * span + t[:, 0]) * span + t[:, 2]


@njit(cache=True)
def _power_iteration_jit(matrix, max_iter, tol):
    size = matrix.shape[0]
    vec = np.ones(size)
    vec /= np.sqrt(size)
    value = 0.0
    for _ in range(max_iter):
        nxt = matrix @ vec
        norm = np.sqrt(np.sum(nxt * nxt))
        if norm == 0.0:
            return 0.0, nxt
        nxt /= norm
        new_value = nxt @ (matrix @ nxt)
        if abs(new_value - value) <= tol * max(1.0, abs(new_value)):
            return new_value, nxt
        value = new_value
        vec = nxt
    return value, vec


def _power_iteration_numpy(matrix, max_iter, tol):
    size = matrix.shape[0]
    vec = np.full(size, 1.0 / np.sqrt(size))
    value = 0.0
    for _ in range(max_iter):
        nxt = matrix @ vec
        norm = np.linalg.norm(nxt)
        if norm == 0.0:
            return 0.0, nxt
        nxt /= norm
        new_value = float(nxt @ (matrix @ nxt))
        if abs(new_value - value) <= tol * max(1.0, abs(new_value)):
            return new_value, nxt
        value = new_value
        vec = nxt
    return value, vec


def power_iteration(matrix, max_iter=10_000, tol=1e-15, backend=None):
    """Dominant eigenvalue of a non-negative matrix by power iteration.

    The Rayleigh quotient is returned, so the matrix should be symmetric or
    primitive for a sharp answer; :func:`spectral_radius` handles the general
    non-negative case.
    """
    m = np.ascontiguousarray(matrix, dtype=np.float64)
    if _resolve(backend) == "numba":
        value, vec = _power_iteration_jit(m, max_iter, tol)
    else:
        value, vec = _power_iteration_numpy(m, max_iter, tol)
    return float(value), np.asarray(vec)


@njit(cache=True)
def _spectral_radius_jit(matrix, max_iter, tol):
    # Shift by the identity so periodic irreducible blocks become primitive.
    size = matrix.shape[0]
    vec = np.ones(size)
    prev = 0.0
    for _ in range(max_iter):
        nxt = matrix @ vec + vec
        top = np.max(nxt)
        if top == 0.0:
            return 0.0
        ratio_hi = 0.0
        ratio_lo = np.inf
        for i in range(size):
            if vec[i] > 0.0:
                q = nxt[i] / vec[i]
                ratio_hi = max(ratio_hi, q)
                ratio_lo = min(ratio_lo, q)
        vec = nxt / top
        if ratio_hi - ratio_lo <= tol * ratio_hi:
            return 0.5 * (ratio_hi + ratio_lo) - 1.0
        prev = ratio_hi
    return prev - 1.0


def _spectral_radius_numpy(matrix, max_iter, tol):
    vec = np.ones(matrix.shape[0])
    prev = 0.0
    for _ in range(max_iter):
        nxt = matrix @ vec + vec
        top = nxt.max()
        if top == 0.0:
            return 0.0
        pos = vec > 0
        q = nxt[pos] / vec[pos]
        hi, lo = q.max(), q.min()
        vec = nxt / top
        if hi - lo <= tol * hi:
            return 0.5 * (hi + lo) - 1.0
        prev = hi
    return prev - 1.0


def spectral_radius(matrix, max_iter=100_000, tol=1e-13, backend=None):
    """Perron root of an irreducible non-negative matrix.

    Uses Collatz-Wielandt bounds on ``A + I``; the returned value lies between
    the final lower and upper bounds.  A 0x0 or all-zero matrix gives 0.
    """
    m = np.ascontiguousarray(matrix, dtype=np.float64)
    if m.size == 0 or not m.any():
        return 0.0
    if _resolve(backend) == "numba":
        return float(_spectral_radius_jit(m, max_iter, tol))
    return float(_spectral_radius_numpy(m, max_iter, tol))


@njit(cache=True)
def _horner(coeffs, x):
    acc = 0.0
    for i in range(coeffs.shape[0] - 1, -1, -1):
        acc = acc * x + coeffs[i]
    return acc


@njit(cache=True)
def _horner_derivative(coeffs, x):
    acc = 0.0
    for i in range(coeffs.shape[0] - 1, 0, -1):
        acc = acc * x + i * coeffs[i]
    return acc


@njit(cache=True)
def _bisect_newton_jit(coeffs, lo, hi, tol, newton_steps):
    flo = _horner(coeffs, lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = _horner(coeffs, mid)
        if fmid == 0.0:
            lo = mid
            hi = mid
            break
        if (fmid > 0.0) == (flo > 0.0):
            lo = mid
            flo = fmid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(newton_steps):
        d = _horner_derivative(coeffs, x)
        if d == 0.0:
            break
        x -= _horner(coeffs, x) / d
    return x


def bisect_newton(coeffs, lo, hi, tol=1e-13, newton_steps=3):
    """Root of a real polynomial (ascending coefficients) bracketed by [lo, hi].

    The caller guarantees a sign change.  Bisection narrows the bracket to
    ``tol``; a few Newton steps then polish to machine precision.
    """
    c = np.ascontiguousarray(coeffs, dtype=np.float64)
    return float(_bisect_newton_jit(c, float(lo), float(hi), float(tol), int(newton_steps)))


def polyval(coeffs, x):
    return float(_horner(np.ascontiguousarray(coeffs, dtype=np.float64), float(x)))
