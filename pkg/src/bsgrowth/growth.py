"""Rational growth series denominators, their smallest roots, and growth reports."""

from __future__ import annotations

import cmath
import csv
import io
import json
import logging
import math
from dataclasses import asdict, dataclass

import numpy as np

from .automata import count_accepted, expand_to_On
from .kernels import bisect_newton, polyval, power_iteration

log = logging.getLogger(__name__)

ROOT_BRACKET = (1e-9, 1 - 1e-9)
ROOT_TOL = 1e-13
NEWTON_STEPS = 3
GUARD_POINTS = 720


class NoSignChange(ValueError):
    pass


class IntPolynomial:
    """Polynomial with integer coefficients, ascending powers, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree, coef=1):
        return cls([0] * degree + [coef])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def divmod(self, other):
        """Exact division by a polynomial with leading coefficient +-1."""
        other = _lift(other)
        if not other.coeffs or abs(other.coeffs[-1]) != 1:
            raise ValueError("divisor must be monic up to sign")
        rem = list(self.coeffs)
        quot = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.coeffs[-1]
        for i in range(len(quot) - 1, -1, -1):
            q = rem[i + len(other.coeffs) - 1] * lead
            quot[i] = q
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= q * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            body = str(mag) if i == 0 else ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            parts.append(("-" if a < 0 else "+", body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _lift(p):
    return p if isinstance(p, IntPolynomial) else IntPolynomial([p])


X = IntPolynomial.monomial(1)


def _geometric(lo, hi):
    """x^lo + ... + x^hi (empty when hi < lo)."""
    return IntPolynomial([0] * lo + [1] * (hi - lo + 1)) if hi >= lo else IntPolynomial()


def theorem_polynomial(n):
    """Denominator of the growth series of BS(1, n)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    alpha = n // 2
    if n % 2:
        return 1 - X - 2 * _geometric(2, alpha + 1)
    return (
        1
        - 2 * X
        - X * X
        + 2 * IntPolynomial.monomial(alpha + 1)
        - 2 * IntPolynomial.monomial(alpha + 2)
        + 2 * IntPolynomial.monomial(2 * alpha + 2)
    )


def even_matrix(n):
    """Transfer matrix of generating functions between the three digit states."""
    if n % 2:
        raise ValueError("the three-state matrix is defined for even n only")
    alpha = n // 2
    top = X + 2 * _geometric(2, alpha)
    edge = IntPolynomial.monomial(alpha + 1)
    back = _geometric(1, alpha)
    zero = IntPolynomial()
    return [[top, edge, edge], [back, zero, zero], [back, zero, zero]]


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def even_matrix_det(n):
    """det(I - M(x)) for the even-case transfer matrix."""
    m = even_matrix(n)
    ident = [[IntPolynomial([1 if i == j else 0]) for j in range(3)] for i in range(3)]
    return _det3([[ident[i][j] - m[i][j] for j in range(3)] for i in range(3)])


def _winding_guard(p, root):
    """Log if ``p`` has a zero of modulus below ``root`` (argument principle on a circle)."""
    radius = root - 1e-6
    if radius <= 0:
        return 0
    pts = [radius * cmath.exp(2j * math.pi * k / GUARD_POINTS) for k in range(GUARD_POINTS + 1)]
    vals = [p(z) for z in pts]
    turn = 0.0
    for a, b in zip(vals, vals[1:]):
        if a == 0 or b == 0:
            log.warning("polynomial vanishes on the guard circle")
            return -1
        turn += cmath.phase(b / a)
    zeros = round(turn / (2 * math.pi))
    if zeros:
        log.warning("%s has %d zero(s) inside |z| < %.15g", p, zeros, radius)
    return zeros


def smallest_root(p):
    """The root of ``p`` in (0, 1), bisected then Newton-polished."""
    coeffs = np.array(p.coeffs, dtype=np.float64)
    lo, hi = ROOT_BRACKET
    if np.sign(polyval(coeffs, lo)) == np.sign(polyval(coeffs, hi)):
        raise NoSignChange(f"{p} has no sign change on ({lo}, {hi})")
    root = bisect_newton(coeffs, lo, hi, tol=ROOT_TOL, newton_steps=NEWTON_STEPS)
    _winding_guard(p, root)
    return root


@dataclass(frozen=True)
class GrowthReport:
    n: int
    polynomial: str
    root: float
    rate: float
    empirical_rate: float
    empirical_length: int
    counts_tail: tuple

    def as_dict(self):
        d = asdict(self)
        d["counts_tail"] = list(self.counts_tail)
        return d


EMPIRICAL_LENGTH = 40


def growth_rate(n, length=EMPIRICAL_LENGTH):
    poly = theorem_polynomial(n)
    root = smallest_root(poly)
    counts = count_accepted(expand_to_On(n), length)
    empirical = counts[-1] / counts[-2] if counts[-2] else float("nan")
    return GrowthReport(n, str(poly), root, 1.0 / root, empirical, length, tuple(counts[-3:]))


LIMIT_MATRIX = np.array([[1, 1, 1], [1, 1, 0], [1, 0, 1]], dtype=float)


@dataclass(frozen=True)
class LimitCheck:
    series_root: float
    eigen_rate: float
    root_50: float
    root_51: float


def limit_rate_check():
    series_root = smallest_root(1 - 2 * X - X * X)
    eigen_rate, _ = power_iteration(LIMIT_MATRIX)
    return LimitCheck(
        series_root,
        eigen_rate,
        smallest_root(theorem_polynomial(50)),
        smallest_root(theorem_polynomial(51)),
    )


@dataclass(frozen=True)
class CountEstimate:
    root_estimate: float
    ratio: float


def estimate_growth_from_counts(counts):
    """``exp(log f(N) / N)`` at the last index, with ``f(N)/f(N-1)`` alongside."""
    counts = list(counts)
    if not any(counts):
        raise ValueError("count sequence is identically zero")
    N = len(counts) - 1
    if N < 1 or counts[-1] <= 0:
        raise ValueError("need a positive final count at N >= 1")
    root_estimate = math.exp(math.log(counts[-1]) / N)
    ratio = counts[-1] / counts[-2] if counts[-2] else float("nan")
    return CountEstimate(root_estimate, ratio)


REPORT_FIELDS = ("n", "polynomial", "root", "rate", "empirical_rate", "empirical_length")


def _fmt(x):
    return format(x, ".15g") if isinstance(x, float) else str(x)


def reports_to_json(reports):
    return json.dumps([r.as_dict() for r in reports], indent=2)


def reports_to_csv(reports):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_FIELDS)
    for r in reports:
        writer.writerow([_fmt(getattr(r, f)) for f in REPORT_FIELDS])
    return buf.getvalue()


def reports_to_text(reports):
    lines = [f"{'n':>3}  {'smallest root':>18}  {'growth rate':>18}  {'O_n ratio':>18}"]
    for r in reports:
        lines.append(f"{r.n:>3}  {_fmt(r.root):>18}  {_fmt(r.rate):>18}  {_fmt(r.empirical_rate):>18}")
    return "\n".join(lines) + "\n"
