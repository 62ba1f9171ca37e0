"""Oracle checks that compare the constructions against brute force.

Each suite returns a :class:`CheckResult`; ``failures`` holds a few
counterexamples for the report.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .automata import accepted_strings, build_Dn, count_accepted, expand_to_On
from .geodesic import eta, minimal_vector_for, path_length
from .group import CayleyBall, bfs_spheres, evaluate_word, normalize
from .kernels import all_words, decode_words, evaluate_words
from .lattice import BoxParams, DigitVector, enumerate_box, in_box, reduce_to_box, sigma
from .shape_map import clamp_degree_bound, preimage_count

MAX_EXAMPLES = 5


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    detail: str = ""
    failed: int = 0

    @property
    def passed(self):
        return self.failed == 0

    def fail(self, example):
        self.failed += 1
        if len(self.failures) < MAX_EXAMPLES:
            self.failures.append(example)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}: {self.checked} checked, {self.failed} failed{extra}"


def check_geodesics(n, radius, budget=None):
    """``eta(minimal_vector)`` spells each element and has its BFS length."""
    ball = CayleyBall(n, budget).expand_to(radius)
    result = CheckResult(f"geodesic-vs-BFS n={n} radius={radius}")
    for (u, v, w), dist in ball.distances.items():
        x = minimal_vector_for(u, v, w, n)
        word = eta(x, u, w, n).word
        result.checked += 1
        if len(word) != dist or evaluate_word(word, n).as_tuple() != (u, v, w):
            result.fail(((u, v, w), word, dist))
    return result


STRICT1_TEMPLATE = re.compile(r"^T*(?:(?:a*|A*)t)+$")


def _parse_strict1(word):
    """Split ``T^u a^x0 t a^x1 t ... t`` into ``(u, digits, w)``."""
    u = len(word) - len(word.lstrip("T"))
    blocks = word[u:].split("t")[:-1]
    digits = [len(b) if b.startswith("a") else -len(b) for b in blocks]
    return u, DigitVector(digits), len(blocks)


def box_minimisers(u, v, w, n):
    """Least path length over the box and every vector attaining it, by enumeration.

    A vector with ``k > max(u, w)`` costs at least ``2k - |u - w| + 1``, so the
    length of any one box vector (here the carried single digit ``(v)``) caps
    ``k``.
    """
    box = BoxParams(u, w, n)
    upper = path_length(reduce_to_box(DigitVector((v,)), box), u, w, n)
    cap = max(max(u, w), (upper + abs(u - w)) // 2) + 1
    best, found = None, []
    for x in enumerate_box(v, box, cap):
        length = path_length(x, u, w, n)
        if best is None or length < best:
            best, found = length, [x]
        elif length == best:
            found.append(x)
    return best, found


def canonical_minimiser(found):
    """The tie-break used for even n: smallest absolute digits, index 0 first."""
    return min(found, key=lambda y: (y.abs_digits(), y.digits))


def is_strict1_geodesic_word(word, n, distance):
    """Does ``word`` (already known to have length ``distance``) render a minimal vector?

    The word must be ``eta(x, u, w)`` for the normal form ``(u, sigma(x), w)``
    with ``k < w``, ``x`` in the box, and ``x`` a minimiser (the one with the
    lexicographically smallest absolute digits when n is even).
    """
    if len(word) != distance or not STRICT1_TEMPLATE.match(word):
        return False
    u, x, w = _parse_strict1(word)
    k = 0 if x.k is None else x.k
    v = sigma(x, n)
    if k >= w or normalize(u, v, w, n).as_tuple() != (u, v, w):
        return False
    if not in_box(x, BoxParams(u, w, n)):
        return False
    best, found = box_minimisers(u, v, w, n)
    if path_length(x, u, w, n) != best:
        return False
    return n % 2 == 1 or x == canonical_minimiser(found)


def brute_force_language(n, length, ball=None):
    """Strict-shape-1 geodesic words of one length, from all ``4**length`` words."""
    if length == 0:
        return set()
    ball = ball if ball is not None else CayleyBall(n)
    ball.expand_to(length)
    codes = all_words(length)
    triples = evaluate_words(codes, n)
    dist = ball.distances
    keep = np.fromiter(
        (dist.get((int(a), int(b), int(c))) == length for a, b, c in triples), dtype=bool, count=len(triples)
    )
    words = decode_words(codes[keep])
    return {w for w in words if is_strict1_geodesic_word(w, n, length)}


def check_language(n, max_length):
    """Words accepted by O_n equal the brute-force strict-shape-1 geodesics."""
    automaton = expand_to_On(n)
    ball = CayleyBall(n)
    result = CheckResult(f"O_n language n={n} N<={max_length}")
    for length in range(max_length + 1):
        accepted = set(accepted_strings(automaton, length))
        brute = brute_force_language(n, length, ball)
        result.checked += len(accepted | brute)
        for word in sorted(accepted ^ brute):
            result.fail((length, word, "accepted only" if word in accepted else "brute force only"))
    return result


def check_sandwich(n, max_length, factor=20, budget=None):
    """``|O_n(N)| <= |S_n(N)| <= factor * |O_n(N + 3)|``."""
    counts = count_accepted(expand_to_On(n), max_length + 3)
    spheres = bfs_spheres(n, max_length, budget)
    result = CheckResult(f"sandwich n={n} N<={max_length}")
    for N in range(max_length + 1):
        result.checked += 1
        if not counts[N] <= spheres[N] <= factor * counts[N + 3]:
            result.fail((N, counts[N], spheres[N], counts[N + 3]))
    return result


def clamp_degree_histogram(n, max_length=8):
    """Preimage counts over every minimal strict-shape-1 vector with at most ``max_length`` digits.

    The vectors are enumerated from D_n (minimal strict-shape-1 digit strings
    without trailing zeros) plus the zero vector.
    """
    automaton = build_Dn(n)
    hist = {}
    worst = None
    for length in range(max_length + 1):
        for digits in accepted_strings(automaton, length):
            y = DigitVector(digits)
            c = preimage_count(y, BoxParams(0, length, n))
            hist[c] = hist.get(c, 0) + 1
            if worst is None or c > worst[0]:
                worst = (c, y)
    return hist, worst


def check_clamp_degree(n, max_length=8):
    hist, worst = clamp_degree_histogram(n, max_length)
    bound = clamp_degree_bound(n)
    result = CheckResult(f"clamp degree n={n} length<={max_length}", checked=sum(hist.values()))
    result.detail = f"max {worst[0]}, bound {bound}, histogram {dict(sorted(hist.items()))}"
    if worst[0] > bound:
        result.fail(worst)
    return result


def run_all(n, radius, budget=None):
    """Every suite at the given radius, as used by the command line."""
    return [
        check_geodesics(n, radius, budget),
        check_language(n, min(radius, 8)),
        check_sandwich(n, radius, budget=budget),
        check_clamp_degree(n, min(radius, 6)),
    ]


__all__ = [
    "CheckResult",
    "box_minimisers",
    "brute_force_language",
    "canonical_minimiser",
    "check_clamp_degree",
    "check_geodesics",
    "check_language",
    "check_sandwich",
    "clamp_degree_histogram",
    "is_strict1_geodesic_word",
    "run_all",
]
