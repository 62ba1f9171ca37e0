"""Normal forms in BS(1,n) = <a, t | t a t^-1 = a^n> and the Cayley-graph oracle.

Every element is written uniquely as ``t^-u a^v t^w`` with ``u, w >= 0`` and
``u*w == 0`` whenever ``n`` divides ``v``.  Words are plain strings over the
letters ``a``, ``A`` (= a^-1), ``t`` and ``T`` (= t^-1).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

LETTERS = "aAtT"
INVERSE_LETTER = {"a": "A", "A": "a", "t": "T", "T": "t"}

DEFAULT_NODE_BUDGET = 5_000_000


def node_budget():
    """BFS node budget, overridable through ``BSG_NODE_BUDGET``."""
    raw = os.environ.get("BSG_NODE_BUDGET")
    if raw:
        return int(float(raw))
    return DEFAULT_NODE_BUDGET


class BudgetExceeded(RuntimeError):
    """The breadth-first search hit its node budget.

    ``last_radius`` is the largest radius whose sphere was fully enumerated,
    ``spheres`` the sphere sizes up to it.
    """

    def __init__(self, last_radius, spheres, budget):
        super().__init__(
            f"node budget {budget} exceeded after completing radius {last_radius}"
        )
        self.last_radius = last_radius
        self.spheres = list(spheres)
        self.budget = budget


@dataclass(frozen=True)
class GroupParams:
    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")


@dataclass(frozen=True, order=True)
class GroupElement:
    """The triple ``(u, v, w)`` standing for ``t^-u a^v t^w``."""

    u: int = 0
    v: int = 0
    w: int = 0

    def __post_init__(self):
        if self.u < 0 or self.w < 0:
            raise ValueError(f"u and w must be non-negative, got {self}")

    def is_normal(self, n):
        return not (self.v % n == 0 and self.u > 0 and self.w > 0)

    def as_tuple(self):
        return (self.u, self.v, self.w)


IDENTITY = GroupElement(0, 0, 0)


def _n(params):
    return params.n if isinstance(params, GroupParams) else params


def normalize(u, v, w, n):
    """Apply ``t^-1 a^(kn) t = a^k`` until the triple is a normal form."""
    n = _n(n)
    if u < 0 or w < 0:
        raise ValueError("u and w must be non-negative")
    while u > 0 and w > 0 and v % n == 0:
        u -= 1
        w -= 1
        v //= n
    return GroupElement(u, v, w)


def multiply(g, h, params):
    n = _n(params)
    u = g.u + h.u
    v = g.v * n**h.u + h.v * n**g.w
    w = g.w + h.w
    return normalize(u, v, w, n)


def inverse(g, params=None):
    return GroupElement(g.w, -g.v, g.u)


def step(g, letter, n):
    """Right-multiply a normal form by one generator."""
    u, v, w = g.u, g.v, g.w
    if letter == "a":
        return GroupElement(u, v + n**w, w)
    if letter == "A":
        return GroupElement(u, v - n**w, w)
    if letter == "t":
        if w == 0 and u > 0 and v % n == 0:
            return GroupElement(u - 1, v // n, 0)
        return GroupElement(u, v, w + 1)
    if letter == "T":
        if w > 0:
            return GroupElement(u, v, w - 1)
        return GroupElement(u + 1, v * n, 0)
    raise ValueError(f"unknown letter {letter!r}")


def evaluate_word(word, params):
    n = _n(params)
    g = IDENTITY
    for letter in word:
        g = step(g, letter, n)
    return g


def spell(g):
    """The literal word ``t^-u a^v t^w``; not geodesic in general."""
    a_block = "a" * g.v if g.v >= 0 else "A" * (-g.v)
    return "T" * g.u + a_block + "t" * g.w


def invert_word(word):
    return "".join(INVERSE_LETTER[ch] for ch in reversed(word))


def _neighbours(state, n, powers):
    u, v, w = state
    while len(powers) <= w + 1:
        powers.append(powers[-1] * n)
    p = powers[w]
    yield (u, v + p, w)
    yield (u, v - p, w)
    if w == 0 and u > 0 and v % n == 0:
        yield (u - 1, v // n, 0)
    else:
        yield (u, v, w + 1)
    if w > 0:
        yield (u, v, w - 1)
    else:
        yield (u + 1, v * n, 0)


class CayleyBall:
    """Layer-by-layer BFS ball around the identity.

    ``distances`` maps normal-form tuples ``(u, v, w)`` to word length.
    """

    def __init__(self, params, budget=None):
        self.n = _n(params)
        GroupParams(self.n)
        self.budget = node_budget() if budget is None else int(budget)
        self.distances = {(0, 0, 0): 0}
        self.spheres = [1]
        self._frontier = [(0, 0, 0)]
        self._powers = [1]

    @property
    def radius(self):
        return len(self.spheres) - 1

    def expand_to(self, radius):
        dist = self.distances
        while self.radius < radius:
            r = self.radius + 1
            nxt = []
            for state in self._frontier:
                for nb in _neighbours(state, self.n, self._powers):
                    if nb not in dist:
                        dist[nb] = r
                        nxt.append(nb)
                if len(dist) > self.budget:
                    # Drop the partial layer so the ball stays consistent.
                    for s in nxt:
                        del dist[s]
                    raise BudgetExceeded(self.radius, self.spheres, self.budget)
            self._frontier = nxt
            self.spheres.append(len(nxt))
        return self

    def sphere(self, radius):
        self.expand_to(radius)
        return [g for g, d in self.distances.items() if d == radius]

    def distance(self, g):
        key = g.as_tuple() if isinstance(g, GroupElement) else tuple(g)
        while key not in self.distances:
            self.expand_to(self.radius + 1)
        return self.distances[key]


def bfs_spheres(params, radius, budget=None):
    if radius < 0:
        raise ValueError("radius must be non-negative")
    return list(CayleyBall(params, budget).expand_to(radius).spheres)


def bfs_distance(g, params, budget=None, ball=None):
    if ball is None:
        ball = CayleyBall(params, budget)
    return ball.distance(g)
