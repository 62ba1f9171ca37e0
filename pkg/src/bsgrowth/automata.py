"""Digit automata D_n, D_n' and the letter automaton O_n of strict-shape-1 geodesics.

Automata are deterministic with an implicit fail state: a missing transition
rejects.  Digit automata read integers in ``[-n//2, n//2]``; O_n reads the
letters ``a``, ``A`` (a^-1), ``t`` and ``T`` (t^-1).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable

import numpy as np

from .kernels import spectral_radius

LETTER_ALPHABET = ("a", "A", "t", "T")


class AlphabetError(ValueError):
    pass


@dataclass(frozen=True)
class Automaton:
    states: tuple
    start: Hashable
    accepts: frozenset
    edges: tuple  # (src, symbol, dst) triples in construction order
    alphabet: tuple
    name: str = ""
    _delta: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        delta = {s: {} for s in self.states}
        for src, sym, dst in self.edges:
            if sym in delta[src]:
                raise ValueError(f"nondeterministic: {src!r} has two {sym!r} edges")
            delta[src][sym] = dst
        if self.start not in delta:
            raise ValueError("start state missing")
        if not set(self.accepts) <= set(self.states):
            raise ValueError("accept state not in state set")
        object.__setattr__(self, "_delta", delta)

    def next(self, state, symbol):
        return self._delta[state].get(symbol)

    def out(self, state):
        return self._delta[state]

    def run(self, string):
        state = self.start
        alphabet = set(self.alphabet)
        for sym in string:
            if sym not in alphabet:
                raise AlphabetError(f"symbol {sym!r} not in alphabet")
            state = self._delta[state].get(sym)
            if state is None:
                return None
        return state


def accepts(automaton, string):
    state = automaton.run(string)
    return state is not None and state in automaton.accepts


def digit_alphabet(n):
    alpha = n // 2
    return tuple(range(-alpha, alpha + 1))


def build_Dn(n):
    """Minimal strict-shape-1 digit strings not ending in 0."""
    alpha = n // 2
    digits = digit_alphabet(n)
    edges = []
    if n % 2:
        for d in digits:
            edges.append(("s0", d, "s1" if d == 0 else "s0"))
        for d in digits:
            edges.append(("s1", d, "s1" if d == 0 else "s0"))
        return Automaton(("s0", "s1"), "s0", frozenset({"s0"}), tuple(edges), digits, f"D_{n}")
    for src in ("s0", "s3"):
        for d in digits:
            if d == 0:
                dst = "s3"
            elif d == alpha:
                dst = "s1"
            elif d == -alpha:
                dst = "s2"
            else:
                dst = "s0"
            edges.append((src, d, dst))
    for d in digits:
        if d == 0:
            edges.append(("s1", d, "s3"))
        elif 0 < d < alpha:
            edges.append(("s1", d, "s0"))
    for d in digits:
        if d == 0:
            edges.append(("s2", d, "s3"))
        elif -alpha < d < 0:
            edges.append(("s2", d, "s0"))
    return Automaton(
        ("s0", "s1", "s2", "s3"), "s0", frozenset({"s0", "s1", "s2"}), tuple(edges), digits, f"D_{n}"
    )


def build_Dn_prime(n):
    """Like D_n but trailing zero digits are allowed (the zero-tracking state is merged)."""
    alpha = n // 2
    digits = digit_alphabet(n)
    if n % 2:
        edges = tuple(("s0", d, "s0") for d in digits)
        return Automaton(("s0",), "s0", frozenset({"s0"}), edges, digits, f"D'_{n}")
    edges = []
    for d in digits:
        edges.append(("s0", d, "s1" if d == alpha else "s2" if d == -alpha else "s0"))
    edges += [("s1", d, "s0") for d in digits if 0 <= d < alpha]
    edges += [("s2", d, "s0") for d in digits if -alpha < d <= 0]
    return Automaton(("s0", "s1", "s2"), "s0", frozenset({"s0", "s1", "s2"}), tuple(edges), digits, f"D'_{n}")


def _expanded(state, j):
    return f"{state},{j}"


START = "start"
T_INV = "s_t-1"


def digit_expansion(dprime, alpha):
    """Replace every digit state by a chain of ``a``/``A`` states joined by ``t`` edges.

    State ``s,j`` means "in digit state ``s`` having read ``a^j``".  A digit edge
    ``s --d--> s'`` becomes ``s,d --t--> s',0``.  States ``start`` and ``s_t-1``
    are prepended for the initial ``t^-1`` block; the accept states are the
    ``s,0`` (reached only by ``t``).
    """
    states = [START, T_INV]
    edges = []
    for s in dprime.states:
        states += [_expanded(s, j) for j in range(-alpha, alpha + 1)]
    for s in dprime.states:
        for j in range(0, alpha):
            edges.append((_expanded(s, j), "a", _expanded(s, j + 1)))
        for j in range(0, -alpha, -1):
            edges.append((_expanded(s, j), "A", _expanded(s, j - 1)))
        for d, dst in dprime.out(s).items():
            edges.append((_expanded(s, d), "t", _expanded(dst, 0)))

    s0 = _expanded(dprime.start, 0)
    zero_target = dprime.next(dprime.start, 0)
    if alpha:
        edges += [(START, "a", _expanded(dprime.start, 1)), (START, "A", _expanded(dprime.start, -1))]
        edges += [(T_INV, "a", _expanded(dprime.start, 1)), (T_INV, "A", _expanded(dprime.start, -1))]
    if zero_target is not None:
        edges.append((START, "t", _expanded(zero_target, 0)))
    edges += [(START, "T", T_INV), (T_INV, "T", T_INV)]
    accepts_ = frozenset(_expanded(s, 0) for s in dprime.states)
    del s0
    return Automaton(tuple(states), START, accepts_, tuple(edges), LETTER_ALPHABET)


def trim(automaton):
    """Drop states that are unreachable from start or cannot reach an accept state."""
    fwd = {automaton.start}
    queue = deque([automaton.start])
    while queue:
        s = queue.popleft()
        for dst in automaton.out(s).values():
            if dst not in fwd:
                fwd.add(dst)
                queue.append(dst)
    rev = {s: [] for s in automaton.states}
    for src, _, dst in automaton.edges:
        rev[dst].append(src)
    live = set(automaton.accepts)
    queue = deque(live)
    while queue:
        s = queue.popleft()
        for src in rev[s]:
            if src not in live:
                live.add(src)
                queue.append(src)
    keep = fwd & live
    keep.add(automaton.start)
    states = tuple(s for s in automaton.states if s in keep)
    edges = tuple(e for e in automaton.edges if e[0] in keep and e[2] in keep)
    return Automaton(
        states, automaton.start, frozenset(automaton.accepts & keep), edges, automaton.alphabet, automaton.name
    )


def expand_to_On(n):
    automaton = trim(digit_expansion(build_Dn_prime(n), n // 2))
    return Automaton(
        automaton.states, automaton.start, automaton.accepts, automaton.edges, automaton.alphabet, f"O_{n}"
    )


def count_accepted(automaton, max_len):
    """``f(N)`` for ``N = 0..max_len``: number of accepted strings of length N."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    index = {s: i for i, s in enumerate(automaton.states)}
    moves = [(index[src], index[dst]) for src, _, dst in automaton.edges]
    acc = [index[s] for s in automaton.accepts]
    current = [0] * len(index)
    current[index[automaton.start]] = 1
    counts = []
    for _ in range(max_len + 1):
        counts.append(sum(current[i] for i in acc))
        nxt = [0] * len(index)
        for i, j in moves:
            if current[i]:
                nxt[j] += current[i]
        current = nxt
    return counts


def accepted_strings(automaton, length):
    """All accepted strings of exactly ``length`` symbols, in DFS order."""
    out = []
    path = []

    def walk(state, remaining):
        if remaining == 0:
            if state in automaton.accepts:
                out.append(tuple(path))
            return
        for sym, dst in automaton.out(state).items():
            path.append(sym)
            walk(dst, remaining - 1)
            path.pop()

    walk(automaton.start, length)
    if automaton.alphabet == LETTER_ALPHABET:
        return ["".join(p) for p in out]
    return out


def strongly_connected_components(automaton):
    """Tarjan's algorithm, iterative.  Components come out in reverse topological order."""
    index_of = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = 0
    for root in automaton.states:
        if root in index_of:
            continue
        work = [(root, iter(list(automaton.out(root).values())))]
        index_of[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index_of:
                    index_of[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(list(automaton.out(nxt).values()))))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index_of[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index_of[node]:
                comp = []
                while True:
                    s = stack.pop()
                    on_stack.discard(s)
                    comp.append(s)
                    if s == node:
                        break
                comps.append(tuple(comp))
    return comps


def adjacency_matrix(automaton, states=None):
    states = automaton.states if states is None else tuple(states)
    index = {s: i for i, s in enumerate(states)}
    mat = np.zeros((len(states), len(states)))
    for src, _, dst in automaton.edges:
        if src in index and dst in index:
            mat[index[src], index[dst]] += 1
    return mat


@dataclass(frozen=True)
class SccGrowth:
    components: tuple  # tuples of states
    rates: tuple  # spectral radius inside each component
    state_rates: dict  # growth rate of accepted paths starting at each state
    rate: float  # rate from the start state
    count_estimate: float  # f(N)/f(N-1) at the probe length, or nan


def scc_growth(automaton, probe_length=60):
    """Growth of accepted-path counts via the condensation.

    Each component's rate is the Perron root of its internal adjacency matrix;
    a state's rate is the largest rate among components it can reach that can
    still reach an accept state, and the automaton's rate is the start state's.
    """
    comps = strongly_connected_components(automaton)
    comp_of = {s: ci for ci, comp in enumerate(comps) for s in comp}
    rates = tuple(spectral_radius(adjacency_matrix(automaton, comp)) for comp in comps)

    succ = {ci: set() for ci in range(len(comps))}
    for src, _, dst in automaton.edges:
        if comp_of[src] != comp_of[dst]:
            succ[comp_of[src]].add(comp_of[dst])
    live = {}
    best = {}
    # Tarjan emits sinks first, so successors are settled before predecessors.
    for ci, comp in enumerate(comps):
        has_accept = any(s in automaton.accepts for s in comp)
        live[ci] = has_accept or any(live[c] for c in succ[ci])
        reach = [best[c] for c in succ[ci] if live[c]]
        own = rates[ci] if live[ci] else 0.0
        best[ci] = max([own] + reach)
    state_rates = {s: best[comp_of[s]] for s in automaton.states}

    counts = count_accepted(automaton, probe_length)
    estimate = counts[-1] / counts[-2] if counts[-2] else float("nan")
    return SccGrowth(tuple(comps), rates, state_rates, state_rates[automaton.start], estimate)


def _dot_id(state):
    return json.dumps(str(state))


def _label(sym):
    if isinstance(sym, int):
        return str(sym)
    return {"a": "a", "A": "a^-1", "t": "t", "T": "t^-1"}.get(sym, str(sym))


def to_dot(automaton):
    """Graphviz source; start gets an entry arrow, accept states are double circles."""
    lines = [f"digraph {json.dumps(automaton.name or 'automaton')} {{", "  rankdir=LR;"]
    lines.append('  __start [shape=point, label=""];')
    for s in automaton.states:
        shape = "doublecircle" if s in automaton.accepts else "circle"
        lines.append(f"  {_dot_id(s)} [shape={shape}];")
    lines.append(f"  __start -> {_dot_id(automaton.start)};")
    grouped = {}
    for src, sym, dst in automaton.edges:
        grouped.setdefault((src, dst), []).append(_label(sym))
    for (src, dst), labels in grouped.items():
        lines.append(f"  {_dot_id(src)} -> {_dot_id(dst)} [label={json.dumps(', '.join(labels))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(automaton):
    return {
        "name": automaton.name,
        "states": [str(s) for s in automaton.states],
        "start": str(automaton.start),
        "accepts": [str(s) for s in automaton.states if s in automaton.accepts],
        "edges": [[str(src), sym, str(dst)] for src, sym, dst in automaton.edges],
        "alphabet": list(automaton.alphabet),
    }


def from_json(data):
    return Automaton(
        tuple(data["states"]),
        data["start"],
        frozenset(data["accepts"]),
        tuple((src, sym, dst) for src, sym, dst in data["edges"]),
        tuple(data["alphabet"]),
        data.get("name", ""),
    )
