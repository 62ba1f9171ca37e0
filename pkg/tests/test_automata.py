import itertools
import json
import math

import networkx as nx
import pytest

from bsgrowth.automata import (
    AlphabetError,
    Automaton,
    accepted_strings,
    accepts,
    build_Dn,
    build_Dn_prime,
    count_accepted,
    expand_to_On,
    from_json,
    scc_growth,
    strongly_connected_components,
    to_dot,
    to_json,
    trim,
)
from bsgrowth.growth import smallest_root, theorem_polynomial


def test_Dn_examples():
    d2 = build_Dn(2)
    assert accepts(d2, (1, 0, 1))
    assert not accepts(d2, (1, 1))
    d3 = build_Dn(3)
    assert not accepts(d3, (1, -1, 1, 0))
    assert accepts(d3, (1, -1, 1))
    assert len(build_Dn(3).states) == 2
    d4 = build_Dn(4)
    assert len(d4.states) == 4
    assert set(d4.states) - d4.accepts == {"s3"}


def test_Dn_prime_examples():
    assert accepts(build_Dn_prime(4), ())
    assert not accepts(build_Dn_prime(4), (2, 2))
    assert accepts(build_Dn_prime(4), (2, 1, 0, 0))
    assert len(build_Dn_prime(5).states) == 1
    assert len(build_Dn_prime(6).states) == 3


@pytest.mark.parametrize("n", range(2, 9))
def test_Dn_inside_Dn_prime(n):
    d, dp = build_Dn(n), build_Dn_prime(n)
    alphabet = d.alphabet
    for length in range(5 if n > 5 else 7):
        for s in itertools.product(alphabet, repeat=length):
            if accepts(d, s):
                assert accepts(dp, s)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_Dn_matches_forbidden_pairs(n):
    # Even n: no adjacent (d n/2, d n/2) or (d n/2, b) with sign(b) = -d, no final 0.
    alpha = n // 2
    d = build_Dn(n)
    for length in range(5):
        for s in itertools.product(d.alphabet, repeat=length):
            bad = any(
                abs(a) == alpha and (b == a or (b != 0 and (b > 0) != (a > 0))) for a, b in zip(s, s[1:])
            )
            want = not bad and (length == 0 or s[-1] != 0)
            assert accepts(d, s) == want, s


def test_alphabet_error():
    with pytest.raises(AlphabetError):
        accepts(expand_to_On(2), "ab")
    with pytest.raises(AlphabetError):
        accepts(build_Dn(3), (2,))


def test_On_two_structure():
    o2 = expand_to_On(2)
    assert set(o2.states) == {"start", "s_t-1", "s0,0", "s0,1", "s0,-1", "s1,0", "s2,0"}
    assert o2.accepts == {"s0,0", "s1,0", "s2,0"}
    assert accepts(o2, "at")
    assert not accepts(o2, "a")
    assert not accepts(o2, "Tt")
    assert not accepts(o2, "")


def test_deterministic_construction_rejected():
    with pytest.raises(ValueError):
        Automaton(("p",), "p", frozenset(), (("p", "a", "p"), ("p", "a", "p")), ("a",))


def test_trim_drops_dead_and_unreachable():
    a = Automaton(
        ("p", "q", "dead", "island"),
        "p",
        frozenset({"q"}),
        (("p", "a", "q"), ("p", "b", "dead"), ("island", "a", "q")),
        ("a", "b"),
    )
    assert set(trim(a).states) == {"p", "q"}


def test_count_examples():
    o2 = expand_to_On(2)
    assert count_accepted(o2, 2) == [0, 1, 3]
    assert sorted(accepted_strings(o2, 2)) == sorted(["tt", "at", "At"])
    d3 = build_Dn(3)
    counts = count_accepted(d3, 6)
    assert counts[3] == 18
    assert counts[1:] == [2 * 3 ** (N - 1) for N in range(1, 7)]
    with pytest.raises(ValueError):
        count_accepted(d3, -1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_count_matches_enumeration(n):
    o = expand_to_On(n)
    counts = count_accepted(o, 7)
    for N in range(8):
        brute = sum(accepts(o, "".join(w)) for w in itertools.product("aAtT", repeat=N))
        assert counts[N] == brute == len(accepted_strings(o, N))


@pytest.mark.parametrize("n", range(2, 9))
def test_counts_monotone(n):
    counts = count_accepted(expand_to_On(n), 60)
    assert all(b >= a for a, b in zip(counts[1:], counts[2:]))
    assert counts[60] > 2**40  # arbitrary precision, no overflow games


@pytest.mark.parametrize("n", range(2, 9))
def test_scc_against_networkx(n):
    o = expand_to_On(n)
    g = nx.DiGraph()
    g.add_nodes_from(o.states)
    g.add_edges_from((s, d) for s, _, d in o.edges)
    ours = {frozenset(c) for c in strongly_connected_components(o)}
    theirs = {frozenset(c) for c in nx.strongly_connected_components(g)}
    assert ours == theirs


def test_scc_growth_examples():
    loop = Automaton(("p",), "p", frozenset({"p"}), (("p", "a", "p"),), ("a",))
    assert scc_growth(loop).rate == pytest.approx(1.0)
    limit = Automaton(
        ("x", "y", "z"),
        "x",
        frozenset({"x", "y", "z"}),
        (("x", "a", "x"), ("x", "b", "y"), ("x", "c", "z"), ("y", "a", "x"), ("y", "b", "y"),
         ("z", "a", "x"), ("z", "c", "z")),
        ("a", "b", "c"),
    )
    assert scc_growth(limit).rate == pytest.approx(math.sqrt(2) + 1, abs=1e-6)
    g2 = scc_growth(expand_to_On(2))
    assert g2.count_estimate == pytest.approx(1.69562, abs=1e-2)


@pytest.mark.parametrize("n", range(2, 9))
def test_scc_rate_matches_polynomial(n):
    g = scc_growth(expand_to_On(n), probe_length=40)
    rate = 1 / smallest_root(theorem_polynomial(n))
    assert abs(g.rate - rate) < 1e-9
    assert abs(g.count_estimate - rate) < 1e-2


def test_dot_export():
    dot = to_dot(build_Dn(2))
    nodes = [line for line in dot.splitlines() if "shape=circle" in line or "shape=doublecircle" in line]
    assert len(nodes) == 4
    assert dot.count("doublecircle") == 3
    assert "__start ->" in dot
    assert to_dot(expand_to_On(2)) == to_dot(expand_to_On(2))
    o2 = to_dot(expand_to_On(2))
    assert sum(1 for line in o2.splitlines() if "shape=" in line and "point" not in line) == 7


@pytest.mark.parametrize("build", [build_Dn, build_Dn_prime, expand_to_On])
def test_json_round_trip(build):
    a = build(4)
    data = json.loads(json.dumps(to_json(a)))
    assert set(data) >= {"states", "start", "accepts", "edges"}
    b = from_json(data)
    assert to_json(b) == to_json(a)
    if a.alphabet == ("a", "A", "t", "T"):
        for word in ("at", "Tatt", "AtaT", "ttt"):
            assert accepts(a, word) == accepts(b, word)
