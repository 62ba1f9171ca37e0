import pytest

from bsgrowth.geodesic import is_minimal, minimal_vector, minimal_vector_for, path_length
from bsgrowth.group import CayleyBall, GroupElement
from bsgrowth.lattice import BoxParams, DigitVector, l1_norm, sigma
from bsgrowth.shape_map import (
    _loose_box,
    _viable_preimages,
    beta,
    c_map,
    candidate_preimages,
    clamp_degree_bound,
    condition_a,
    phi,
    preimage_count,
    preimages_exhaustive,
    tail_start,
)


def minimal_triples(n, vmax, uwmax):
    for v in range(-vmax, vmax + 1):
        for u in range(uwmax + 1):
            for w in range(uwmax + 1):
                if u and w and v % n == 0:
                    continue
                yield u, v, w, minimal_vector_for(u, v, w, n)


def test_c_map_examples():
    assert c_map(DigitVector((3,)), BoxParams(0, 0, 2)) == DigitVector((-1, 0, 1))
    assert c_map(DigitVector((2,)), BoxParams(0, 0, 3)) == DigitVector((-1, 1))
    assert c_map(DigitVector((1,)), BoxParams(0, 0, 4)) == DigitVector((1,))
    # A single final digit n/2 is left alone.
    assert c_map(DigitVector((1, 2)), BoxParams(0, 5, 4)) == DigitVector((1, 2))


def test_tail_start_uses_exact_half():
    # n = 5: digits of size 2 are below n/2 = 2.5 and do not start the tail.
    assert tail_start(DigitVector((2, 3)), 5) == 1
    assert tail_start(DigitVector((2, 2)), 5) is None
    assert tail_start(DigitVector((1, 2, 2)), 4) == 1


def test_condition_a():
    assert condition_a(DigitVector((3,)), 2)
    assert condition_a(DigitVector((1, 2)), 2)
    assert not condition_a(DigitVector((0, 2)), 2)
    assert not condition_a(DigitVector((2, 2)), 4)


def test_beta_examples():
    assert beta(DigitVector((1,)), BoxParams(0, 0, 4)) == 3
    assert beta(DigitVector((3,)), BoxParams(0, 0, 2)) == 4
    assert beta(DigitVector((2,)), BoxParams(0, 0, 3)) == 3


def test_phi_examples():
    r = phi(1, 4, DigitVector((1, -1)), 3)
    assert (r.u, r.w, r.x) == (1, 7, DigitVector((1, -1)))
    r = phi(0, 1, DigitVector((0, 0, 1)), 2)
    assert (r.u, r.w, r.x) == (0, 6, DigitVector((0, 0, 1)))
    assert path_length(r.x, r.u, r.w) == 7
    r = phi(3, 0, DigitVector((0, 1)), 3)
    assert (r.u, r.w, r.x) == (0, 6, DigitVector((0, 1)))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_c_map_properties(n):
    for u, v, w, x in minimal_triples(n, 150, 3):
        box = BoxParams(u, w, n)
        cx = c_map(x, box)
        assert sigma(cx, n) == v
        assert l1_norm(cx) <= l1_norm(x)
        kx, kc = x.k or 0, cx.k or 0
        assert kc - kx in ((2,) if condition_a(x, n) else (0, 1))
        j = tail_start(x, n)
        if j is not None:
            assert cx.digits[:j] == x.digits[:j]
        if n % 2:
            assert beta(x, box) == 3


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_phi_length_identity_and_strictness(n):
    for u, v, w, x in minimal_triples(n, 150, 4):
        r = phi(u, w, x, n)
        assert r.strict1
        assert path_length(r.x, r.u, r.w) == path_length(x, u, w) + 3


@pytest.mark.parametrize("n", [3, 4, 5])
def test_phi_image_is_minimal(n):
    for u, v, w, x in minimal_triples(n, 100, 3):
        r = phi(u, w, x, n)
        assert is_minimal(r.x, r.u, r.w, n)


def test_phi_image_not_minimal_for_two_tail_n2():
    # a^5 in BS(1, 2): (1, 2) is minimal and ends (d, 2d), so the extended
    # rewrite applies.  The image (-1, -1, 0, 1) with w' = 5 has length 8,
    # but t^0 a^5 t^5 is only 7 letters from the identity.
    x = minimal_vector(GroupElement(0, 5, 0), 2)
    assert x == DigitVector((1, 2))
    r = phi(0, 0, x, 2)
    assert (r.u, r.w, r.x) == (0, 5, DigitVector((-1, -1, 0, 1)))
    assert path_length(r.x, r.u, r.w) == 8
    assert CayleyBall(2).distance(GroupElement(0, 5, 5)) == 7
    assert not is_minimal(r.x, r.u, r.w, 2)


def test_candidate_preimages_contains_identity_first():
    y = DigitVector((1, -1, 1))
    assert candidate_preimages(y, 3)[0] == y
    assert candidate_preimages(DigitVector(), 3) == [DigitVector()]


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_viable_preimages_prune_only_out_of_box(n):
    import itertools

    alpha = n // 2
    for digits in itertools.product(range(-alpha, alpha + 1), repeat=4):
        y = DigitVector(digits + (1,))
        want = {x for x in candidate_preimages(y, n) if _loose_box(x, n)}
        assert set(_viable_preimages(y, n)) == want


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_preimage_count_against_exhaustive_search(n):
    import itertools

    alpha = n // 2
    length = 4 if n < 4 else 3
    most = 0
    for digits in itertools.product(range(-alpha, alpha + 1), repeat=length):
        y = DigitVector(digits)
        box = BoxParams(0, length + 1, n)
        if not is_minimal(y, 0, length + 1, n):
            continue
        count = preimage_count(y, box)
        assert count == len(preimages_exhaustive(y, n))
        most = max(most, count)
    assert most >= 2


def test_preimage_count_trivial_case():
    y = DigitVector((1, 0, 1))
    assert preimage_count(y, BoxParams(0, 5, 3)) == 1


def test_clamp_degree_bounds():
    assert [clamp_degree_bound(n) for n in (2, 3, 4, 5, 6)] == [5, 2, 3, 2, 3]
