import pytest

from bsgrowth.verify import (
    brute_force_language,
    check_clamp_degree,
    check_geodesics,
    check_language,
    check_sandwich,
    is_strict1_geodesic_word,
)
from bsgrowth.geodesic import minimal_vector
from bsgrowth.group import CayleyBall, GroupElement
from bsgrowth.lattice import DigitVector
from bsgrowth.kernels import all_words, decode_words, evaluate_words


def test_checks_pass_small():
    for n in (2, 3, 4):
        assert check_geodesics(n, 6).passed
        assert check_sandwich(n, 8).passed
        assert check_clamp_degree(n, 5).passed
    assert check_language(2, 7).passed
    assert check_language(3, 6).passed


def test_template_words_are_a_superset():
    # Geodesic words that merely fit the strict-shape-1 template are not all
    # renderings of minimal vectors: "aat" uses digit 2 > n // 2 for n = 3, and
    # for n = 2 "atat" renders (1, 1), which ties with (-1, 0, 1) but loses the
    # |digit| order; the winner has k = w, so no strict word for this element.
    assert CayleyBall(3).distance((0, 2, 1)) == 3
    assert not is_strict1_geodesic_word("aat", 3, 3)
    assert CayleyBall(2).distance((0, 3, 2)) == 4
    assert not is_strict1_geodesic_word("atat", 2, 4)
    assert minimal_vector(GroupElement(0, 3, 2), 2) == DigitVector((-1, 0, 1))


@pytest.mark.parametrize("n", [2, 3])
def test_template_superset_counts(n):
    import re

    template = re.compile(r"^T*(?:(?:a*|A*)t)+$")
    length = 5
    ball = CayleyBall(n).expand_to(length)
    codes = all_words(length)
    triples = evaluate_words(codes, n)
    words = decode_words(codes)
    geodesic_template = {
        w for w, (u, v, x) in zip(words, triples.tolist())
        if ball.distances.get((u, v, x)) == length and template.match(w)
    }
    language = brute_force_language(n, length, ball)
    assert language < geodesic_template
