from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from pagelab.residue import (
    affine_image, build_w, has_period, is_complete_residue_system, repeated_w, representative,
    window_is_crs,
)


def w_by_hand(n):
    # evaluate 1 + i*(n-1)/2 over the integers, then pick the representative in 1..n
    out = []
    for i in range(n):
        v = 1 + i * (n - 1) // 2
        while v > n:
            v -= n
        out.append(v)
    return tuple(out)


@pytest.mark.parametrize("n, expected", [
    (3, (1, 2, 3)),
    (5, (1, 3, 5, 2, 4)),
    (7, (1, 4, 7, 3, 6, 2, 5)),
])
def test_build_w_small_cases(n, expected):
    assert build_w(n) == expected


def test_build_w_tail_for_seven_is_the_disproof_target():
    assert build_w(7)[2:] == (7, 3, 6, 2, 5)


@pytest.mark.parametrize("n", range(3, 100, 2))
def test_build_w_matches_hand_evaluation_and_is_crs(n):
    w = build_w(n)
    assert w == w_by_hand(n)
    assert is_complete_residue_system(w, n)


@pytest.mark.parametrize("n", [0, 1, 2, 4, 10, -3])
def test_build_w_rejects_bad_modulus(n):
    with pytest.raises(ValueError):
        build_w(n)


def test_is_complete_residue_system():
    assert is_complete_residue_system(range(1, 8), 7)
    assert not is_complete_residue_system((1, 1, 3), 3)
    assert not is_complete_residue_system((1, 2), 3)
    assert is_complete_residue_system((0, 4, 8), 3)


def test_affine_image():
    assert affine_image((1, 2, 3, 4, 5), 1, 0, 5) == (1, 2, 3, 4, 5)
    assert affine_image((1, 2, 3, 4, 5), 2, 0, 5) == (2, 4, 1, 3, 5)
    assert affine_image((1, 2, 3), 2, 1, 3) == (3, 2, 1)
    with pytest.raises(ValueError):
        affine_image((1, 2, 3, 4), 2, 0, 4)


@given(st.integers(2, 60), st.integers(-100, 100), st.integers(-100, 100), st.randoms())
def test_affine_image_of_crs_is_crs(n, a, d, rnd):
    assume(gcd(a, n) == 1)
    crs = [r + n * rnd.randint(-5, 5) for r in range(n)]
    rnd.shuffle(crs)
    image = affine_image(crs, a, d, n)
    assert is_complete_residue_system(image, n)
    assert all(1 <= x <= n for x in image)


def test_representative():
    assert [representative(a, 5) for a in (-5, 0, 1, 5, 6, 12)] == [5, 5, 1, 5, 1, 2]


@pytest.mark.parametrize("n, k, start", [(7, 3, 1), (7, 3, 5), (5, 2, 6)])
def test_window_examples(n, k, start):
    assert window_is_crs(n, k, start)


def test_window_out_of_range():
    with pytest.raises(IndexError):
        window_is_crs(5, 2, 7)
    with pytest.raises(IndexError):
        window_is_crs(5, 2, 0)


@pytest.mark.parametrize("n", range(3, 32, 2))
def test_every_window_of_repeated_w(n):
    for k in range(1, 5):
        for start in range(1, k * n - n + 2):
            assert window_is_crs(n, k, start)
        assert has_period(repeated_w(n, k), n)
