"""GF(2) core: rank against an independent span-counting oracle, shift
operators against the explicit matrix form."""

import itertools
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ldcell.gf2core import (identity, mat_mul, rank, reverse_levels,
                            shift_apply, shift_generator, shift_matrix)


def span_size_rank(m: np.ndarray) -> int:
    """Independent rank oracle: the column span of a GF(2) matrix has
    exactly 2^rank elements, so count them."""
    cols = [tuple(m[:, j]) for j in range(m.shape[1])]
    span = {tuple([0] * m.shape[0])}
    for c in cols:
        span |= {tuple(a ^ b for a, b in zip(v, c)) for v in span}
    return len(span).bit_length() - 1


def test_rank_matches_span_oracle():
    rng = random.Random(71)
    for _ in range(120):
        rows = rng.randint(0, 6)
        cols = rng.randint(0, 6)
        m = np.array([[rng.randint(0, 1) for _ in range(cols)]
                      for _ in range(rows)], dtype=np.uint8).reshape(rows, cols)
        assert rank(m) == span_size_rank(m)


def test_rank_bounds_and_permutation_invariance():
    rng = random.Random(72)
    for _ in range(60):
        m = np.array([[rng.randint(0, 1) for _ in range(5)]
                      for _ in range(5)], dtype=np.uint8)
        r = rank(m)
        assert r <= 5
        assert rank(reverse_levels(m)) == r
        assert rank(np.hstack([m, m])) == r
        b = np.array([[rng.randint(0, 1) for _ in range(3)]
                      for _ in range(5)], dtype=np.uint8)
        assert rank(np.hstack([m, b])) <= r + rank(b)


def test_rank_empty():
    assert rank(np.zeros((0, 0), dtype=np.uint8)) == 0
    assert rank(np.zeros((4, 0), dtype=np.uint8)) == 0
    assert rank(np.zeros((0, 4), dtype=np.uint8)) == 0


def test_identity_and_shift_matrix_shape():
    assert np.array_equal(shift_matrix(3, 0), identity(3))
    # one-step down shift for q=3: ones on the first subdiagonal
    s1 = shift_matrix(3, 1)
    assert np.array_equal(s1, np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0]],
                                       dtype=np.uint8))
    assert not shift_matrix(4, 4).any()


@given(st.integers(0, 8).flatmap(
    lambda q: st.tuples(st.just(q), st.integers(0, q),
                        st.lists(st.integers(0, 1), min_size=q, max_size=q))))
def test_shift_apply_equals_matrix_form(args):
    q, n, bits = args
    x = tuple(bits)
    via_matrix = mat_mul(shift_matrix(q, q - n),
                         np.array(x, dtype=np.uint8).reshape(q, 1))
    assert shift_apply(q, n, x) == tuple(int(v) for v in via_matrix[:, 0])


def test_shift_apply_examples():
    assert shift_apply(3, 0, (1, 1, 1)) == (0, 0, 0)
    assert shift_apply(5, 3, (1, 0, 1, 1, 0)) == (0, 0, 1, 0, 1)
    assert shift_apply(4, 4, (1, 0, 1, 0)) == (1, 0, 1, 0)
    with pytest.raises(ValueError):
        shift_apply(3, 2, (1, 0))  # wrong length
    with pytest.raises(ValueError):
        shift_apply(3, 4, (1, 0, 0))  # gain above ambient size


def test_shift_generator_matches_matrix_product():
    rng = random.Random(73)
    for _ in range(40):
        q = rng.randint(1, 8)
        n = rng.randint(0, q)
        g = np.array([[rng.randint(0, 1) for _ in range(3)]
                      for _ in range(q)], dtype=np.uint8)
        assert np.array_equal(shift_generator(q, n, g),
                              mat_mul(shift_matrix(q, q - n), g))


def test_reverse_levels():
    col = np.array([[1], [0], [0]], dtype=np.uint8)
    assert np.array_equal(reverse_levels(col),
                          np.array([[0], [0], [1]], dtype=np.uint8))
    m = np.array([[1, 0], [0, 1]], dtype=np.uint8)
    assert np.array_equal(reverse_levels(m),
                          np.array([[0, 1], [1, 0]], dtype=np.uint8))
    r = np.array([[1, 1, 0], [0, 1, 0], [1, 0, 1]], dtype=np.uint8)
    assert np.array_equal(reverse_levels(reverse_levels(r)), r)


def test_mat_mul_associative_small():
    rng = random.Random(74)
    for _ in range(200):
        i, j, k, l = (rng.randint(1, 4) for _ in range(4))
        a = np.array([[rng.randint(0, 1) for _ in range(j)]
                      for _ in range(i)], dtype=np.uint8)
        b = np.array([[rng.randint(0, 1) for _ in range(k)]
                      for _ in range(j)], dtype=np.uint8)
        c = np.array([[rng.randint(0, 1) for _ in range(l)]
                      for _ in range(k)], dtype=np.uint8)
        assert np.array_equal(mat_mul(mat_mul(a, b), c),
                              mat_mul(a, mat_mul(b, c)))


def test_mat_mul_shape_error():
    a = np.zeros((2, 3), dtype=np.uint8)
    b = np.zeros((2, 3), dtype=np.uint8)
    with pytest.raises(ValueError):
        mat_mul(a, b)
