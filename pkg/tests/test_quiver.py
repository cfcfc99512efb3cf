import itertools
import random
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiveralg import (
    Quiver,
    adjacency_matrix,
    conjugacy_permutations,
    conjugate,
    invert_permutation,
    path_count,
    permutation_matrix,
    relabel,
)
from quiveralg.quiver import enumerate_paths

from conftest import c_quiver, random_quiver


def one_arrow():
    return Quiver(["1", "2"], [("a", "1", "2")])


def test_quiver_validation():
    with pytest.raises(ValueError):
        Quiver([], [])
    with pytest.raises(ValueError):
        Quiver(["u", "u"], [])
    with pytest.raises(ValueError):
        Quiver(["u"], [("a", "u", "w")])
    with pytest.raises(ValueError):
        Quiver(["u"], [("a", "u", "u"), ("a", "u", "u")])


@pytest.mark.parametrize(
    "Q, expected",
    [
        (Quiver(["o"], [("a", "o", "o"), ("b", "o", "o")]), [[2]]),
        (c_quiver(), [[1, 1], [1, 1]]),
        (one_arrow(), [[0, 1], [0, 0]]),
    ],
)
def test_adjacency_examples(Q, expected):
    assert adjacency_matrix(Q).tolist() == expected


def test_path_count_examples():
    loops = Quiver(["o"], [("a", "o", "o"), ("b", "o", "o")])
    assert path_count(loops, "o", "o", 3) == 8
    # length-2 paths u -> u in the C-quiver: a*a and d*c
    assert path_count(c_quiver(), "u", "u", 2) == 2
    assert len(enumerate_paths(c_quiver(), 2, 0, 0)) == 2
    assert path_count(one_arrow(), "2", "1", 1) == 0
    with pytest.raises(ValueError):
        path_count(one_arrow(), "3", "1", 1)


def test_path_count_matches_enumeration():
    rng = random.Random(7)
    for _ in range(30):
        Q = random_quiver(rng)
        for ell in range(5):
            counts = Counter((Q.src[s[0]], Q.tgt[s[-1]]) for s in enumerate_paths(Q, ell) if s)
            for u in range(Q.n):
                for v in range(Q.n):
                    want = int(u == v) if ell == 0 else counts[(u, v)]
                    assert path_count(Q, u, v, ell) == want


def test_relabel_examples():
    Q = one_arrow()
    assert relabel(Q, (0, 1)) == Q
    assert adjacency_matrix(relabel(Q, (1, 0))).tolist() == [[0, 0], [1, 0]]
    s = (1, 0)
    assert relabel(relabel(Q, s), invert_permutation(s)) == Q
    with pytest.raises(ValueError):
        relabel(Q, (0,))


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_relabel_conjugates_adjacency(r):
    Q = random_quiver(r)
    sigma = list(range(Q.n))
    r.shuffle(sigma)
    P = permutation_matrix(sigma)
    M = adjacency_matrix(Q)
    assert np.array_equal(adjacency_matrix(relabel(Q, sigma)), P @ M @ P.T)
    assert np.array_equal(conjugate(M, sigma), P @ M @ P.T)


def test_conjugacy_examples():
    assert conjugacy_permutations([[0, 1], [0, 0]], [[0, 0], [1, 0]]) == [(1, 0)]
    assert conjugacy_permutations([[2]], [[3]]) == []
    assert conjugacy_permutations([[1, 1], [1, 1]], [[1, 1], [1, 1]]) == [(0, 1), (1, 0)]
    assert conjugacy_permutations([[1]], [[1, 0], [0, 1]]) == []


def brute_conjugators(M, N):
    n = M.shape[0]
    return [s for s in itertools.permutations(range(n)) if np.array_equal(conjugate(M, s), N)]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n), min_size=n, max_size=n),
    st.permutations(range(n)),
    st.booleans(),
)))
def test_conjugacy_matches_brute_force(data):
    M, sigma, perturb = data
    M = np.array(M)
    N = conjugate(M, sigma)
    if perturb:
        N = N.copy()
        N[0, -1] += 1
    assert conjugacy_permutations(M, N) == brute_conjugators(M, N)
