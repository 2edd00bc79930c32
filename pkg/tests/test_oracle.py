"""BFS girth oracle on the lifted Tanner graph."""

import numpy as np

from girthforge.model import BinaryParityCheck, expand_to_binary
from girthforge.oracle import girth_oracle

from conftest import random_qc_matrix, reference_girth


def test_identity_matrix_is_acyclic():
    H = BinaryParityCheck.from_dense(np.eye(3, dtype=int))
    assert girth_oracle(H) is None


def test_all_ones_two_by_two_has_girth_four():
    H = BinaryParityCheck.from_dense(np.ones((2, 2), dtype=int))
    assert girth_oracle(H) == 4


def test_example_design_lifted_girth_is_twelve(example1_matrix):
    assert girth_oracle(expand_to_binary(example1_matrix)) == 12


def test_path_graph_is_acyclic():
    dense = np.zeros((2, 3), dtype=int)
    dense[0, 0] = dense[0, 1] = dense[1, 1] = dense[1, 2] = 1
    assert girth_oracle(BinaryParityCheck.from_dense(dense)) is None


def test_six_cycle():
    dense = np.zeros((3, 3), dtype=int)
    for i in range(3):
        dense[i, i] = dense[i, (i + 1) % 3] = 1
    assert girth_oracle(BinaryParityCheck.from_dense(dense)) == 6


def test_matches_reference_bfs_on_random_sparse_matrices():
    rng = np.random.default_rng(77)
    for _ in range(60):
        rows = int(rng.integers(2, 8))
        cols = int(rng.integers(2, 10))
        dense = (rng.random((rows, cols)) < 0.35).astype(np.uint8)
        H = BinaryParityCheck.from_dense(dense)
        if not H.support:
            continue
        assert girth_oracle(H) == reference_girth(H)


def test_matches_reference_on_random_lifted_codes():
    rng = np.random.default_rng(13)
    for _ in range(25):
        P = random_qc_matrix(rng, max_m=3, max_n=4, max_N=12)
        H = expand_to_binary(P)
        assert girth_oracle(H) == reference_girth(H)
