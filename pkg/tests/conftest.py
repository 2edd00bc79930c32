"""Shared fixtures and independent reference implementations used as test oracles."""

from __future__ import annotations

from collections import deque

import numpy as np
import pytest

from girthforge.model import ExponentMatrix
from girthforge.search import SearchConfig, SmcSpec, greedy_search, smc_expand

# the worked 3x6 girth-12 design: base (0,1,29), multipliers (3,7,67,144), N=271
EXAMPLE1_BASE = (0, 1, 29)
EXAMPLE1_GAMMAS = (3, 7, 67, 144)
EXAMPLE1_N = 271


@pytest.fixture(scope="session")
def example1_matrix() -> ExponentMatrix:
    return smc_expand(SmcSpec(EXAMPLE1_BASE, EXAMPLE1_GAMMAS, EXAMPLE1_N))


@pytest.fixture(scope="session")
def girth12_search_outcome():
    """The girth-12 search at N=271; shared because it takes around 10 s."""
    return greedy_search(SearchConfig.for_girth(3, 6, EXAMPLE1_N, 12))


def walk_relations(m: int, ncols: int, k: int) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Independent relation enumerator: explicit closed-walk generation.

    Walks the grid column-by-column, enforcing the adjacent-distinct
    constraints step by step (cyclically for both index sequences), then
    dedupes orbits by the minimum over all rotations and both directions
    of the interleaved word.  Returns canonical (cols, rows) pairs.
    """
    found = set()

    def canon(cols: tuple[int, ...], rows: tuple[int, ...]):
        best = None
        for rev in (False, True):
            if rev:
                rr = tuple(reversed(rows))
                cc = (cols[0],) + tuple(reversed(cols[1:]))
            else:
                rr, cc = rows, cols
            for r in range(k):
                rrot = rr[r:] + rr[:r]
                crot = cc[r:] + cc[:r]
                word = tuple(v for pair in zip(crot, rrot) for v in pair)
                if best is None or word < best:
                    best, keep = word, (crot, rrot)
        return keep

    def extend(cols: list[int], rows: list[int]):
        if len(rows) == k:
            if rows[-1] != rows[0] and cols[-1] != cols[0]:
                found.add(canon(tuple(cols), tuple(rows)))
            return
        for nxt_col in range(ncols):
            if cols and nxt_col == cols[-1]:
                continue
            for nxt_row in range(m):
                if rows and nxt_row == rows[-1]:
                    continue
                extend(cols + [nxt_col], rows + [nxt_row])

    for c0 in range(ncols):
        for r0 in range(m):
            extend([c0], [r0])
    return found


def reference_girth(H) -> int | None:
    """Plain BFS-per-root girth with explicit parent-edge tracking; None if acyclic."""
    n_nodes = H.row_count + H.col_count
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n_nodes)]
    for e, (r, c) in enumerate(sorted(H.support)):
        v = H.row_count + c
        adj[r].append((v, e))
        adj[v].append((r, e))
    best = None
    for root in range(H.row_count, n_nodes):
        dist = {root: 0}
        parent_edge = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for v, e in adj[u]:
                if e == parent_edge[u]:
                    continue
                if v in dist:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
                else:
                    dist[v] = dist[u] + 1
                    parent_edge[v] = e
                    queue.append(v)
    return best


def random_qc_matrix(rng: np.random.Generator, max_m=4, max_n=6, max_N=40) -> ExponentMatrix:
    m = int(rng.integers(2, max_m + 1))
    n = int(rng.integers(2, max_n + 1))
    N = int(rng.integers(2, max_N + 1))
    return ExponentMatrix(rng.integers(0, N, size=(m, n)), N)
