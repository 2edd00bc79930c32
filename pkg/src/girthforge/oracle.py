"""Independent girth oracle: breadth-first search on the lifted Tanner graph.

Used to cross-check the relation-based girth computations; shares no code
with them.  The graph is bipartite, so every edge joins consecutive BFS
levels and the shortest cycle through a root r has length 2l, where l is
the first level containing a node reached through two or more previous-
level neighbours.  Scanning every variable node as a root makes that
minimum the exact girth: a shortest cycle realizes distances along itself,
so rooting at any of its variable nodes fires the candidate at the
antipodal node, and every candidate 2l is witnessed by a closed walk of
that length, which always contains a cycle no longer than itself.
"""

from __future__ import annotations

import numpy as np
from scipy import sparse

from .model import BinaryParityCheck


def girth_oracle(H: BinaryParityCheck, batch_size: int = 256,
                 depth_limit: int | None = None) -> int | None:
    """Exact girth of the bipartite Tanner graph of H, or None when acyclic.

    Runs a BFS from every variable node; roots are processed in batches as
    frontier/adjacency products.  BFS depth is pruned once it can no longer
    improve the best cycle found so far.  With depth_limit set, each BFS
    stops after that many levels, so None then means only that no cycle of
    length <= 2*depth_limit exists (useful on huge-diameter graphs).
    """
    if H.row_count == 0 or H.col_count == 0 or not H.support:
        return None
    rows, cols = H.position_arrays()
    n_checks, n_vars = H.row_count, H.col_count
    n_nodes = n_checks + n_vars
    check_ids = rows
    var_ids = n_checks + cols
    adj = sparse.csr_array(
        (
            np.ones(2 * len(rows), dtype=np.int32),
            (
                np.concatenate([check_ids, var_ids]),
                np.concatenate([var_ids, check_ids]),
            ),
        ),
        shape=(n_nodes, n_nodes),
    )

    best: int | None = None
    roots = np.arange(n_vars) + n_checks
    for start in range(0, n_vars, batch_size):
        batch = roots[start : start + batch_size]
        frontier = np.zeros((batch.size, n_nodes), dtype=np.int32)
        frontier[np.arange(batch.size), batch] = 1
        visited = frontier.astype(bool)
        level = 0
        while frontier.any():
            level += 1
            if best is not None and 2 * level >= best:
                break
            if depth_limit is not None and level > depth_limit:
                break
            counts = (adj @ frontier.T).T
            newly = (counts > 0) & ~visited
            if ((counts >= 2) & newly).any():
                best = 2 * level
                if best == 4:
                    return 4
            visited |= newly
            frontier = newly.astype(np.int32)
    return best
