"""Syndrome-former memory minimization for girth-certified exponent matrices.

A convolutional reading of a QC design may replace each exponent p by any
congruent value p + t*N without touching the mod-N girth; the memory order
m_h is the spread (max - min) of the chosen representatives.  This module
searches the offsets t for a small spread subject to keeping every
relation sum exactly non-zero, standing in for an external min-max integer
program: a feasibility-gated descent on the extreme entries with seeded
random restarts, plus an exhaustive small-instance mode used as an
optimality oracle in tests.  Results are always re-certifiable: any
returned assignment keeps all relation sums of length up to 2k non-zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cycles import RelationSet, girth_qc
from .model import ConvCodeSpec, ExponentMatrix


@dataclass(frozen=True)
class LiftAssignment:
    """Offsets t_ij >= 0 lifting a mod-N design to unreduced exponents q = p + t*N."""

    base: ExponentMatrix
    offsets: np.ndarray

    def __post_init__(self):
        off = np.array(self.offsets, dtype=np.int64)
        if off.shape != self.base.entries.shape:
            raise ValueError("offset grid must match the exponent grid")
        if (off < 0).any():
            raise ValueError("offsets must be non-negative")
        off.flags.writeable = False
        object.__setattr__(self, "offsets", off)
        if self.base.lifting_degree is None:
            raise ValueError("lift assignments need a base with a lifting degree")

    @property
    def entries(self) -> np.ndarray:
        return self.base.entries + self.offsets * self.base.lifting_degree

    @property
    def memory_order(self) -> int:
        q = self.entries
        return int(q.max() - q.min())

    def conv_spec(self) -> ConvCodeSpec:
        return ConvCodeSpec(self.entries, self.base.lifting_degree)


def memory_order(spec: ConvCodeSpec) -> int:
    """m_h: largest absolute pairwise difference of the exponents."""
    return spec.memory_order


@lru_cache(maxsize=None)
def _incidence_matrix(m: int, n: int, max_half_length: int) -> np.ndarray:
    """Signed incidence of every relation on the flattened m*n grid.

    Relation sums over exponents q are C @ q.ravel(); the rows stack all
    half-lengths 2..max_half_length.
    """
    relset = RelationSet(m, range(n), max_half_length)
    blocks = []
    for k in range(2, max_half_length + 1):
        rows, cols = relset.arrays(k)
        count = rows.shape[0]
        if not count:
            continue
        block = np.zeros((count, m * n), dtype=np.int16)
        idx = np.repeat(np.arange(count), k)
        np.add.at(block, (idx, (rows * n + cols).ravel()), 1)
        np.add.at(block, (idx, (rows * n + np.roll(cols, -1, axis=1)).ravel()), -1)
        blocks.append(block)
    if not blocks:
        return np.zeros((0, m * n), dtype=np.int16)
    out = np.concatenate(blocks, axis=0)
    out.flags.writeable = False
    return out


def _require_certified(P: ExponentMatrix, k: int) -> None:
    if P.lifting_degree is None:
        raise ValueError("memory minimization needs a QC design with a lifting degree")
    report = girth_qc(P, max_half_length=k)
    if report.girth is not None:
        raise ValueError(
            f"input not girth-certified: found a cycle of length {report.girth} "
            f"(need none up to {2 * k})"
        )


def _normalized_offsets(P: ExponentMatrix, q: np.ndarray) -> LiftAssignment:
    N = P.lifting_degree
    q = q - N * (q.min() // N)  # shift by whole periods so the minimum lands in [0, N)
    return LiftAssignment(P, (q - P.entries) // N)


def minimize_memory(P: ExponentMatrix, k: int, budget: int = 4000,
                    seed: int = 0) -> LiftAssignment:
    """Search exponent representatives with small spread and no exactly-zero relation sum.

    Feasibility-gated walk: each step moves one extreme entry (max down or
    min up by N) if that keeps every relation sum of half-length <= k
    non-zero; the best feasible state seen is kept.  When stuck or stalled
    the walk restarts from the trivial lift unrolled at a random cut.  The
    input must be girth-certified mod N (no cycles up to length 2k), which
    makes the trivial lift itself feasible, so the result is never worse
    than spread(P) <= N-1.
    """
    _require_certified(P, k)
    N = P.lifting_degree
    m, n = P.m, P.n
    C = _incidence_matrix(m, n, k).astype(np.int64)
    p = P.entries.ravel().astype(np.int64)
    rng = np.random.default_rng(seed)

    def feasible(sums: np.ndarray) -> bool:
        return C.shape[0] == 0 or not (sums == 0).any()

    q = p.copy()
    sums = C @ q
    best_q, best_spread = q.copy(), int(q.max() - q.min())
    stall, stall_limit = 0, 4 * m * n + 16

    for _ in range(max(0, budget)):
        spread = int(q.max() - q.min())
        if best_spread == 0:
            break
        moves = [(e, -N) for e in np.flatnonzero(q == q.max())]
        moves += [(e, +N) for e in np.flatnonzero(q == q.min())]
        rng.shuffle(moves)
        moved = False
        for e, delta in moves:
            trial = sums + C[:, e] * delta
            if not feasible(trial):
                continue
            q[e] += delta
            sums = trial
            moved = True
            spread = int(q.max() - q.min())
            if spread < best_spread:
                best_spread, best_q = spread, q.copy()
                stall = 0
            else:
                stall += 1
            break
        if not moved or stall > stall_limit:
            cut = int(rng.integers(0, N))
            q = p + N * (p < cut)
            sums = C @ q
            if not feasible(sums):
                q = p.copy()
                sums = C @ q
            stall = 0
            spread = int(q.max() - q.min())
            if spread < best_spread:
                best_spread, best_q = spread, q.copy()

    return _normalized_offsets(P, best_q.reshape(m, n))


def minimize_memory_exact(P: ExponentMatrix, k: int) -> LiftAssignment:
    """Exhaustive offsets t in {0, 1, 2} per entry; optimality oracle for small grids.

    Any feasible spread below N fits in a single period window, and every
    such window is reachable with offsets in {0, 1} up to a global shift,
    so the {0, 1, 2} grid always contains an optimal assignment.
    """
    _require_certified(P, k)
    m, n = P.m, P.n
    cells = m * n
    if cells > 12:
        raise ValueError("exact mode is limited to m*n <= 12")
    N = P.lifting_degree
    C = _incidence_matrix(m, n, k).astype(np.int64)
    p = P.entries.ravel().astype(np.int64)

    best_q, best_spread = p.copy(), int(p.max() - p.min())
    total = 3**cells
    radix = 3 ** np.arange(cells, dtype=np.int64)
    chunk = 1 << 14
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        T = (codes[:, None] // radix[None, :]) % 3
        Q = p[None, :] + N * T
        spreads = Q.max(axis=1) - Q.min(axis=1)
        better = np.flatnonzero(spreads < best_spread)
        if better.size == 0:
            continue
        order = better[np.argsort(spreads[better], kind="stable")]
        sums = C @ Q[order].T
        ok = ~(sums == 0).any(axis=0) if C.shape[0] else np.ones(order.size, dtype=bool)
        hits = np.flatnonzero(ok)
        if hits.size:
            pick = order[hits[0]]
            best_q, best_spread = Q[pick].copy(), int(spreads[pick])
    return _normalized_offsets(P, best_q.reshape(m, n))


def _as_lifting_degree(value) -> int:
    if isinstance(value, ExponentMatrix):
        if value.lifting_degree is None:
            raise ValueError("exponent matrix has no lifting degree")
        return value.lifting_degree
    return int(value)


def theta_lifting(new, ref) -> float:
    """Decoding-latency ratio of QC designs: new N over reference N."""
    return _as_lifting_degree(new) / _as_lifting_degree(ref)


def theta_memory(new, ref) -> float:
    """Latency/complexity ratio of convolutional designs: (m_h+1) over (m_h*+1)."""
    new_mh = new.memory_order if isinstance(new, ConvCodeSpec) else int(new)
    ref_mh = ref.memory_order if isinstance(ref, ConvCodeSpec) else int(ref)
    return (new_mh + 1) / (ref_mh + 1)


def theta_ratios(new, ref) -> float:
    """Compactness ratio of two designs of the same kind.

    Convolutional specs compare by memory order; exponent matrices or raw
    integers compare by lifting degree.
    """
    if isinstance(new, ConvCodeSpec) != isinstance(ref, ConvCodeSpec):
        raise ValueError("theta ratios need two designs of the same kind")
    if isinstance(new, ConvCodeSpec):
        return theta_memory(new, ref)
    return theta_lifting(new, ref)
