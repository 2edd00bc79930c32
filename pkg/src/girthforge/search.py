"""Greedy search for large-girth QC exponent matrices built from sequentially multiplied columns.

An SMC matrix has column 0 all-zero, column 1 equal to a base column
(0, 1, p_2, ..., p_{m-1}) and every further column j equal to
gamma_j * column_1 mod N with strictly increasing multipliers.  Under that
structure the alternating sum of any relation reduces to a small linear
form sum_j a_j * gamma_j whose coefficients a_j are signed sums of base
entries, which is what makes an exhaustive scan affordable: the search
fixes the base column first, then assigns multipliers smallest-first by
depth-first search, backtracking to the previous column whenever a
multiplier set runs empty.  Base columns are scanned in lexicographic
order; by default the search moves to the next base column when one is
exhausted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .cycles import RelationSet
from .model import ExponentMatrix


@dataclass(frozen=True)
class SmcSpec:
    """Base column plus multiplier sequence defining an SMC exponent matrix."""

    base_column: tuple[int, ...]
    multipliers: tuple[int, ...]
    lifting_degree: int

    def __post_init__(self):
        object.__setattr__(self, "base_column", tuple(int(v) for v in self.base_column))
        object.__setattr__(self, "multipliers", tuple(int(v) for v in self.multipliers))
        base, N = self.base_column, self.lifting_degree
        if len(base) < 2 or base[0] != 0 or base[1] != 1:
            raise ValueError("base column must start with entries 0, 1")
        if any(b >= c for b, c in zip(base, base[1:])) or base[-1] >= N:
            raise ValueError("base column entries must be strictly increasing and below N")
        gammas = self.multipliers
        if any(g < 2 or g >= N for g in gammas):
            raise ValueError("multipliers must lie in [2, N-1]")
        if any(g >= h for g, h in zip(gammas, gammas[1:])):
            raise ValueError("multipliers must be strictly increasing")

    @property
    def m(self) -> int:
        return len(self.base_column)

    @property
    def n(self) -> int:
        return len(self.multipliers) + 2

    def to_json_dict(self) -> dict:
        return {
            "base_column": list(self.base_column),
            "multipliers": list(self.multipliers),
            "N": self.lifting_degree,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SmcSpec":
        try:
            return cls(tuple(data["base_column"]), tuple(data["multipliers"]), int(data["N"]))
        except (TypeError, KeyError) as exc:
            raise ValueError(f"malformed SMC-spec JSON: {exc}") from exc


def smc_expand(spec: SmcSpec) -> ExponentMatrix:
    """Expand an SMC spec: column 0 = 0, column 1 = base, column j = gamma_j * base mod N."""
    base = np.array(spec.base_column, dtype=np.int64)
    N = spec.lifting_degree
    cols = [np.zeros_like(base), base]
    cols.extend((g * base) % N for g in spec.multipliers)
    return ExponentMatrix(np.stack(cols, axis=1), N)


@dataclass(frozen=True)
class SearchConfig:
    """Inputs of the greedy search: grid shape, lifting degree and girth target 2k.

    exhaust_limit caps how many base columns are taken from the candidate
    stream before the search gives up (None scans them all).
    """

    m: int
    n: int
    N: int
    k: int
    backtrack_base: bool = True
    base_column_strategy: str = "lexicographic"
    exhaust_limit: int | None = None

    def __post_init__(self):
        if not (2 <= self.m <= self.n <= self.N):
            raise ValueError(f"need 2 <= m <= n <= N, got m={self.m}, n={self.n}, N={self.N}")
        if self.k not in range(2, 7):
            raise ValueError(f"target half-girth k must be in 2..6, got {self.k}")
        if self.base_column_strategy != "lexicographic":
            raise ValueError("only the lexicographic base-column order is defined")
        if self.exhaust_limit is not None and self.exhaust_limit < 1:
            raise ValueError("exhaust_limit must be positive when set")

    @property
    def girth(self) -> int:
        return 2 * self.k

    @classmethod
    def for_girth(cls, m: int, n: int, N: int, girth: int, **kw) -> "SearchConfig":
        if girth % 2 or not 4 <= girth <= 12:
            raise ValueError(f"girth target must be an even value in 4..12, got {girth}")
        return cls(m, n, N, girth // 2, **kw)


@dataclass
class SearchOutcome:
    status: str  # "found" | "infeasible"
    matrix: ExponentMatrix | None = None
    spec: SmcSpec | None = None
    stats: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == "found"


@lru_cache(maxsize=None)
def _incidence_tensor(m: int, n: int, max_half_length: int) -> tuple[np.ndarray, np.ndarray]:
    """Fixed relation incidence structure for an m x n grid.

    Returns (tensor, activation): tensor[r] is the (relations x n) integer
    matrix of signed incidence counts of row r, so that for a base column q
    the multiplier coefficients are coeff = sum_r q[r] * tensor[r]; the
    relation sum is then coeff @ gammas.  Activation is each relation's
    largest touched column.  Relations of all half-lengths 2..max are
    stacked in half-length order.
    """
    if max_half_length < 2:
        return np.zeros((m, 0, n), dtype=np.int16), np.zeros(0, dtype=np.int64)
    relset = RelationSet(m, range(n), max_half_length)
    tensors, activations = [], []
    for k in range(2, max_half_length + 1):
        rows, cols = relset.arrays(k)
        count = rows.shape[0]
        if not count:
            continue
        tensor = np.zeros((m, count, n), dtype=np.int16)
        idx = np.repeat(np.arange(count), k)
        np.add.at(tensor, (rows.ravel(), idx, cols.ravel()), 1)
        np.add.at(tensor, (rows.ravel(), idx, np.roll(cols, -1, axis=1).ravel()), -1)
        activations.append(cols.max(axis=1))
        tensors.append(tensor)
    if not tensors:
        return np.zeros((m, 0, n), dtype=np.int16), np.zeros(0, dtype=np.int64)
    tensor = np.concatenate(tensors, axis=1)
    activation = np.concatenate(activations)
    tensor.flags.writeable = False
    activation.flags.writeable = False
    return tensor, activation


def _multiplier_coefficients(base: np.ndarray, n: int, max_half_length: int) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients a_j of every relation sum as a linear form in the multipliers."""
    tensor, activation = _incidence_tensor(base.size, n, max_half_length)
    coeff = np.tensordot(base, tensor, axes=1)
    return coeff, activation


@lru_cache(maxsize=None)
def _totient(n: int) -> int:
    phi, rem, p = 1, n, 2
    while p * p <= rem:
        if rem % p == 0:
            phi *= p - 1
            rem //= p
            while rem % p == 0:
                phi *= p
                rem //= p
        p += 1
    if rem > 1:
        phi *= rem - 1
    return phi


def _modpow(base: np.ndarray, exponent: int, mod: int) -> np.ndarray:
    result = np.ones_like(base)
    base = base % mod
    e = exponent
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


class _ColumnSolver:
    """Per-column congruence machinery for one base column.

    The multiplier coefficient of each relation on its own activation
    column is prefix-independent, so the gcd structure, groupings and
    modular inverses needed to solve slope*g = -fixed (mod N) are set up
    once; each ladder node then only substitutes its prefix sum.
    """

    def __init__(self, coeffs: np.ndarray, j: int, N: int):
        self.coeffs = coeffs
        self.N = N
        slope = coeffs[:, j] % N
        self.flat = np.flatnonzero(slope == 0)
        live = np.flatnonzero(slope != 0)
        d = np.gcd(slope[live], N)
        self.groups = []
        for dv in np.unique(d):
            rows = live[d == dv]
            sub_mod = N // int(dv)
            s_red = (slope[rows] // int(dv)) % sub_mod
            inv = _modpow(s_red, _totient(sub_mod) - 1, sub_mod)
            self.groups.append((rows, int(dv), sub_mod, inv))

    def forbidden(self, gammas: np.ndarray, j: int) -> np.ndarray | None:
        """Mask over 0..N-1 of inadmissible gamma_j values; None when the prefix is dead."""
        N = self.N
        fixed = self.coeffs[:, :j] @ gammas[:j]
        if self.flat.size and (fixed[self.flat] % N == 0).any():
            return None
        mask = np.zeros(N, dtype=bool)
        for rows, dv, sub_mod, inv in self.groups:
            rhs = (-fixed[rows]) % N
            ok = rhs % dv == 0
            if not ok.any():
                continue
            g0 = ((rhs[ok] // dv) * inv[ok]) % sub_mod
            if dv == 1:
                mask[g0] = True
            else:
                sols = (g0[None, :] + (np.arange(dv, dtype=np.int64) * sub_mod)[:, None]).ravel()
                mask[sols] = True
        return mask


def _ladder_dfs(solvers: list[_ColumnSolver | None], n: int, N: int, stats: dict) -> np.ndarray | None:
    """Smallest-first depth-first assignment of gamma_2 .. gamma_{n-1}.

    Each column tries its admissible multipliers in increasing order and
    backtracks to the previous column when the set runs empty, so the
    returned assignment is the lexicographically smallest feasible one.
    """
    gammas = np.zeros(n, dtype=np.int64)
    gammas[1] = 1

    def descend(j: int) -> bool:
        if j == n:
            return True
        stats["ladder_nodes"] += 1
        forbidden = solvers[j].forbidden(gammas, j)
        if forbidden is None:
            return False
        lo = int(gammas[j - 1]) + 1
        for g in np.flatnonzero(~forbidden[lo:]) + lo:
            stats["gamma_candidates_tried"] += 1
            gammas[j] = int(g)
            if descend(j + 1):
                return True
        gammas[j] = 0
        return False

    return gammas if descend(2) else None


def greedy_search(cfg: SearchConfig) -> SearchOutcome:
    """Scan base columns lexicographically; assign multipliers smallest-first with backtracking.

    A multiplier is admissible when no relation over the columns placed so
    far sums to 0 mod N.  A base column whose ladder exhausts is abandoned;
    with backtrack_base (the default) the next base column is tried,
    otherwise the search reports infeasible.
    """
    m, n, N, k = cfg.m, cfg.n, cfg.N, cfg.k
    check = min(k - 1, 5)
    stats = {"base_columns_tried": 0, "ladder_nodes": 0, "gamma_candidates_tried": 0}

    for combo in itertools.combinations(range(2, N), m - 2):
        if cfg.exhaust_limit is not None and stats["base_columns_tried"] >= cfg.exhaust_limit:
            break
        stats["base_columns_tried"] += 1
        base = np.array((0, 1) + combo, dtype=np.int64)
        coeff, activation = _multiplier_coefficients(base, n, check)

        # relations confined to columns {0, 1}: sum = a_1 since gamma_1 = 1
        if ((coeff[activation <= 1, 1] % N) == 0).any():
            continue

        solvers: list[_ColumnSolver | None] = [None, None]
        solvers.extend(_ColumnSolver(coeff[activation == j], j, N) for j in range(2, n))
        gammas = _ladder_dfs(solvers, n, N, stats)
        if gammas is not None:
            spec = SmcSpec((0, 1) + combo, tuple(int(g) for g in gammas[2:]), N)
            return SearchOutcome("found", smc_expand(spec), spec, stats)
        if not cfg.backtrack_base:
            return SearchOutcome("infeasible", stats=stats)

    return SearchOutcome("infeasible", stats=stats)


def min_lifting_degree(m: int, n: int, k: int, N_start: int, N_stop: int,
                       backtrack_base: bool = True) -> tuple[int | None, SearchOutcome]:
    """Smallest N in [N_start, N_stop] for which the greedy search succeeds."""
    if N_start > N_stop:
        raise ValueError("empty lifting-degree range")
    last = SearchOutcome("infeasible")
    for N in range(max(N_start, n, m), N_stop + 1):
        outcome = greedy_search(SearchConfig(m, n, N, k, backtrack_base=backtrack_base))
        if outcome.found:
            return N, outcome
        last = outcome
    return None, last


def base_column_ok(P1, k: int) -> bool:
    """True iff the two-column matrix [0 | P1] has no exactly-zero relation sum up to length 2k."""
    base = np.array(P1, dtype=np.int64)
    if base.ndim != 1 or base.size < 2:
        raise ValueError("base column must be a vector of at least 2 entries")
    entries = np.stack([np.zeros_like(base), base], axis=1)
    relset = RelationSet(base.size, (0, 1), k)
    for half in range(2, k + 1):
        rows, cols = relset.arrays(half)
        if rows.shape[0] == 0:
            continue
        nxt = np.roll(cols, -1, axis=1)
        sums = (entries[rows, cols] - entries[rows, nxt]).sum(axis=1)
        if (sums == 0).any():
            return False
    return True


def gamma_lower_bound(relations: RelationSet, base_column, assigned) -> int:
    """Certified-safe starting value for the next multiplier (sufficient, not necessary).

    For each relation touching the newest column s-1, any gamma strictly
    larger than |sum of the already-fixed terms| / |a_{s-1}| keeps the exact
    sum non-zero; the bound is the smallest integer above the worst such
    ratio, never below the successor of the last assigned multiplier.
    Relations whose newest-column coefficient vanishes admit no such bound.
    """
    base = np.array(base_column, dtype=np.int64)
    assigned = tuple(int(g) for g in assigned)
    subset = relations.column_subset
    if subset != tuple(range(len(subset))):
        raise ValueError("multiplier bounds need the contiguous column set 0..s-1")
    s = len(subset)
    if 2 + len(assigned) != s - 1:
        raise ValueError("assigned multipliers must cover columns 2..s-2")
    gammas = np.zeros(s, dtype=np.int64)
    gammas[1] = 1
    gammas[2 : 2 + len(assigned)] = assigned

    floor = (assigned[-1] if assigned else 1) + 1
    coeff, activation = _multiplier_coefficients(base, s, relations.max_half_length)
    active = activation == s - 1
    if not active.any():
        return floor
    slope = coeff[active][:, s - 1]
    if (slope == 0).any():
        raise ValueError(
            "a relation has zero coefficient on the newest column; "
            "no multiplier bound exists, check it directly"
        )
    fixed = coeff[active][:, : s - 1] @ gammas[: s - 1]
    worst = float(np.max(np.abs(fixed) / np.abs(slope)))
    return max(floor, int(np.floor(worst)) + 1)
