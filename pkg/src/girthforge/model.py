"""Code representations: exponent matrices, lifted binary matrices, convolutional forms.

The exponent matrix is the central design object.  Interpreted mod-N it
describes a quasi-cyclic block code (each entry is the shift of an N x N
circulant permutation block); interpreted over the plain integers it
describes a time-invariant monomial convolutional code whose syndrome
former memory is the spread of its entries.  Conversions between the two
views are explicit, never implicit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np


def _frozen_int_grid(entries) -> np.ndarray:
    grid = np.array(entries, dtype=np.int64)
    if grid.ndim != 2 or grid.size == 0:
        raise ValueError("entries must form a non-empty 2-D grid")
    if (grid < 0).any():
        raise ValueError("entries must be non-negative integers")
    grid.flags.writeable = False
    return grid


@dataclass(frozen=True)
class ExponentMatrix:
    """Grid of shift exponents, optionally bound to a lifting degree N.

    With ``lifting_degree`` set the matrix defines a QC block code of
    length n*N and every entry must lie in [0, N-1].  Without it the
    entries are unreduced integers (convolutional reading).
    """

    entries: np.ndarray
    lifting_degree: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen_int_grid(self.entries))
        N = self.lifting_degree
        if N is not None:
            if N < 1:
                raise ValueError("lifting degree must be a positive integer")
            if (self.entries > N - 1).any():
                raise ValueError(f"entries must lie in [0, {N - 1}] for lifting degree {N}")

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]

    @property
    def code_length(self) -> int:
        """Block-code length n*N; requires a lifting degree."""
        if self.lifting_degree is None:
            raise ValueError("code length requires a lifting degree")
        return self.n * self.lifting_degree

    def reduced(self, lifting_degree: int) -> "ExponentMatrix":
        """Entries reduced mod N, bound to N (explicit conversion to the QC view)."""
        return ExponentMatrix(self.entries % lifting_degree, lifting_degree)

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "N": self.lifting_degree,
            "entries": self.entries.tolist(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExponentMatrix":
        try:
            entries = data["entries"]
            lifting = data.get("N")
        except (TypeError, KeyError) as exc:
            raise ValueError(f"malformed exponent-matrix JSON: missing {exc}") from exc
        mat = cls(entries, None if lifting is None else int(lifting))
        if "m" in data and int(data["m"]) != mat.m:
            raise ValueError("declared m does not match entry grid")
        if "n" in data and int(data["n"]) != mat.n:
            raise ValueError("declared n does not match entry grid")
        return mat

    def __eq__(self, other):
        if not isinstance(other, ExponentMatrix):
            return NotImplemented
        return (
            self.lifting_degree == other.lifting_degree
            and self.entries.shape == other.entries.shape
            and bool((self.entries == other.entries).all())
        )

    def __hash__(self):
        return hash((self.lifting_degree, self.entries.shape, self.entries.tobytes()))


@dataclass(frozen=True)
class BinaryParityCheck:
    """Sparse binary matrix stored as a set of (row, col) positions."""

    row_count: int
    col_count: int
    support: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        for r, c in self.support:
            if not (0 <= r < self.row_count and 0 <= c < self.col_count):
                raise ValueError(f"position ({r}, {c}) outside {self.row_count} x {self.col_count}")

    @classmethod
    def from_dense(cls, dense) -> "BinaryParityCheck":
        arr = np.asarray(dense)
        rows, cols = np.nonzero(arr)
        return cls(arr.shape[0], arr.shape[1], frozenset(zip(rows.tolist(), cols.tolist())))

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.row_count, self.col_count), dtype=np.uint8)
        if self.support:
            rows, cols = zip(*self.support)
            dense[list(rows), list(cols)] = 1
        return dense

    def position_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Support as parallel (rows, cols) arrays, sorted by (row, col)."""
        if not self.support:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        pos = np.array(sorted(self.support), dtype=np.int64)
        return pos[:, 0], pos[:, 1]

    def column_weights(self) -> np.ndarray:
        _, cols = self.position_arrays()
        return np.bincount(cols, minlength=self.col_count)

    def row_weights(self) -> np.ndarray:
        rows, _ = self.position_arrays()
        return np.bincount(rows, minlength=self.row_count)


@dataclass(frozen=True)
class ConvCodeSpec:
    """Monomial convolutional code given by a c x a grid of unreduced exponents.

    The memory order, constraint length and rate are always derived from
    the grid so the identities m_h = spread, v_s = (m_h+1)*a and
    R = (a-c)/a cannot drift apart.
    """

    exponents: np.ndarray
    lifting_degree: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "exponents", _frozen_int_grid(self.exponents))

    @property
    def check_rows(self) -> int:
        return self.exponents.shape[0]

    @property
    def bit_cols(self) -> int:
        return self.exponents.shape[1]

    @property
    def memory_order(self) -> int:
        """m_h: largest absolute difference between any two exponents."""
        return int(self.exponents.max() - self.exponents.min())

    @property
    def constraint_length(self) -> int:
        return (self.memory_order + 1) * self.bit_cols

    @property
    def rate(self) -> Fraction:
        return Fraction(self.bit_cols - self.check_rows, self.bit_cols)

    def to_json_dict(self) -> dict:
        return {
            "c": self.check_rows,
            "a": self.bit_cols,
            "exponents": self.exponents.tolist(),
            "N": self.lifting_degree,
            "m_h": self.memory_order,
            "v_s": self.constraint_length,
            "rate": [self.rate.numerator, self.rate.denominator],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ConvCodeSpec":
        try:
            exponents = data["exponents"]
        except (TypeError, KeyError) as exc:
            raise ValueError(f"malformed convolutional-spec JSON: missing {exc}") from exc
        lifting = data.get("N")
        spec = cls(exponents, None if lifting is None else int(lifting))
        for key, expect in (("c", spec.check_rows), ("a", spec.bit_cols),
                            ("m_h", spec.memory_order), ("v_s", spec.constraint_length)):
            if key in data and int(data[key]) != expect:
                raise ValueError(f"declared {key}={data[key]} does not match exponent grid ({expect})")
        return spec

    def __eq__(self, other):
        if not isinstance(other, ConvCodeSpec):
            return NotImplemented
        return self.exponents.shape == other.exponents.shape and bool(
            (self.exponents == other.exponents).all()
        )

    def __hash__(self):
        return hash((self.exponents.shape, self.exponents.tobytes()))


@dataclass(frozen=True)
class SyndromeFormer:
    """Ordered blocks H_0 ... H_{m_h}, each c x a binary."""

    blocks: tuple[np.ndarray, ...]

    def __post_init__(self):
        frozen = []
        for blk in self.blocks:
            arr = np.array(blk, dtype=np.uint8)
            if arr.ndim != 2 or arr.shape != np.shape(self.blocks[0]):
                raise ValueError("all syndrome-former blocks must share one c x a shape")
            arr.flags.writeable = False
            frozen.append(arr)
        object.__setattr__(self, "blocks", tuple(frozen))

    @property
    def memory_order(self) -> int:
        return len(self.blocks) - 1

    @property
    def check_rows(self) -> int:
        return self.blocks[0].shape[0]

    @property
    def bit_cols(self) -> int:
        return self.blocks[0].shape[1]


def expand_to_binary(P: ExponentMatrix) -> BinaryParityCheck:
    """Lift an exponent matrix into its mN x nN binary parity-check matrix.

    Block (i, j) is the identity with rows cyclically shifted by p_ij,
    i.e. row r of the block has its one in column (r + p_ij) mod N.
    """
    N = P.lifting_degree
    if N is None:
        raise ValueError("expand_to_binary requires a lifting degree")
    m, n = P.m, P.n
    r_off = np.arange(N)
    support = set()
    for i in range(m):
        for j in range(n):
            shift = int(P.entries[i, j])
            rows = i * N + r_off
            cols = j * N + (r_off + shift) % N
            support.update(zip(rows.tolist(), cols.tolist()))
    return BinaryParityCheck(m * N, n * N, frozenset(support))


def to_conv_spec(P: ExponentMatrix) -> ConvCodeSpec:
    """Reinterpret an exponent matrix as a monomial convolutional code."""
    return ConvCodeSpec(P.entries, P.lifting_degree)


def to_syndrome_former(spec: ConvCodeSpec) -> SyndromeFormer:
    """Split a monomial spec into its m_h + 1 syndrome-former blocks.

    Block H_m holds a one at (i, j) exactly when the exponent at (i, j)
    is m; exponents are taken relative to the grid minimum so that block
    indices span 0 .. m_h.
    """
    shifted = spec.exponents - spec.exponents.min()
    c, a = shifted.shape
    blocks = np.zeros((spec.memory_order + 1, c, a), dtype=np.uint8)
    ii, jj = np.indices((c, a))
    blocks[shifted.ravel(), ii.ravel(), jj.ravel()] = 1
    return SyndromeFormer(tuple(blocks))


def window_matrix(spec: ConvCodeSpec, W: int) -> BinaryParityCheck:
    """Top-left Wc x Wa truncation of the semi-infinite banded parity-check matrix.

    Block position (I, J) carries H_{I-J} whenever 0 <= I-J <= m_h, so the
    band of block-row t references block-columns t-m_h .. t only.
    """
    m_h = spec.memory_order
    if W < m_h + 1:
        raise ValueError(f"window of {W} blocks cannot contain the full band (m_h + 1 = {m_h + 1})")
    former = to_syndrome_former(spec)
    c, a = spec.check_rows, spec.bit_cols
    support = set()
    for m, block in enumerate(former.blocks):
        rr, cc = np.nonzero(block)
        for I in range(m, W):
            J = I - m
            support.update(zip((I * c + rr).tolist(), (J * a + cc).tolist()))
    return BinaryParityCheck(W * c, W * a, frozenset(support))
