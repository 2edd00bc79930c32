"""Log-domain sum-product decoding over a sparse binary parity-check matrix.

Check updates run in the sign / log-magnitude domain (product of tanh
halves) with all per-edge work vectorized over an edge list sorted by
check.  Message magnitudes are clipped at a saturation constant to keep
arctanh finite; the same constant is the saturated value used to pin
already-decided bits in sliding-window decoding.
"""

from __future__ import annotations

import numpy as np

from .model import BinaryParityCheck

DEFAULT_LLR_CLIP = 25.0

_TANH_CEIL = 1.0 - 1e-15


class SumProductDecoder:
    """Reusable decoder for one parity-check matrix."""

    def __init__(self, H: BinaryParityCheck, llr_clip: float = DEFAULT_LLR_CLIP):
        if llr_clip <= 0:
            raise ValueError("llr_clip must be positive")
        self.n = H.col_count
        self.llr_clip = float(llr_clip)
        check_idx, var_idx = H.position_arrays()  # sorted by (check, var)
        weights = np.bincount(check_idx, minlength=H.row_count)
        occupied = weights > 0
        # empty checks are trivially satisfied; drop them from the edge bookkeeping
        remap = np.cumsum(occupied) - 1
        self.check_index = remap[check_idx]
        self.var_index = var_idx
        self.check_count = int(occupied.sum())
        self.seg_ptr = np.concatenate([[0], np.cumsum(weights[occupied])])[:-1]

    def _syndrome_ok(self, hard: np.ndarray) -> bool:
        if self.check_count == 0:
            return True
        parity = np.add.reduceat(hard[self.var_index], self.seg_ptr) % 2
        return not parity.any()

    def decode(self, llr, max_iterations: int) -> tuple[np.ndarray, int, bool]:
        """Run message passing until the syndrome clears or iterations run out.

        Returns (hard decisions, iterations used, syndrome satisfied);
        iteration 0 means the channel hard decisions were already a codeword.
        """
        llr = np.asarray(llr, dtype=np.float64)
        if llr.shape != (self.n,):
            raise ValueError(f"llr length {llr.shape} does not match {self.n} columns")
        if max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")

        hard = (llr < 0).astype(np.uint8)
        if self._syndrome_ok(hard):
            return hard, 0, True

        ci, vi = self.check_index, self.var_index
        clip = self.llr_clip
        Q = llr[vi]
        for iteration in range(1, max_iterations + 1):
            t = np.tanh(0.5 * np.clip(Q, -clip, clip))
            mag = np.log(np.maximum(np.abs(t), 1e-300))
            neg = t < 0
            seg_mag = np.add.reduceat(mag, self.seg_ptr)
            seg_neg = np.add.reduceat(neg.astype(np.int64), self.seg_ptr)
            excl_mag = np.exp(np.minimum(seg_mag[ci] - mag, 0.0))
            excl_sign = 1.0 - 2.0 * ((seg_neg[ci] - neg) % 2)
            R = excl_sign * 2.0 * np.arctanh(np.minimum(excl_mag, _TANH_CEIL))

            total = llr + np.bincount(vi, weights=R, minlength=self.n)
            Q = total[vi] - R

            hard = (total < 0).astype(np.uint8)
            if self._syndrome_ok(hard):
                return hard, iteration, True
        return hard, max_iterations, False


def decode_bp(H: BinaryParityCheck, llr, max_iterations: int = 100,
              llr_clip: float = DEFAULT_LLR_CLIP) -> tuple[np.ndarray, int, bool]:
    """One-shot sum-product decode; builds the decoder and runs it."""
    return SumProductDecoder(H, llr_clip=llr_clip).decode(llr, max_iterations)
