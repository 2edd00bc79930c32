"""Monte Carlo BER evaluation over an AWGN channel with BPSK signalling.

Linear codes over the binary-input symmetric channel have a BER that does
not depend on the transmitted codeword, so every frame sends the all-zero
word (all +1 symbols) and no encoder is needed; this holds for both the
lifted block codes and the convolutional streams.  Frames are simulated in
fixed-size batches with one child RNG per (SNR point, batch), which makes
results byte-reproducible for a given seed and independent of how many
workers execute the batches.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bp import DEFAULT_LLR_CLIP, SumProductDecoder
from .model import (
    BinaryParityCheck,
    ConvCodeSpec,
    ExponentMatrix,
    expand_to_binary,
    to_syndrome_former,
)

FULL_BP = "full-bp"
SLIDING_WINDOW = "sliding-window"


@dataclass(frozen=True)
class SimConfig:
    snr_db_points: tuple[float, ...]
    max_iterations: int = 100
    codeword_length_target: int = 10_000
    window_alpha: int = 5
    rng_seed: int = 0
    min_bit_errors: int = 100
    max_frames: int = 100_000
    llr_clip: float = DEFAULT_LLR_CLIP
    frame_batch: int = 20
    jobs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "snr_db_points", tuple(float(s) for s in self.snr_db_points))
        if not self.snr_db_points:
            raise ValueError("need at least one SNR point")
        if self.max_iterations < 1 or self.window_alpha < 1:
            raise ValueError("max_iterations and window_alpha must be >= 1")
        if self.min_bit_errors < 1 or self.max_frames < 1 or self.frame_batch < 1:
            raise ValueError("stop rule fields must be positive")


@dataclass(frozen=True)
class BerPoint:
    snr_db: float
    ber: float
    fer: float
    avg_iterations: float
    frames: int
    bit_errors: int
    frame_errors: int


@dataclass(frozen=True)
class BerCurve:
    decoder: str
    points: tuple[BerPoint, ...]

    def csv_rows(self) -> list[dict]:
        return [
            {
                "snr_db": p.snr_db,
                "ber": p.ber,
                "fer": p.fer,
                "avg_iter": p.avg_iterations,
                "frames": p.frames,
            }
            for p in self.points
        ]


@dataclass(frozen=True)
class LatencyReport:
    window_bits: int
    complexity_per_bit: float
    f_weight: float
    alpha: int
    memory_order: int
    avg_iterations: float


def noise_sigma(snr_db: float, rate: float) -> float:
    """Noise standard deviation for a given Eb/N0 in dB at unit symbol energy."""
    if rate <= 0:
        raise ValueError("code rate must be positive to map Eb/N0 to noise power")
    ebn0 = 10.0 ** (snr_db / 10.0)
    return math.sqrt(1.0 / (2.0 * float(rate) * ebn0))


def simulate_awgn_bpsk(codeword, snr_db: float, rate, rng: np.random.Generator) -> np.ndarray:
    """Map bits to +/-1 (bit 0 -> +1), add white Gaussian noise, return channel LLRs."""
    bits = np.asarray(codeword, dtype=np.uint8)
    sigma = noise_sigma(snr_db, float(rate))
    symbols = 1.0 - 2.0 * bits.astype(np.float64)
    received = symbols + rng.normal(0.0, sigma, size=bits.size)
    return 2.0 * received / (sigma * sigma)


class SlidingWindowDecoder:
    """Windowed BP over the banded convolutional parity-check structure.

    Each position t decodes checks t .. t+W-1 over variable blocks
    t-m_h .. t+W-1 (clipped at the stream start), commits the first
    undecided block and shifts by one block.  Committed blocks stay in
    later windows as variables pinned to saturated LLRs.  The final
    position commits the whole remaining window.
    """

    def __init__(self, spec: ConvCodeSpec, alpha: int,
                 max_iterations: int = 100, llr_clip: float = DEFAULT_LLR_CLIP):
        if alpha < 1:
            raise ValueError("window multiplier alpha must be >= 1")
        self.spec = spec
        self.alpha = int(alpha)
        self.window_blocks = self.alpha * (spec.memory_order + 1)
        self.max_iterations = max_iterations
        self.llr_clip = llr_clip
        self._former = to_syndrome_former(spec)
        self._decoders: dict[int, tuple[SumProductDecoder, int]] = {}

    def _window_decoder(self, t: int) -> tuple[SumProductDecoder, int]:
        """Decoder for window position t; positions >= m_h share one structure."""
        m_h = self.spec.memory_order
        key = min(t, m_h)
        if key not in self._decoders:
            c, a = self.spec.check_rows, self.spec.bit_cols
            W = self.window_blocks
            var_blocks = key + W
            support = set()
            for mem, block in enumerate(self._former.blocks):
                rr, cc = np.nonzero(block)
                for row_block in range(key, key + W):
                    col_block = row_block - mem
                    if col_block < 0:
                        continue
                    support.update(
                        zip(
                            ((row_block - key) * c + rr).tolist(),
                            (col_block * a + cc).tolist(),
                        )
                    )
            H = BinaryParityCheck(W * c, var_blocks * a, frozenset(support))
            self._decoders[key] = SumProductDecoder(H, llr_clip=self.llr_clip)
        # windows at t >= m_h share the steady-state structure; earlier ones are boundary cases
        return self._decoders[key], t - key

    def decode(self, llr_stream) -> tuple[np.ndarray, np.ndarray]:
        """Decode a whole stream; returns (hard bits, iterations per window position)."""
        llr_stream = np.asarray(llr_stream, dtype=np.float64)
        a = self.spec.bit_cols
        if llr_stream.size % a:
            raise ValueError(f"stream length must be a multiple of a={a}")
        total_blocks = llr_stream.size // a
        W = self.window_blocks
        if total_blocks < W:
            raise ValueError(
                f"stream of {total_blocks} blocks shorter than one window ({W} blocks)"
            )
        m_h = self.spec.memory_order
        sat = self.llr_clip
        decided = np.zeros(llr_stream.size, dtype=np.uint8)
        iterations = []
        for t in range(total_blocks - W + 1):
            decoder, lo = self._window_decoder(t)
            window = llr_stream[lo * a : (t + W) * a].copy()
            committed = (t - lo) * a
            if committed:
                pinned = decided[lo * a : t * a]
                window[:committed] = sat * (1.0 - 2.0 * pinned.astype(np.float64))
            hard, iters, _ = decoder.decode(window, self.max_iterations)
            iterations.append(iters)
            if t < total_blocks - W:
                decided[t * a : (t + 1) * a] = hard[committed : committed + a]
            else:
                decided[t * a :] = hard[committed:]
        return decided, np.array(iterations, dtype=np.int64)


def decode_sliding_window(spec: ConvCodeSpec, llr_stream, alpha: int,
                          max_iterations: int = 100,
                          llr_clip: float = DEFAULT_LLR_CLIP) -> np.ndarray:
    """Functional wrapper: sliding-window decode of one LLR stream."""
    decoder = SlidingWindowDecoder(spec, alpha, max_iterations, llr_clip)
    return decoder.decode(llr_stream)[0]


def conv_stream_matrix(spec: ConvCodeSpec, blocks: int) -> BinaryParityCheck:
    """Finite truncation of the semi-infinite matrix: rows and columns 0..blocks-1."""
    c, a = spec.check_rows, spec.bit_cols
    former = to_syndrome_former(spec)
    support = set()
    for mem, block in enumerate(former.blocks):
        rr, cc = np.nonzero(block)
        for row_block in range(mem, blocks):
            col_block = row_block - mem
            support.update(
                zip((row_block * c + rr).tolist(), (col_block * a + cc).tolist())
            )
    return BinaryParityCheck(blocks * c, blocks * a, frozenset(support))


class _FrameRunner:
    """Simulates one batch of all-zero frames; picklable for process pools."""

    def __init__(self, decoder_kind: str, code, cfg: SimConfig):
        self.decoder_kind = decoder_kind
        self.cfg = cfg
        if decoder_kind == SLIDING_WINDOW:
            if not isinstance(code, ConvCodeSpec):
                raise ValueError("sliding-window decoding needs a convolutional spec")
            self.rate = float(code.rate)
            self._sw = SlidingWindowDecoder(
                code, cfg.window_alpha, cfg.max_iterations, cfg.llr_clip
            )
            blocks = max(
                -(-cfg.codeword_length_target // code.bit_cols), self._sw.window_blocks
            )
            self.frame_bits = blocks * code.bit_cols
        else:
            if isinstance(code, ExponentMatrix):
                H = expand_to_binary(code)
                self.rate = 1.0 - code.m / code.n
            elif isinstance(code, ConvCodeSpec):
                blocks = max(-(-cfg.codeword_length_target // code.bit_cols),
                             code.memory_order + 1)
                H = conv_stream_matrix(code, blocks)
                self.rate = float(code.rate)
            elif isinstance(code, BinaryParityCheck):
                H = code
                self.rate = 1.0 - H.row_count / H.col_count
            else:
                raise ValueError(f"cannot simulate {type(code).__name__}")
            self._bp = SumProductDecoder(H, llr_clip=cfg.llr_clip)
            self.frame_bits = H.col_count

    def run_batch(self, snr_db: float, point_index: int, batch_index: int, frames: int):
        rng = np.random.default_rng(
            np.random.SeedSequence([self.cfg.rng_seed, point_index, batch_index])
        )
        zeros = np.zeros(self.frame_bits, dtype=np.uint8)
        bit_errors = frame_errors = 0
        iteration_sum = 0.0
        for _ in range(frames):
            llr = simulate_awgn_bpsk(zeros, snr_db, self.rate, rng)
            if self.decoder_kind == SLIDING_WINDOW:
                hard, iters = self._sw.decode(llr)
                iteration_sum += float(iters.mean())
            else:
                hard, iters, _ = self._bp.decode(llr, self.cfg.max_iterations)
                iteration_sum += float(iters)
            errs = int(hard.sum())
            bit_errors += errs
            frame_errors += errs > 0
        return bit_errors, frame_errors, iteration_sum, frames


def run_ber(code, cfg: SimConfig, decoder: str = FULL_BP) -> BerCurve:
    """Sweep the configured SNR points until the stop rule fires at each.

    Stops a point once min_bit_errors have accumulated or max_frames were
    simulated; batches are seeded independently of the executing worker so
    identical (config, seed) always produce an identical curve.
    """
    if decoder not in (FULL_BP, SLIDING_WINDOW):
        raise ValueError(f"unknown decoder {decoder!r}")
    runner = _FrameRunner(decoder, code, cfg)
    points = []
    pool = ProcessPoolExecutor(max_workers=cfg.jobs) if cfg.jobs > 1 else None
    try:
        for index, snr in enumerate(cfg.snr_db_points):
            bit_errors = frame_errors = frames = 0
            iteration_sum = 0.0
            batch_index = 0
            while bit_errors < cfg.min_bit_errors and frames < cfg.max_frames:
                todo = []
                remaining = cfg.max_frames - frames
                lanes = cfg.jobs if pool is not None else 1
                for _ in range(lanes):
                    if remaining <= 0:
                        break
                    size = min(cfg.frame_batch, remaining)
                    todo.append((snr, index, batch_index, size))
                    batch_index += 1
                    remaining -= size
                if pool is not None:
                    results = list(pool.map(runner.run_batch, *zip(*todo)))
                else:
                    results = [runner.run_batch(*args) for args in todo]
                for be, fe, its, fr in results:
                    bit_errors += be
                    frame_errors += fe
                    iteration_sum += its
                    frames += fr
                    if bit_errors >= cfg.min_bit_errors:
                        break
            total_bits = frames * runner.frame_bits
            points.append(
                BerPoint(
                    snr_db=snr,
                    ber=bit_errors / total_bits if total_bits else 0.0,
                    fer=frame_errors / frames if frames else 0.0,
                    avg_iterations=iteration_sum / frames if frames else 0.0,
                    frames=frames,
                    bit_errors=bit_errors,
                    frame_errors=frame_errors,
                )
            )
    finally:
        if pool is not None:
            pool.shutdown()
    return BerCurve(decoder, tuple(points))


def latency_report(spec: ConvCodeSpec, alpha: int, avg_iterations: float,
                   f_weight: float = 1.0) -> LatencyReport:
    """Sliding-window latency (bits) and per-output-bit complexity.

    The complexity weight defaults to 1, leaving the figure in units of
    iterations times window blocks per output bit; ratios between two
    codes do not depend on it.
    """
    m_h = spec.memory_order
    window_bits = alpha * (m_h + 1) * spec.bit_cols
    complexity = alpha * (m_h + 1) * avg_iterations * f_weight
    return LatencyReport(
        window_bits=window_bits,
        complexity_per_bit=complexity,
        f_weight=f_weight,
        alpha=alpha,
        memory_order=m_h,
        avg_iterations=avg_iterations,
    )
