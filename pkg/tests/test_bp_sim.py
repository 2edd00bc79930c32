"""Sum-product decoding, the AWGN/BPSK channel and the Monte Carlo harness."""

import numpy as np
import pytest

from girthforge.bp import SumProductDecoder, decode_bp
from girthforge.model import (
    BinaryParityCheck,
    ConvCodeSpec,
    ExponentMatrix,
    expand_to_binary,
)
from girthforge.sim import (
    SimConfig,
    SlidingWindowDecoder,
    conv_stream_matrix,
    decode_sliding_window,
    latency_report,
    noise_sigma,
    run_ber,
    simulate_awgn_bpsk,
)


@pytest.fixture(scope="module")
def small_qc():
    return ExponentMatrix([[0, 0, 0, 0], [0, 1, 2, 4]], 7)


@pytest.fixture(scope="module")
def small_H(small_qc):
    return expand_to_binary(small_qc)


class TestChannel:
    def test_zero_noise_limit_preserves_signs(self):
        rng = np.random.default_rng(0)
        bits = rng.integers(0, 2, size=200).astype(np.uint8)
        llr = simulate_awgn_bpsk(bits, 120.0, 0.5, rng)
        assert ((llr > 0) == (bits == 0)).all()

    def test_all_zero_codeword_mean_llr_positive(self):
        rng = np.random.default_rng(1)
        llr = simulate_awgn_bpsk(np.zeros(5000, dtype=np.uint8), 0.0, 0.5, rng)
        assert llr.mean() > 0

    def test_empirical_noise_variance_matches_configuration(self):
        rng = np.random.default_rng(2)
        snr_db, rate = 2.0, 0.5
        sigma = noise_sigma(snr_db, rate)
        bits = np.zeros(1_000_000, dtype=np.uint8)
        llr = simulate_awgn_bpsk(bits, snr_db, rate, rng)
        received = llr * sigma * sigma / 2.0
        assert abs(received.var() - sigma * sigma) / (sigma * sigma) < 0.01

    def test_rate_must_be_positive(self):
        with pytest.raises(ValueError):
            noise_sigma(1.0, 0.0)


class TestSumProduct:
    def test_noiseless_codeword_returns_immediately(self, small_H):
        llr = np.full(small_H.col_count, 9.0)
        bits, iterations, ok = decode_bp(small_H, llr, 50)
        assert ok and iterations == 0 and bits.sum() == 0

    def test_single_flip_corrected(self, small_H):
        llr = np.full(small_H.col_count, 6.0)
        llr[3] = -6.0
        bits, iterations, ok = decode_bp(small_H, llr, 50)
        assert ok and bits.sum() == 0 and iterations >= 1

    def test_failure_path_at_heavy_noise(self, small_H):
        rng = np.random.default_rng(5)
        failed = False
        for _ in range(20):
            llr = simulate_awgn_bpsk(np.zeros(small_H.col_count, dtype=np.uint8),
                                     -6.0, 0.5, rng)
            _, _, ok = decode_bp(small_H, llr, 5)
            failed = failed or not ok
        assert failed

    def test_syndrome_ok_implies_valid_codeword(self, small_H):
        rng = np.random.default_rng(6)
        dense = small_H.to_dense()
        checked = 0
        for _ in range(40):
            llr = simulate_awgn_bpsk(np.zeros(small_H.col_count, dtype=np.uint8),
                                     1.0, 0.5, rng)
            bits, _, ok = decode_bp(small_H, llr, 30)
            if ok:
                checked += 1
                assert not (dense @ bits % 2).any()
        assert checked > 0

    def test_negating_llrs_flips_decisions(self, small_H):
        rng = np.random.default_rng(7)
        llr = rng.normal(0.4, 1.2, small_H.col_count)
        up, _, _ = decode_bp(small_H, llr, 25)
        down, _, _ = decode_bp(small_H, -llr, 25)
        assert ((up ^ down) == 1).all()

    def test_dimension_mismatch_rejected(self, small_H):
        with pytest.raises(ValueError):
            decode_bp(small_H, np.ones(3), 10)

    def test_decoder_reuse_matches_one_shot(self, small_H):
        rng = np.random.default_rng(8)
        decoder = SumProductDecoder(small_H)
        for _ in range(5):
            llr = rng.normal(1.2, 1.0, small_H.col_count)
            assert (decoder.decode(llr, 20)[0] == decode_bp(small_H, llr, 20)[0]).all()


class TestSlidingWindow:
    def test_memoryless_code_degenerates_to_block_decoding(self):
        spec = ConvCodeSpec([[0, 0, 0]])
        sw = SlidingWindowDecoder(spec, alpha=1, max_iterations=20)
        rng = np.random.default_rng(9)
        llr = rng.normal(1.5, 1.0, 12 * 3)
        stream_bits, _ = sw.decode(llr)
        block_H = BinaryParityCheck.from_dense(np.ones((1, 3), dtype=np.uint8))
        expected = np.concatenate(
            [decode_bp(block_H, llr[3 * t : 3 * (t + 1)], 20)[0] for t in range(12)]
        )
        assert (stream_bits == expected).all()

    def test_noiseless_stream_is_bit_exact(self):
        spec = ConvCodeSpec([[0, 2, 5], [1, 0, 3]])
        rng = np.random.default_rng(10)
        blocks = 50
        llr = simulate_awgn_bpsk(np.zeros(blocks * 3, dtype=np.uint8), 60.0,
                                 float(spec.rate), rng)
        decoded = decode_sliding_window(spec, llr, alpha=2, max_iterations=20)
        assert decoded.sum() == 0

    def test_rejects_short_stream(self):
        spec = ConvCodeSpec([[0, 2, 5], [1, 0, 3]])
        with pytest.raises(ValueError):
            decode_sliding_window(spec, np.ones(3 * 5), alpha=2)

    def test_rejects_ragged_stream(self):
        spec = ConvCodeSpec([[0, 2, 5], [1, 0, 3]])
        with pytest.raises(ValueError):
            decode_sliding_window(spec, np.ones(50), alpha=2)

    def test_stream_matrix_matches_window_band(self):
        spec = ConvCodeSpec([[0, 2], [1, 3]])
        blocks = 9
        H = conv_stream_matrix(spec, blocks)
        assert (H.row_count, H.col_count) == (blocks * 2, blocks * 2)
        m_h = spec.memory_order
        for r, c in H.support:
            assert r // 2 - m_h <= c // 2 <= r // 2


class TestRunBer:
    def test_seed_determinism_and_degradation_ordering(self, small_qc):
        cfg = SimConfig(snr_db_points=(0.0, 6.0), max_iterations=15, rng_seed=33,
                        min_bit_errors=25, max_frames=200, frame_batch=8)
        first = run_ber(small_qc, cfg)
        second = run_ber(small_qc, cfg)
        assert first == second
        low, high = first.points
        assert low.ber > high.ber

    def test_parallel_jobs_reproduce_serial_results(self, small_qc):
        base = dict(snr_db_points=(2.0,), max_iterations=15, rng_seed=21,
                    min_bit_errors=20, max_frames=60, frame_batch=5)
        serial = run_ber(small_qc, SimConfig(**base, jobs=1))
        parallel = run_ber(small_qc, SimConfig(**base, jobs=2))
        assert serial == parallel

    def test_rejects_unknown_decoder(self, small_qc):
        cfg = SimConfig(snr_db_points=(1.0,))
        with pytest.raises(ValueError):
            run_ber(small_qc, cfg, decoder="min-sum")

    def test_sliding_window_needs_conv_spec(self, small_qc):
        cfg = SimConfig(snr_db_points=(1.0,))
        with pytest.raises(ValueError):
            run_ber(small_qc, cfg, decoder="sliding-window")

    def test_curve_rows_schema(self, small_qc):
        cfg = SimConfig(snr_db_points=(4.0,), max_iterations=10, rng_seed=2,
                        min_bit_errors=5, max_frames=20, frame_batch=5)
        rows = run_ber(small_qc, cfg).csv_rows()
        assert list(rows[0]) == ["snr_db", "ber", "fer", "avg_iter", "frames"]


class TestLatencyReport:
    def test_reference_window_size(self):
        spec = ConvCodeSpec([[44] + [0] * 6, list(range(7)), [1] * 7])
        report = latency_report(spec, alpha=5, avg_iterations=10.0)
        assert report.window_bits == 1575

    def test_memoryless_window_is_one_block(self):
        spec = ConvCodeSpec([[0, 0, 0]])
        assert latency_report(spec, alpha=1, avg_iterations=1.0).window_bits == 3

    def test_complexity_linear_in_iterations(self):
        spec = ConvCodeSpec([[0, 3], [1, 2]])
        low = latency_report(spec, alpha=4, avg_iterations=2.0)
        high = latency_report(spec, alpha=4, avg_iterations=6.0)
        assert high.complexity_per_bit == pytest.approx(3 * low.complexity_per_bit)
        assert high.window_bits == low.window_bits
