"""Acceptance gate: one test per criterion, each printing its own PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.  Budgets are generous desk-scale bounds; the
statistical checks use the stop rules stated in each criterion.
"""

import math
import time

import numpy as np
import pytest

from girthforge.cli import main
from girthforge.cycles import girth_conv, girth_qc
from girthforge.memopt import minimize_memory, minimize_memory_exact, theta_memory
from girthforge.model import ConvCodeSpec, ExponentMatrix, expand_to_binary, to_conv_spec
from girthforge.oracle import girth_oracle
from girthforge.search import SearchConfig, greedy_search, min_lifting_degree
from girthforge.sim import SimConfig, SlidingWindowDecoder, run_ber, simulate_awgn_bpsk

from conftest import EXAMPLE1_N, random_qc_matrix

# girth-12 SMC searches known feasible at these lifting degrees (cf. the
# bundled search itself; the lists only pin cheap instances for the suite)
N4_FEASIBLE = list(range(95, 155))                      # (m, n) = (3, 4)
N5_FEASIBLE = [192, 193, 195, 198, 199, 200, 201, 203, 204, 205, 208, 209, 210,
               211, 212, 213, 214, 215, 216, 217, 218, 219, 220, 221, 222, 223,
               224, 225, 226, 227, 228, 229, 230, 231, 232, 233, 234, 235, 236]


def report(index: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE {index} ({name}): {status}"
    if detail:
        line += f" [{detail}]"
    print(line, flush=True)
    assert ok, line


def girth_value(report_obj) -> int:
    return report_obj.girth if report_obj.girth is not None else 10**9


@pytest.fixture(scope="module")
def derived_conv_code():
    """Small-memory convolutional code derived by the normal pipeline path."""
    N, outcome = min_lifting_degree(3, 6, 4, 6, 60)
    assert N is not None
    lift = minimize_memory(outcome.matrix, k=3, budget=3000, seed=2)
    return lift.conv_spec()


def test_criterion_1_example_reproduction(example1_matrix):
    t0 = time.time()
    relation = girth_qc(example1_matrix)
    H = expand_to_binary(example1_matrix)
    oracle = girth_oracle(H)
    elapsed = time.time() - t0
    ok = (
        relation.girth == 12
        and oracle == 12
        and (H.row_count, H.col_count) == (813, 1626)
        and example1_matrix.code_length == 1626
        and elapsed < 10.0
    )
    report(1, "worked 3x6 design has girth exactly 12 by both checkers", ok,
           f"relation={relation}, oracle={oracle}, L={H.col_count}, {elapsed:.1f}s")


def test_criterion_2_search_feasibility(girth12_search_outcome):
    t0 = time.time()
    outcome = girth12_search_outcome
    ok = outcome.found
    detail = "infeasible"
    if ok:
        relation = girth_qc(outcome.matrix)
        oracle = girth_oracle(expand_to_binary(outcome.matrix))
        ok = girth_value(relation) >= 12 and oracle is not None and oracle >= 12
        detail = (f"N={EXAMPLE1_N}, base={outcome.spec.base_column}, "
                  f"gammas={outcome.spec.multipliers}, relation={relation}, "
                  f"oracle={oracle}, {time.time() - t0:.1f}s")
    report(2, "greedy search succeeds at N=271 and double-certifies", ok, detail)


def test_criterion_3_table_arithmetic():
    spreads = [44, 165, 53, 220, 88, 432]
    expected_vs = [315, 1162, 378, 1547, 623, 3031]
    vs = [(mh + 1) * 7 for mh in spreads]
    specs = [ConvCodeSpec([[0] * 6 + [mh]] * 3) for mh in spreads]
    vs_spec = [s.constraint_length for s in specs]
    thetas = [round(theta_memory(new, ref), 2)
              for new, ref in [(44, 53), (165, 220), (44, 88), (165, 432)]]
    ok = vs == expected_vs and vs_spec == expected_vs and thetas == [0.83, 0.75, 0.51, 0.38]
    report(3, "constraint lengths and theta ratios match the reference design points", ok,
           f"v_s={vs_spec}, theta={thetas}")


def test_criterion_4_oracle_equivalence_suite():
    t0 = time.time()
    rng = np.random.default_rng(20240801)
    trials = 500
    mismatches = []
    for _ in range(trials):
        P = random_qc_matrix(rng, max_m=4, max_n=6, max_N=40)
        relation = girth_qc(P, max_half_length=5)
        bfs = girth_oracle(expand_to_binary(P))
        lhs = min(girth_value(relation), 12)
        rhs = min(bfs if bfs is not None else 10**9, 12)
        if lhs != rhs:
            mismatches.append((P.entries.tolist(), P.lifting_degree, lhs, rhs))
    elapsed = time.time() - t0
    ok = not mismatches and elapsed < 120.0
    report(4, f"relation girth equals BFS girth on {trials} random designs", ok,
           f"mismatches={len(mismatches)}, {elapsed:.1f}s")


def test_criterion_5_strict_avoidability_eliminated(girth12_search_outcome):
    t0 = time.time()
    outcomes = [girth12_search_outcome]
    for N in N4_FEASIBLE:
        outcomes.append(greedy_search(SearchConfig.for_girth(3, 4, N, 12)))
    for N in N5_FEASIBLE:
        outcomes.append(greedy_search(SearchConfig.for_girth(3, 5, N, 12)))
    found = [o for o in outcomes if o.found]
    exact_clean = 0
    ordering = 0
    for outcome in found[:100]:
        conv = to_conv_spec(outcome.matrix)
        conv_report = girth_conv(conv, max_half_length=5)
        qc_report = girth_qc(outcome.matrix, max_half_length=5)
        if conv_report.girth is None:
            exact_clean += 1
        if girth_value(conv_report) >= girth_value(qc_report):
            ordering += 1
    elapsed = time.time() - t0
    ok = len(found) >= 100 and exact_clean == 100 and ordering == 100
    report(5, "100 girth-12 outcomes carry no exactly-zero relation up to length 10", ok,
           f"found={len(found)}, exact_clean={exact_clean}, ordering={ordering}, "
           f"{elapsed:.1f}s")


def test_criterion_6_memory_min_soundness():
    t0 = time.time()
    rng = np.random.default_rng(606)
    instances = []
    while len(instances) < 50:
        m = int(rng.integers(2, 4))
        n = int(rng.integers(m, 7))
        if m * n > 12:
            continue
        N = int(rng.integers(max(4, n), 30))
        P = ExponentMatrix(rng.integers(0, N, size=(m, n)), N)
        k = 2 if m * n <= 6 else 3
        if girth_qc(P, max_half_length=k).girth is None:
            instances.append((P, k))
    matches = sound = 0
    for i, (P, k) in enumerate(instances):
        exact = minimize_memory_exact(P, k)
        heur = minimize_memory(P, k, budget=1500, seed=i)
        if heur.memory_order == exact.memory_order:
            matches += 1
        recert = girth_conv(heur.conv_spec(), max_half_length=k)
        congruent = ((heur.entries - P.entries) % P.lifting_degree == 0).all()
        if recert.girth is None and congruent and heur.memory_order <= int(
            P.entries.max() - P.entries.min()
        ):
            sound += 1
    elapsed = time.time() - t0
    ok = matches >= 40 and sound == 50 and elapsed < 300.0
    report(6, "heuristic matches the exact optimum >= 80% and is always sound", ok,
           f"matches={matches}/50, sound={sound}/50, {elapsed:.1f}s")


def _monotone_within_mc(points) -> bool:
    for prev, nxt in zip(points, points[1:]):
        sigma_prev = prev.ber / math.sqrt(max(prev.bit_errors, 1))
        sigma_next = nxt.ber / math.sqrt(max(nxt.bit_errors, 1))
        slack = 3.0 * math.hypot(sigma_prev, sigma_next)
        if nxt.ber > prev.ber + slack:
            return False
    return True


def test_criterion_7_ber_behaviour(example1_matrix, derived_conv_code):
    t0 = time.time()
    conv = derived_conv_code

    # (a) BER non-increasing over a 0-4 dB sweep on the block code
    sweep_cfg = SimConfig(snr_db_points=(0.0, 1.0, 2.0, 3.0, 4.0), max_iterations=100,
                          rng_seed=700, min_bit_errors=100, max_frames=1200,
                          frame_batch=25)
    qc_curve = run_ber(example1_matrix, sweep_cfg)
    monotone = _monotone_within_mc(qc_curve.points)
    endpoints = qc_curve.points[-1].ber < qc_curve.points[0].ber

    # (b) noiseless decoding is error-free on both code families
    rng = np.random.default_rng(701)
    H = expand_to_binary(example1_matrix)
    noiseless_block = simulate_awgn_bpsk(np.zeros(H.col_count, dtype=np.uint8),
                                         80.0, 0.5, rng)
    from girthforge.bp import decode_bp

    block_bits, _, block_ok = decode_bp(H, noiseless_block, 100)
    noiseless_ok = block_ok and block_bits.sum() == 0

    # (c) sliding-window decoding of a noiseless stream is bit-exact at alpha = 10
    sw = SlidingWindowDecoder(conv, alpha=10, max_iterations=100)
    blocks = max(-(-10_000 // conv.bit_cols), sw.window_blocks)
    stream = np.zeros(blocks * conv.bit_cols, dtype=np.uint8)
    noiseless_stream = simulate_awgn_bpsk(stream, 80.0, float(conv.rate),
                                          np.random.default_rng(702))
    decoded, _ = sw.decode(noiseless_stream)
    stream_exact = (decoded == stream).all()

    # (d) mid-waterfall: SW within a factor 3 of full BP on the same stream length
    coarse_cfg = SimConfig(snr_db_points=(2.4, 2.8, 3.2, 3.6), max_iterations=100,
                           codeword_length_target=10_000, rng_seed=703,
                           min_bit_errors=100, max_frames=120, frame_batch=4)
    reference = run_ber(conv, coarse_cfg, decoder="full-bp")
    usable = [p for p in reference.points if p.bit_errors >= 30 and p.ber > 0]
    mid = min(usable, key=lambda p: abs(math.log10(p.ber) + 3.0))
    sw_cfg = SimConfig(snr_db_points=(mid.snr_db,), max_iterations=100,
                       codeword_length_target=10_000, window_alpha=10, rng_seed=703,
                       min_bit_errors=100, max_frames=120, frame_batch=4)
    sw_point = run_ber(conv, sw_cfg, decoder="sliding-window").points[0]
    within_factor = sw_point.ber <= 3.0 * mid.ber

    elapsed = time.time() - t0
    ok = (monotone and endpoints and noiseless_ok and stream_exact
          and within_factor and elapsed < 1800.0)
    report(7, "BER sweeps behave: monotone, noiseless-exact, SW close to full BP", ok,
           f"qc_ber={[f'{p.ber:.1e}' for p in qc_curve.points]}, "
           f"mid_snr={mid.snr_db}, full={mid.ber:.2e}, sw={sw_point.ber:.2e}, "
           f"{elapsed:.0f}s")


def test_criterion_8_byte_determinism(tmp_path):
    t0 = time.time()
    spec_args = ["search", "--m", "3", "--n", "6", "--girth", "12",
                 "--N", str(EXAMPLE1_N), "--seed", "0"]
    runs = []
    for tag in ("a", "b"):
        out = tmp_path / f"search_{tag}"
        assert main(spec_args + ["--out-dir", str(out)]) == 0
        runs.append((out / "spec.json").read_bytes())
    search_identical = runs[0] == runs[1]

    sim_args = ["simulate", "--code", str(tmp_path / "search_a" / "spec.json"),
                "--decoder", "full", "--snr", "1.0,2.0", "--max-iter", "40",
                "--min-errors", "30", "--max-frames", "40", "--seed", "9"]
    curves = []
    for tag in ("a", "b"):
        out = tmp_path / f"sim_{tag}"
        assert main(sim_args + ["--out-dir", str(out)]) == 0
        curves.append((out / "curve.csv").read_bytes())
    sim_identical = curves[0] == curves[1]

    ok = search_identical and sim_identical
    report(8, "repeated seeded runs yield byte-identical JSON/CSV artifacts", ok,
           f"search={search_identical}, curve={sim_identical}, {time.time() - t0:.0f}s")
