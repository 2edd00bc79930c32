"""girthforge command line: search, convert, certify and simulate compact LDPC designs.

Exit codes are a stable scripting contract: 0 success, 2 infeasible
search, 3 validation/usage failure, 4 I/O failure.  Global flags may also
be set through environment variables prefixed GIRTHFORGE_ (SEED, JOBS,
OUT_DIR); explicit flags win.  Every command writes a manifest recording
the command line, the effective configuration and SHA-256 digests of all
inputs and outputs; re-running the same command reproduces the artifacts
byte for byte (manifest wall-clock aside).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .alist import read_alist, write_alist
from .cycles import girth_conv, girth_qc
from .manifest import RunManifest, dump_json
from .memopt import minimize_memory, theta_lifting, theta_memory
from .model import (
    ConvCodeSpec,
    ExponentMatrix,
    expand_to_binary,
    to_conv_spec,
)
from .oracle import girth_oracle
from .search import SearchConfig, greedy_search, min_lifting_degree
from .sim import FULL_BP, SLIDING_WINDOW, SimConfig, run_ber

EXIT_OK = 0
EXIT_INFEASIBLE = 2
EXIT_VALIDATION = 3
EXIT_IO = 4

_DECODER_NAMES = {"full": FULL_BP, "full-bp": FULL_BP, "sw": SLIDING_WINDOW,
                  "sliding-window": SLIDING_WINDOW}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are validation failures, not infeasibility
        print(f"usage error: {message}", file=sys.stderr)
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def _env_default(name: str, fallback, cast):
    raw = os.environ.get(f"GIRTHFORGE_{name}")
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        print(f"invalid GIRTHFORGE_{name}={raw!r}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def _parse_snr(text: str) -> tuple[float, ...]:
    """Either a comma list '1.0,2.0' or an inclusive range 'start:step:stop'."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"SNR range must be start:step:stop, got {text!r}")
        start, step, stop = (float(p) for p in parts)
        if step <= 0:
            raise ValueError("SNR step must be positive")
        count = int(round((stop - start) / step)) + 1
        points = tuple(round(start + i * step, 10) for i in range(max(count, 1)))
        return tuple(p for p in points if p <= stop + 1e-9)
    return tuple(float(p) for p in text.split(","))


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    if not hi:
        raise ValueError(f"range must be lo:hi, got {text!r}")
    return int(lo), int(hi)


def _load_json(path: Path) -> dict:
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from exc


def _load_exponent_matrix(path: Path) -> ExponentMatrix:
    data = _load_json(path)
    if "exponent_matrix" in data:
        data = data["exponent_matrix"]
    return ExponentMatrix.from_json_dict(data)


def _load_code(path: Path):
    """A simulation target: conv spec, exponent matrix or alist parity check."""
    if path.suffix == ".alist":
        return read_alist(path)
    data = _load_json(path)
    if "conv_spec" in data:
        return ConvCodeSpec.from_json_dict(data["conv_spec"])
    if "exponents" in data:
        return ConvCodeSpec.from_json_dict(data)
    if "exponent_matrix" in data:
        return ExponentMatrix.from_json_dict(data["exponent_matrix"])
    return ExponentMatrix.from_json_dict(data)


def _write_curve_csv(path: Path, rows: list[dict]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["snr_db", "ber", "fer", "avg_iter", "frames"])
        for row in rows:
            writer.writerow(
                [
                    f"{row['snr_db']:g}",
                    f"{row['ber']:.6e}",
                    f"{row['fer']:.6e}",
                    f"{row['avg_iter']:.4f}",
                    row["frames"],
                ]
            )


def _manifest(args, config: dict) -> RunManifest:
    return RunManifest(
        command=[Path(sys.argv[0]).name] + sys.argv[1:],
        config=config,
        version=__version__,
        seed=getattr(args, "seed", None),
    )


def _out_dir(args) -> Path:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


# ---------------------------------------------------------------- search


def _search_outcome_payload(outcome, N: int) -> dict:
    matrix = outcome.matrix
    report = girth_qc(matrix)
    return {
        "exponent_matrix": matrix.to_json_dict(),
        "smc_spec": outcome.spec.to_json_dict(),
        "girth": report.to_json_dict(),
        "stats": outcome.stats,
        "N": N,
    }


def cmd_search(args) -> int:
    if args.N is None and args.min_N is None:
        raise ValueError("provide --N or --min-N")
    manifest = _manifest(args, {
        "m": args.m, "n": args.n, "girth": args.girth, "N": args.N,
        "min_N": args.min_N, "backtrack_base": args.backtrack_base,
    })
    t0 = time.time()
    if args.min_N is not None:
        lo, hi = _parse_range(args.min_N)
        N, outcome = min_lifting_degree(args.m, args.n, args.girth // 2, lo, hi,
                                        backtrack_base=args.backtrack_base)
        if N is None:
            print(f"infeasible: no lifting degree in {lo}..{hi} reaches girth {args.girth}",
                  file=sys.stderr)
            return EXIT_INFEASIBLE
    else:
        N = args.N
        cfg = SearchConfig.for_girth(args.m, args.n, N, args.girth,
                                     backtrack_base=args.backtrack_base)
        outcome = greedy_search(cfg)
        if not outcome.found:
            print(f"infeasible: no SMC matrix of girth {args.girth} at N={N}", file=sys.stderr)
            return EXIT_INFEASIBLE
    out = _out_dir(args) / args.out
    dump_json(out, _search_outcome_payload(outcome, N))
    manifest.record_output(out)
    manifest.wall_clock_s = time.time() - t0
    manifest.write(out.with_suffix(out.suffix + ".manifest.json"))
    print(f"found girth-{args.girth} design at N={N}: {out}")
    return EXIT_OK


# ---------------------------------------------------------------- minimize-mh


def cmd_minimize_mh(args) -> int:
    manifest = _manifest(args, {"in": args.input, "girth": args.girth, "budget": args.budget})
    t0 = time.time()
    src = Path(args.input)
    matrix = _load_exponent_matrix(src)
    manifest.record_input(src)
    k = args.girth // 2 - 1
    lift = minimize_memory(matrix, k, budget=int(args.budget), seed=args.seed or 0)
    spec = lift.conv_spec()
    certification = girth_conv(spec, max_half_length=k)
    payload = {
        "conv_spec": spec.to_json_dict(),
        "offsets": lift.offsets.tolist(),
        "girth_conv": certification.to_json_dict(),
        "source": src.name,
    }
    out = _out_dir(args) / args.out
    dump_json(out, payload)
    manifest.record_output(out)
    manifest.wall_clock_s = time.time() - t0
    manifest.write(out.with_suffix(out.suffix + ".manifest.json"))
    print(f"m_h={spec.memory_order} v_s={spec.constraint_length} "
          f"(girth_conv {certification}): {out}")
    return EXIT_OK


# ---------------------------------------------------------------- expand


def cmd_expand(args) -> int:
    manifest = _manifest(args, {"in": args.input, "format": args.format})
    t0 = time.time()
    src = Path(args.input)
    matrix = _load_exponent_matrix(src)
    manifest.record_input(src)
    H = expand_to_binary(matrix)
    out = _out_dir(args) / args.out
    if args.format == "alist":
        write_alist(out, H)
    else:
        dump_json(out, {
            "row_count": H.row_count,
            "col_count": H.col_count,
            "support": sorted([r, c] for r, c in H.support),
        })
    manifest.record_output(out)
    manifest.wall_clock_s = time.time() - t0
    manifest.write(out.with_suffix(out.suffix + ".manifest.json"))
    print(f"{H.row_count} x {H.col_count} parity-check matrix: {out}")
    return EXIT_OK


# ---------------------------------------------------------------- girth


def cmd_girth(args) -> int:
    manifest = _manifest(args, {"in": args.input, "oracle": args.oracle, "conv": args.conv})
    t0 = time.time()
    src = Path(args.input)
    payload: dict = {}
    if src.suffix == ".alist":
        H = read_alist(src)
        manifest.record_input(src)
        payload["oracle_girth"] = girth_oracle(H)
    else:
        code = _load_code(src)
        manifest.record_input(src)
        if isinstance(code, ConvCodeSpec):
            payload.update(girth_conv(code).to_json_dict())
        elif args.conv or code.lifting_degree is None:
            payload.update(girth_conv(to_conv_spec(code)).to_json_dict())
        else:
            payload.update(girth_qc(code).to_json_dict())
            if args.oracle:
                payload["oracle_girth"] = girth_oracle(expand_to_binary(code))
    print(json.dumps(payload, sort_keys=True))
    if args.out:
        out = _out_dir(args) / args.out
        dump_json(out, payload)
        manifest.record_output(out)
        manifest.wall_clock_s = time.time() - t0
        manifest.write(out.with_suffix(out.suffix + ".manifest.json"))
    return EXIT_OK


# ---------------------------------------------------------------- simulate


def _sim_config(args) -> SimConfig:
    return SimConfig(
        snr_db_points=_parse_snr(args.snr),
        max_iterations=args.max_iter,
        codeword_length_target=args.target_length,
        window_alpha=args.alpha,
        rng_seed=args.seed or 0,
        min_bit_errors=args.min_errors,
        max_frames=args.max_frames,
        frame_batch=args.frame_batch,
        jobs=args.jobs,
    )


def cmd_simulate(args) -> int:
    decoder = _DECODER_NAMES[args.decoder]
    manifest = _manifest(args, {
        "code": args.code, "decoder": decoder, "alpha": args.alpha, "snr": args.snr,
        "max_iter": args.max_iter, "target_length": args.target_length,
        "min_errors": args.min_errors, "max_frames": args.max_frames,
    })
    t0 = time.time()
    src = Path(args.code)
    code = _load_code(src)
    manifest.record_input(src)
    curve = run_ber(code, _sim_config(args), decoder=decoder)
    out = _out_dir(args) / args.out
    _write_curve_csv(out, curve.csv_rows())
    manifest.record_output(out)
    manifest.wall_clock_s = time.time() - t0
    manifest.write(out.with_suffix(out.suffix + ".manifest.json"))
    for point in curve.points:
        print(f"snr={point.snr_db:g} ber={point.ber:.3e} fer={point.fer:.3e} "
              f"avg_iter={point.avg_iterations:.2f} frames={point.frames}")
    return EXIT_OK


# ---------------------------------------------------------------- pipeline


def cmd_pipeline(args) -> int:
    manifest = _manifest(args, {
        "m": args.m, "n": args.n, "girth": args.girth, "N": args.N, "min_N": args.min_N,
        "alpha": args.alpha, "snr": args.snr, "budget": args.budget,
        "ref_mh": args.ref_mh, "ref_N": args.ref_N, "decoder": args.decoder,
    })
    t0 = time.time()
    out_dir = _out_dir(args)
    bundle: dict = {"stages": {}}

    def fail(stage: str, code: int, message: str) -> int:
        print(f"pipeline aborted at stage {stage}: {message}", file=sys.stderr)
        return code

    # search
    if args.N is None and args.min_N is None:
        raise ValueError("provide --N or --min-N")
    if args.min_N is not None:
        lo, hi = _parse_range(args.min_N)
        N, outcome = min_lifting_degree(args.m, args.n, args.girth // 2, lo, hi,
                                        backtrack_base=args.backtrack_base)
        if N is None:
            return fail("search", EXIT_INFEASIBLE, f"no feasible N in {lo}..{hi}")
    else:
        N = args.N
        outcome = greedy_search(SearchConfig.for_girth(args.m, args.n, N, args.girth,
                                                       backtrack_base=args.backtrack_base))
        if not outcome.found:
            return fail("search", EXIT_INFEASIBLE, f"girth {args.girth} infeasible at N={N}")
    spec_path = out_dir / "spec.json"
    dump_json(spec_path, _search_outcome_payload(outcome, N))
    manifest.record_output(spec_path)
    bundle["stages"]["search"] = {"N": N, "artifact": spec_path.name,
                                  "stats": outcome.stats}

    # minimize-mh
    k = args.girth // 2 - 1
    lift = minimize_memory(outcome.matrix, k, budget=int(args.budget), seed=args.seed or 0)
    conv = lift.conv_spec()
    conv_path = out_dir / "conv.json"
    dump_json(conv_path, {
        "conv_spec": conv.to_json_dict(),
        "offsets": lift.offsets.tolist(),
        "girth_conv": girth_conv(conv, max_half_length=k).to_json_dict(),
        "source": spec_path.name,
    })
    manifest.record_output(conv_path)
    bundle["stages"]["minimize"] = {
        "m_h": conv.memory_order, "v_s": conv.constraint_length, "artifact": conv_path.name,
    }

    # expand + girth certification from both checkers
    H = expand_to_binary(outcome.matrix)
    alist_path = out_dir / "code.alist"
    write_alist(alist_path, H)
    manifest.record_output(alist_path)
    relation_report = girth_qc(outcome.matrix)
    oracle_girth = girth_oracle(H)
    girth_path = out_dir / "girth.json"
    dump_json(girth_path, {
        "relation": relation_report.to_json_dict(),
        "oracle": oracle_girth,
        "agree": relation_report.girth == oracle_girth,
    })
    manifest.record_output(girth_path)
    bundle["stages"]["girth"] = {
        "relation": str(relation_report), "oracle": oracle_girth, "artifact": girth_path.name,
    }
    if relation_report.girth is not None and relation_report.girth < args.girth:
        return fail("girth", EXIT_VALIDATION,
                    f"certified girth {relation_report.girth} below target {args.girth}")

    # simulate
    decoder = _DECODER_NAMES[args.decoder]
    curve = run_ber(conv if decoder == SLIDING_WINDOW else _pipeline_sim_code(args, outcome, conv),
                    _sim_config(args), decoder=decoder)
    curve_path = out_dir / "curve.csv"
    _write_curve_csv(curve_path, curve.csv_rows())
    manifest.record_output(curve_path)
    bundle["stages"]["simulate"] = {
        "decoder": decoder, "artifact": curve_path.name,
        "points": curve.csv_rows(),
    }

    # compactness ratios against a user-supplied reference
    theta: dict = {}
    if args.ref_mh is not None:
        theta["theta_mh"] = round(theta_memory(conv.memory_order, args.ref_mh), 2)
    if args.ref_N is not None:
        theta["theta_N"] = round(theta_lifting(N, args.ref_N), 2)
    if theta:
        bundle["theta"] = theta

    bundle_path = out_dir / "bundle.json"
    dump_json(bundle_path, bundle)
    manifest.record_output(bundle_path)
    manifest.wall_clock_s = time.time() - t0
    manifest.write(out_dir / "manifest.json")
    print(f"pipeline bundle: {bundle_path}")
    return EXIT_OK


def _pipeline_sim_code(args, outcome, conv):
    return conv if args.sim_code == "conv" else outcome.matrix


def _rate_string(num: int, den: int) -> str:
    from math import gcd

    g = gcd(num, den) or 1
    return f"{num // g}/{den // g}"


# ---------------------------------------------------------------- report


def cmd_report(args) -> int:
    if not args.curves and not args.specs:
        raise ValueError("report needs at least one --curves or --specs input")
    manifest = _manifest(args, {"curves": args.curves, "specs": args.specs})
    t0 = time.time()
    out_dir = _out_dir(args)
    written: list[Path] = []

    if args.curves:
        curves = []
        for curve_file in args.curves:
            path = Path(curve_file)
            manifest.record_input(path)
            with open(path, newline="") as fh:
                rows = [
                    {"snr_db": float(r["snr_db"]), "ber": float(r["ber"]),
                     "fer": float(r["fer"]), "avg_iter": float(r["avg_iter"]),
                     "frames": int(r["frames"])}
                    for r in csv.DictReader(fh)
                ]
            curves.append((path.stem, rows))
        from .plotting import plot_ber_curves

        fig_path = out_dir / "ber_curves.png"
        plot_ber_curves(curves, fig_path)
        written.append(fig_path)
        merged = out_dir / "curves.csv"
        with open(merged, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["label", "snr_db", "ber", "fer", "avg_iter", "frames"])
            for label, rows in curves:
                for row in rows:
                    writer.writerow([label, f"{row['snr_db']:g}", f"{row['ber']:.6e}",
                                     f"{row['fer']:.6e}", f"{row['avg_iter']:.4f}",
                                     row["frames"]])
        written.append(merged)

    if args.specs:
        summary_rows = []
        lifting_series: dict[str, list[tuple[int, int]]] = {}
        memory_series: dict[str, list[tuple[int, int]]] = {}
        for spec_file in args.specs:
            path = Path(spec_file)
            manifest.record_input(path)
            data = _load_json(path)
            if "conv_spec" in data or "exponents" in data:
                spec = ConvCodeSpec.from_json_dict(data.get("conv_spec", data))
                summary_rows.append({
                    "file": path.name, "kind": "convolutional",
                    "rows": spec.check_rows, "cols": spec.bit_cols,
                    "N": spec.lifting_degree or "",
                    "m_h": spec.memory_order, "v_s": spec.constraint_length,
                    "rate": _rate_string(spec.rate.numerator, spec.rate.denominator),
                    "girth": "",
                })
                memory_series.setdefault(f"c={spec.check_rows}", []).append(
                    (spec.bit_cols, spec.memory_order))
            else:
                matrix = _load_exponent_matrix(path)
                girth = girth_qc(matrix) if matrix.lifting_degree else None
                summary_rows.append({
                    "file": path.name, "kind": "qc-block",
                    "rows": matrix.m, "cols": matrix.n,
                    "N": matrix.lifting_degree or "",
                    "m_h": "", "v_s": "",
                    "rate": _rate_string(matrix.n - matrix.m, matrix.n),
                    "girth": str(girth) if girth else "",
                })
                if matrix.lifting_degree:
                    lifting_series.setdefault(f"m={matrix.m}", []).append(
                        (matrix.n, matrix.lifting_degree))
        summary = out_dir / "summary.csv"
        with open(summary, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=["file", "kind", "rows", "cols", "N",
                                                    "m_h", "v_s", "rate", "girth"])
            writer.writeheader()
            writer.writerows(summary_rows)
        written.append(summary)
        from .plotting import plot_sweep

        if lifting_series:
            sweep = out_dir / "sweep_lifting.csv"
            with open(sweep, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["m", "n", "N"])
                for label, pts in sorted(lifting_series.items()):
                    for n, N in sorted(pts):
                        writer.writerow([label.partition("=")[2], n, N])
            written.append(sweep)
            fig = out_dir / "sweep_lifting.png"
            plot_sweep(lifting_series, "columns n", "lifting degree N", fig)
            written.append(fig)
        if memory_series:
            sweep = out_dir / "sweep_memory.csv"
            with open(sweep, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["c", "a", "m_h"])
                for label, pts in sorted(memory_series.items()):
                    for a, mh in sorted(pts):
                        writer.writerow([label.partition("=")[2], a, mh])
            written.append(sweep)
            fig = out_dir / "sweep_memory.png"
            plot_sweep(memory_series, "bit columns a", "memory order $m_h$", fig)
            written.append(fig)

    for path in written:
        manifest.record_output(path)
    manifest.wall_clock_s = time.time() - t0
    manifest.write(out_dir / "report.manifest.json")
    print("\n".join(str(p) for p in written))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="girthforge",
        description="Compact large-girth QC-LDPC block codes and spatially coupled "
                    "convolutional codes: search, memory minimization, certification "
                    "and Monte Carlo simulation.",
        epilog="Global flags may come from the environment: GIRTHFORGE_SEED, "
               "GIRTHFORGE_JOBS, GIRTHFORGE_OUT_DIR. Exit codes: 0 ok, 2 infeasible, "
               "3 validation failure, 4 I/O failure.",
    )
    parser.add_argument("--version", action="version", version=f"girthforge {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=_env_default("SEED", None, int),
                        help="seed for all randomized stages (env GIRTHFORGE_SEED)")
    common.add_argument("--jobs", type=int, default=_env_default("JOBS", 1, int),
                        help="parallel workers for frame batches (env GIRTHFORGE_JOBS)")
    common.add_argument("--out-dir", default=_env_default("OUT_DIR", ".", str),
                        help="directory for artifacts (env GIRTHFORGE_OUT_DIR)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", parents=[common],
                       help="greedy SMC search for a girth-g exponent matrix")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--girth", type=int, required=True, choices=(4, 6, 8, 10, 12))
    p.add_argument("--N", type=int, default=None, help="lifting degree to try")
    p.add_argument("--min-N", default=None, metavar="LO:HI",
                   help="scan this range for the smallest feasible lifting degree")
    p.add_argument("--backtrack-base", dest="backtrack_base",
                   action=argparse.BooleanOptionalAction, default=True,
                   help="move to the next base column when one is exhausted")
    p.add_argument("--out", default="spec.json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("minimize-mh", parents=[common],
                       help="minimize syndrome former memory of a girth-certified design")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--girth", type=int, required=True, choices=(6, 8, 10, 12),
                   help="girth the convolutional lift must retain")
    p.add_argument("--budget", type=float, default=1e4, help="descent step budget")
    p.add_argument("--out", default="conv.json")
    p.set_defaults(func=cmd_minimize_mh)

    p = sub.add_parser("expand", parents=[common],
                       help="lift an exponent matrix to its binary parity-check matrix")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=("alist", "json"), default="alist")
    p.add_argument("--out", default="code.alist")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("girth", parents=[common],
                       help="girth report (relation check; optionally the BFS oracle)")
    p.add_argument("--in", dest="input", required=True,
                   help="spec JSON, exponent-matrix JSON or .alist file")
    p.add_argument("--oracle", action="store_true",
                   help="also run the BFS oracle on the lifted graph")
    p.add_argument("--conv", action="store_true",
                   help="treat entries as unreduced convolutional exponents")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo BER over AWGN/BPSK")
    p.add_argument("--code", required=True, help="conv JSON, spec JSON or .alist")
    p.add_argument("--decoder", choices=sorted(_DECODER_NAMES), default="full")
    p.add_argument("--alpha", type=int, default=5, help="window size multiplier")
    p.add_argument("--snr", required=True, help="dB list '1,2' or range 'start:step:stop'")
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--target-length", type=int, default=10_000)
    p.add_argument("--min-errors", type=int, default=100)
    p.add_argument("--max-frames", type=int, default=100_000)
    p.add_argument("--frame-batch", type=int, default=20)
    p.add_argument("--out", default="curve.csv")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("pipeline", parents=[common],
                       help="search, minimize, expand, certify and simulate one design point")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--girth", type=int, required=True, choices=(4, 6, 8, 10, 12))
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--min-N", default=None, metavar="LO:HI")
    p.add_argument("--backtrack-base", dest="backtrack_base",
                   action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--budget", type=float, default=1e4)
    p.add_argument("--decoder", choices=sorted(_DECODER_NAMES), default="sw")
    p.add_argument("--sim-code", choices=("conv", "qc"), default="conv",
                   help="which object the full-bp decoder simulates")
    p.add_argument("--alpha", type=int, default=5)
    p.add_argument("--snr", default="1.0:1.0:3.0")
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--target-length", type=int, default=10_000)
    p.add_argument("--min-errors", type=int, default=100)
    p.add_argument("--max-frames", type=int, default=10_000)
    p.add_argument("--frame-batch", type=int, default=20)
    p.add_argument("--ref-mh", type=int, default=None,
                   help="reference memory order for the theta ratio")
    p.add_argument("--ref-N", type=int, default=None,
                   help="reference lifting degree for the theta ratio")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("report", parents=[common],
                       help="summaries, sweep CSVs and figures from existing artifacts")
    p.add_argument("--curves", nargs="*", default=[], help="curve CSV files to overlay")
    p.add_argument("--specs", nargs="*", default=[], help="spec/conv JSON files to summarize")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
