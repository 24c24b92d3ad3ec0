"""Command-line interface.

Subcommands: synth, demodulate, baseline, benchmark, metrics.  Every run
echoes its manifest into the output directory so outputs are
reproducible bit-for-bit from manifest plus seed.

Exit codes: 0 success, 2 invalid input / malformed file, 3 solver
divergence.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
from pathlib import Path

import numpy as np

from .errors import DivergenceError, FormatError, InvalidInputError, PhaseRecError
from .fringes import FringeSet
from .grid import ScalarField
from .io import read_pfm, write_pfm, write_pgm
from .io.manifest import RunManifest
from .metrics import q_error, snr_db
from .scenarios import (
    evaluate,
    natural_domain,
    pixel_grid,
    recover,
    suggested_lambda,
    synthesize,
    truth_phase,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DIVERGED = 3

# reference SNR ladders for the two benchmark suites (dB; None = noiseless)
WAVEFRONT_SNRS = [None, 39.97, 27.98, 21.08]
PEAKS_SNRS = [None, 40.26, 28.22, 21.22, 14.44, 12.72]


def _write_report(path: Path, entries: dict) -> None:
    with open(path, "w") as fh:
        for k, v in entries.items():
            fh.write(f"{k} = {v}\n")


def _manifest_from_args(args) -> RunManifest:
    man = RunManifest.read(args.manifest) if getattr(args, "manifest", None) else RunManifest()
    if getattr(args, "generator", None):
        man.generator = args.generator
        man.a, man.b, man.c, man.d = natural_domain(man.generator)
    for attr, key in [
        ("scenario", "scenario"),
        ("snr", "snr_db"),
        ("noise_seed", "noise_seed"),
        ("lam", "lam"),
        ("kmax", "k_max"),
        ("init", "init"),
        ("seed", "init_seed"),
        ("method", "method"),
    ]:
        v = getattr(args, attr, None)
        if v is not None:
            setattr(man, key, v)
    if getattr(args, "size", None):
        try:
            w, h = (int(t) for t in args.size.lower().split("x"))
        except ValueError:
            raise InvalidInputError(f"--size expects WxH, got {args.size!r}")
        man.m, man.n = w, h
    if getattr(args, "domain", None):
        try:
            man.a, man.b, man.c, man.d = (float(t) for t in args.domain.split(","))
        except ValueError:
            raise InvalidInputError(f"--domain expects a,b,c,d, got {args.domain!r}")
    if getattr(args, "tau", None):
        man.tau = None if args.tau == "auto" else float(args.tau)
    if getattr(args, "delta", None) is not None:
        man.delta1 = man.delta2 = man.delta3 = args.delta
    if getattr(args, "out", None):
        man.out_dir = str(args.out)
    man.validate()
    return man


def _load_fringes(args) -> tuple[RunManifest, FringeSet, ScalarField | None]:
    """Load a fringe pair from a synth output directory or explicit files."""
    if args.fringes:
        src = Path(args.fringes)
        man = RunManifest.read(src / "manifest.txt")
        ic_path, is_path = src / "ic.pfm", src / "is.pfm"
        truth_path = src / "truth.pfm"
    else:
        if not (args.ic and args.is_):
            raise InvalidInputError("need --fringes DIR or both --ic and --is")
        if not args.manifest:
            raise InvalidInputError("--ic/--is input needs --manifest for grid geometry")
        man = RunManifest.read(args.manifest)
        ic_path, is_path = Path(args.ic), Path(args.is_)
        truth_path = Path(args.truth) if args.truth else None
    grid = pixel_grid(man.m, man.n)
    ic = read_pfm(ic_path).astype(np.float64)
    is_ = read_pfm(is_path).astype(np.float64)
    fringes = FringeSet.from_arrays(
        grid, ic, is_, provenance={"source": str(ic_path.parent)}
    )
    truth = None
    if truth_path and truth_path.exists():
        truth = ScalarField(grid, read_pfm(truth_path).astype(np.float64))
    return man, fringes, truth


def cmd_synth(args) -> int:
    man = _manifest_from_args(args)
    out = Path(man.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    truth, fringes = synthesize(man)
    write_pfm(out / "truth.pfm", truth.values)
    write_pfm(out / "ic.pfm", fringes.ic.values)
    write_pfm(out / "is.pfm", fringes.is_.values)
    write_pgm(out / "truth.pgm", truth.values)
    man.write(out / "manifest.txt")

    clean = FringeSet(truth.grid, *_clean_pair(truth))
    report = {
        "scenario": man.scenario,
        "generator": man.generator,
        "grid": f"{man.m}x{man.n}",
        "target_snr_db": man.snr_db if man.snr_db is not None else "inf",
        "measured_snr_ic_db": snr_db(clean.ic, fringes.ic),
        "measured_snr_is_db": snr_db(clean.is_, fringes.is_),
        "noise_seed": man.noise_seed,
    }
    _write_report(out / "report.txt", report)
    print(f"synth: wrote {out}/truth.pfm ic.pfm is.pfm (SNR {report['measured_snr_ic_db']})")
    return EXIT_OK


def _clean_pair(truth: ScalarField):
    return (
        ScalarField(truth.grid, np.cos(truth.values)),
        ScalarField(truth.grid, np.sin(truth.values)),
    )


def cmd_demodulate(args) -> int:
    man, fringes, truth = _load_fringes(args)
    # explicit CLI flags override the loaded manifest
    if args.lam is not None:
        man.lam = args.lam
    if args.tau:
        man.tau = None if args.tau == "auto" else float(args.tau)
    if args.delta is not None:
        man.delta1 = man.delta2 = man.delta3 = args.delta
    if args.kmax is not None:
        man.k_max = args.kmax
    if args.init:
        man.init = args.init
    if args.seed is not None:
        man.init_seed = args.seed
    if args.method:
        man.method = args.method
    man.out_dir = str(args.out)
    man.validate()
    out = Path(man.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    phi, solver_report = recover(man, fringes, log_csv=out / "iterations.csv")
    write_pfm(out / "phase.pfm", phi.values)
    write_pgm(out / "phase.pgm", phi.values)
    man.write(out / "manifest.txt")

    report = {"method": man.method, "lam": man.lam}
    if solver_report is not None:
        report.update(
            iterations=solver_report.iterations,
            stop_reason=solver_report.stop_reason,
            final_energy=solver_report.final_energy,
            wall_time_s=solver_report.wall_time,
            step_size=solver_report.step_size_used,
        )
    if truth is not None:
        report.update(evaluate(man, phi, truth))
        write_pfm(out / "absdiff.pfm", np.abs(phi.values - truth.values))
    _write_report(out / "report.txt", report)
    q = report.get("q", "n/a")
    print(f"{man.method}: iterations={report.get('iterations', 'n/a')} Q={q}")
    return EXIT_OK


def cmd_benchmark(args) -> int:
    suite = args.suite
    snrs = WAVEFRONT_SNRS if suite == "wavefront" else PEAKS_SNRS
    if args.snr:
        snrs = [None if s in ("inf", "none") else float(s) for s in args.snr.split(",")]
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    man = RunManifest(scenario=f"bench-{suite}", generator=suite, method="variational")
    man.a, man.b, man.c, man.d = natural_domain(suite)
    if args.size:
        w, h = (int(t) for t in args.size.lower().split("x"))
        man.m, man.n = w, h
    if args.lam is not None:
        man.lam = args.lam
    man.out_dir = str(out)
    man.write(out / "manifest.txt")

    rows = []
    for snr in snrs:
        seeds = [0] if snr is None else list(range(args.seeds))
        qs, its, measured = [], [], []
        status = "ok"
        for seed in seeds:
            man.snr_db = snr
            man.lam = args.lam if args.lam is not None else suggested_lambda(suite, snr)
            man.noise_seed = seed
            man.init_seed = 20211 + seed
            try:
                truth, fringes = synthesize(man)
                phi, rep = recover(man, fringes)
                qs.append(q_error(phi, truth))
                its.append(rep.iterations)
                m_snr = snr_db(_clean_pair(truth)[0], fringes.ic)
                measured.append(m_snr)
            except PhaseRecError as exc:
                status = f"failed: {exc}"
                print(f"benchmark row SNR={snr} seed={seed}: {exc}", file=sys.stderr)
        row = {
            "suite": suite,
            "snr_target_db": "inf" if snr is None else snr,
            "snr_measured_db": "inf" if not measured else f"{statistics.fmean(measured):.2f}",
            "seeds": len(qs),
            "iterations_mean": f"{statistics.fmean(its):.0f}" if its else "",
            "q_mean": f"{statistics.fmean(qs):.5f}" if qs else "",
            "q_sd": f"{statistics.stdev(qs):.5f}" if len(qs) > 1 else "0.00000" if qs else "",
            "status": status,
        }
        rows.append(row)
        print(
            f"{suite} SNR={row['snr_target_db']}: Q = {row['q_mean']} +/- {row['q_sd']} "
            f"({row['iterations_mean']} iters, {row['status']})"
        )

    table = out / "table.csv"
    with open(table, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        w.writeheader()
        w.writerows(rows)
    print(f"benchmark: wrote {table}")
    return EXIT_OK if all(r["status"] == "ok" for r in rows) else EXIT_INPUT


def cmd_metrics(args) -> int:
    ref = read_pfm(args.ref).astype(np.float64)
    est = read_pfm(args.est).astype(np.float64)
    if ref.shape != est.shape:
        raise InvalidInputError(f"shape mismatch: {ref.shape} vs {est.shape}")
    grid = pixel_grid(ref.shape[1], ref.shape[0])
    a = ScalarField(grid, ref)
    b = ScalarField(grid, est)
    from .metrics import mean_align

    print(f"q_raw = {q_error(a, b)}")
    print(f"q_mean_aligned = {q_error(a, mean_align(b, a))}")
    if args.snr:
        print(f"snr_db = {snr_db(a, b)}")
    return EXIT_OK


def _add_solver_flags(p):
    p.add_argument("--method", choices=["variational", "poisson", "lineintegral"])
    p.add_argument("--lam", type=float, help="smoothing weight (default 1.0)")
    p.add_argument("--tau", help="step size or 'auto'")
    p.add_argument("--delta", type=float, help="stopping tolerance for all three criteria")
    p.add_argument("--kmax", type=int, help="iteration cap")
    p.add_argument("--init", choices=["random", "zeros", "lineintegral"])
    p.add_argument("--seed", type=int, help="solver init seed")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="phaserec", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic fringe scenario")
    p.add_argument("--out", required=True)
    p.add_argument("--manifest", help="base manifest file")
    p.add_argument("--scenario")
    p.add_argument("--generator", choices=["wavefront", "peaks"])
    p.add_argument("--size", help="WxH, default 640x480")
    p.add_argument("--domain", help="a,b,c,d evaluation rectangle")
    p.add_argument("--snr", type=float, help="target SNR in dB (omit for noiseless)")
    p.add_argument("--noise-seed", type=int, dest="noise_seed")
    p.set_defaults(fn=cmd_synth)

    for name, default_method in [("demodulate", None), ("baseline", "poisson")]:
        p = sub.add_parser(name, help=f"recover phase from a fringe pair ({name})")
        p.add_argument("--fringes", help="directory produced by synth")
        p.add_argument("--ic", help="I^c PFM file")
        p.add_argument("--is", dest="is_", help="I^s PFM file")
        p.add_argument("--truth", help="optional truth PFM for error reporting")
        p.add_argument("--manifest", help="manifest for grid geometry (with --ic/--is)")
        p.add_argument("--out", required=True)
        _add_solver_flags(p)
        p.set_defaults(fn=cmd_demodulate, method_default=default_method)

    p = sub.add_parser("benchmark", help="run an SNR sweep over a benchmark suite")
    p.add_argument("--suite", choices=["wavefront", "peaks"], required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--size", help="WxH, default 640x480")
    p.add_argument("--snr", help="comma list of SNRs (dB or 'inf') overriding the suite")
    p.add_argument("--lam", type=float)
    p.set_defaults(fn=cmd_benchmark)

    p = sub.add_parser("metrics", help="compare two PFM fields")
    p.add_argument("--ref", required=True)
    p.add_argument("--est", required=True)
    p.add_argument("--snr", action="store_true", help="also report SNR of est vs ref")
    p.set_defaults(fn=cmd_metrics)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "method", None) is None and getattr(args, "method_default", None):
        args.method = args.method_default
    try:
        return args.fn(args)
    except DivergenceError as exc:
        print(f"error: solver diverged: {exc}", file=sys.stderr)
        return EXIT_DIVERGED
    except (InvalidInputError, FormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
