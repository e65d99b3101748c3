"""Command-line front end: EVM, desense analysis, sweeps, constellation plots.

Exit codes: 0 success, 1 input or data-format error, 2 configuration or
usage error, 3 internal error. Output files are written to a temporary
name and renamed into place only when the whole command has succeeded,
so a failing run leaves no partial outputs behind.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import __version__, _kernels
from .channel import AwgnChannel, apply_awgn
from .desense import compute_desense, emit_desense_csv, parse_sensitivity_csv, summarize
from .errors import ConfigError, FormatError, InputError, RxkitError
from .evm import evm_report
from .iqcsv import read_iq_csv
from .modulation import ModulationScheme, NormalizationMode, ideal_points
from .svg import constellation_svg
from .sweep import run_sweep, sweep_config_from_dict, theory_point

_SWEEP_CSV_COLUMNS = (
    "rx_dbm",
    "snr_db",
    "evm_da_pct",
    "evm_dd_pct",
    "ser",
    "ber",
    "evm_theory_pct",
    "ser_theory",
    "ber_theory",
)


class _StagedOutputs:
    """Collects output files as temporaries, renamed in one commit."""

    def __init__(self):
        self._staged: list[tuple[str, Path]] = []

    def stage(self, path: Path, text: str) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        self._staged.append((tmp, path))

    def commit(self) -> None:
        for tmp, path in self._staged:
            os.replace(tmp, path)
        self._staged.clear()

    def abort(self) -> None:
        for tmp, _ in self._staged:
            try:
                os.unlink(tmp)
            except OSError:
                pass
        self._staged.clear()


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def cmd_evm(args) -> int:
    ref = read_iq_csv(_read_text(args.ref_file))
    meas = read_iq_csv(_read_text(args.meas_file))
    if ref.size != meas.size:
        raise InputError(
            f"row counts differ: {args.ref_file} has {ref.size}, {args.meas_file} has {meas.size}"
        )
    if args.ref_rms is not None:
        if not (math.isfinite(args.ref_rms) and args.ref_rms > 0):
            raise ConfigError(f"--ref-rms must be finite and > 0, got {args.ref_rms}")
        ref_rms = args.ref_rms
    else:
        ref_rms = float(np.sqrt(np.mean(ref.real**2 + ref.imag**2)))
        if ref_rms <= 0:
            raise InputError("reference frame has zero RMS; pass --ref-rms explicitly")
    report = evm_report(meas, ref, ref_rms)
    print(f"num_symbols: {report.num_symbols}")
    print(f"ref_rms: {report.ref_rms:.7f}")
    print("per_symbol_error: " + " ".join(f"{m:.7f}" for m in report.per_symbol_error))
    print(f"evm_rms: {report.evm_rms:.7f}")
    print(f"evm_percent: {report.evm_percent:.4f}")
    print(f"evm_db: {report.evm_db:.4f}")
    return 0


def cmd_desense(args) -> int:
    off = parse_sensitivity_csv(_read_text(args.off_file))
    on = parse_sensitivity_csv(_read_text(args.on_file))
    rows = compute_desense(off, on)
    outputs = _StagedOutputs()
    try:
        outputs.stage(Path(args.out_file), emit_desense_csv(rows))
        outputs.commit()
    except BaseException:
        outputs.abort()
        raise
    summary = summarize(rows)
    antennas = ", ".join(summary.per_antenna)
    print(f"wrote {args.out_file}: {len(rows)} rows, antennas {antennas}")
    for name, stats in summary.per_antenna.items():
        print(
            f"{name}: min {stats.min_db:.2f} dB, mean {stats.mean_db:.2f} dB, "
            f"max {stats.max_db:.2f} dB, worst at {stats.worst_freq_mhz:g} MHz"
        )
    print(f"worst antenna: {summary.worst_antenna}")
    return 0


def cmd_sweep(args) -> int:
    try:
        data = json.loads(_read_text(args.config_file))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{args.config_file} is not valid JSON: {exc}") from exc
    config = sweep_config_from_dict(data)
    results = run_sweep(config)
    spec = ideal_points(config.scheme, config.mode)

    out_dir = Path(args.out_dir)
    lines = [",".join(_SWEEP_CSV_COLUMNS)]
    outputs = _StagedOutputs()
    try:
        for step in results:
            theory = theory_point(config.scheme, step.snr_db)
            lines.append(
                ",".join(
                    repr(float(value))
                    for value in (
                        step.rx_power_dbm,
                        step.snr_db,
                        step.evm_percent_data_aided,
                        step.evm_percent_decision_directed,
                        step.ser,
                        step.ber,
                        theory.evm_percent_theory,
                        theory.ser_theory,
                        theory.ber_theory,
                    )
                )
            )
            svg_text = constellation_svg(
                spec.points,
                step.sampled_points,
                title=(
                    f"{config.scheme.name} at {step.rx_power_dbm:g} dBm "
                    f"(SNR {step.snr_db:.2f} dB)"
                ),
            )
            outputs.stage(out_dir / f"constellation_{step.rx_power_dbm:g}.svg", svg_text)
        outputs.stage(out_dir / "sweep.csv", "\n".join(lines) + "\n")
        outputs.commit()
    except BaseException:
        outputs.abort()
        raise

    for step in results:
        print(
            f"rx {step.rx_power_dbm:g} dBm  snr {step.snr_db:.3f} dB  "
            f"evm_da {step.evm_percent_data_aided:.3f}%  "
            f"evm_dd {step.evm_percent_decision_directed:.3f}%  "
            f"ser {step.ser:.3e}  ber {step.ber:.3e}"
        )
    print(f"wrote {out_dir / 'sweep.csv'} and {len(results)} constellation SVG files")
    return 0


def cmd_constellation(args) -> int:
    try:
        scheme = ModulationScheme.from_name(args.scheme)
    except InputError as exc:
        raise ConfigError(str(exc)) from exc
    mode = NormalizationMode(args.mode)
    spec = ideal_points(scheme, mode)
    if args.snr_db is not None:
        labels = np.random.default_rng(args.seed).integers(0, spec.order, size=args.symbols)
        channel = AwgnChannel(snr_db=args.snr_db, seed=args.seed, signal_power=spec.ref_rms**2)
        samples = apply_awgn(spec.points[labels], channel)
        title = f"{scheme.name} at SNR {args.snr_db:g} dB"
    else:
        samples = np.empty(0, dtype=np.complex128)
        title = f"{scheme.name} ideal constellation"
    outputs = _StagedOutputs()
    try:
        outputs.stage(Path(args.out_file), constellation_svg(spec.points, samples, title=title))
        outputs.commit()
    except BaseException:
        outputs.abort()
        raise
    print(f"wrote {args.out_file}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rxkit",
        description="RF link-quality toolkit: EVM, desense analysis, and noise-floor sweeps.",
    )
    parser.add_argument(
        "--version", action="version", version=f"rxkit {__version__} (kernels: {_kernels.BACKEND})"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_evm = sub.add_parser("evm", help="EVM of a measured IQ file against a reference IQ file")
    p_evm.add_argument("ref_file", help="reference IQ CSV (header i,q)")
    p_evm.add_argument("meas_file", help="measured IQ CSV (header i,q)")
    p_evm.add_argument(
        "--ref-rms",
        type=float,
        default=None,
        help="normalization reference RMS (default: RMS of the reference file)",
    )
    p_evm.set_defaults(func=cmd_evm)

    p_des = sub.add_parser("desense", help="per-antenna ON - OFF sensitivity deltas")
    p_des.add_argument("off_file", help="baseline (aggressor OFF) sensitivity CSV")
    p_des.add_argument("on_file", help="aggressor ON sensitivity CSV")
    p_des.add_argument("out_file", help="output desense CSV path")
    p_des.set_defaults(func=cmd_desense)

    p_sweep = sub.add_parser("sweep", help="run a stepped Rx-power sweep from a JSON config")
    p_sweep.add_argument("config_file", help="sweep config JSON")
    p_sweep.add_argument("out_dir", help="directory for sweep.csv and per-step SVGs")
    p_sweep.set_defaults(func=cmd_sweep)

    p_con = sub.add_parser("constellation", help="render a constellation to SVG")
    p_con.add_argument("scheme", help="modulation scheme (QPSK, QAM16, QAM64, QAM256)")
    p_con.add_argument("out_file", help="output SVG path")
    p_con.add_argument("--snr-db", type=float, default=None, help="add noisy samples at this SNR")
    p_con.add_argument("--symbols", type=int, default=2000, help="noisy sample count (default 2000)")
    p_con.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p_con.add_argument(
        "--mode",
        choices=[m.value for m in NormalizationMode],
        default=NormalizationMode.UNIT_POWER.value,
        help="constellation normalization (default unit_power)",
    )
    p_con.set_defaults(func=cmd_constellation)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except RxkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
