"""Stepped Rx-power sweeps toward the noise floor, with theory oracles.

Each step derives its SNR from the configured noise floor, runs random
symbols through AWGN, and reports EVM (both data-aided and
decision-directed), symbol and bit error fractions, plus a slice of the
noisy constellation for plotting. Per-step random streams are derived by
seeding from (seed, step index), so steps are order-independent and a
config reruns to identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .channel import AwgnChannel, NoiseFloorModel, apply_awgn, snr_from_rx_power, thermal_noise_floor
from .errors import ConfigError, InputError
from .evm import evm_decision_directed, evm_report
from .modulation import ModulationScheme, NormalizationMode, hard_decision_labels, ideal_points
from .units import db_to_linear


@dataclass(frozen=True)
class SweepConfig:
    scheme: ModulationScheme
    floor: NoiseFloorModel
    start_dbm: float
    stop_dbm: float
    step_db: float
    symbols_per_step: int
    seed: int = 0
    constellation_sample_count: int = 2000
    mode: NormalizationMode = NormalizationMode.UNIT_POWER
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if not (math.isfinite(self.start_dbm) and math.isfinite(self.stop_dbm)):
            raise ConfigError("start_dbm and stop_dbm must be finite")
        if self.start_dbm < self.stop_dbm:
            raise ConfigError(
                f"sweep must descend: start_dbm {self.start_dbm} < stop_dbm {self.stop_dbm}"
            )
        if not (math.isfinite(self.step_db) and self.step_db > 0):
            raise ConfigError(f"step_db must be finite and > 0, got {self.step_db}")
        if self.symbols_per_step < 1:
            raise ConfigError(f"symbols_per_step must be >= 1, got {self.symbols_per_step}")
        if self.constellation_sample_count < 0:
            raise ConfigError(
                f"constellation_sample_count must be >= 0, got {self.constellation_sample_count}"
            )
        if not 0 <= int(self.seed) < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def num_steps(self) -> int:
        return int(math.floor((self.start_dbm - self.stop_dbm) / self.step_db + 1e-9)) + 1

    def power_steps(self) -> list[float]:
        return [self.start_dbm - i * self.step_db for i in range(self.num_steps)]


@dataclass(frozen=True, eq=False)
class SweepStepResult:
    rx_power_dbm: float
    snr_db: float
    evm_percent_data_aided: float
    evm_percent_decision_directed: float
    ser: float
    ber: float
    sampled_points: np.ndarray


@dataclass(frozen=True)
class TheoryPoint:
    snr_db: float
    evm_percent_theory: float
    ser_theory: float
    ber_theory: float


def q_function(x: float) -> float:
    """Gaussian tail probability Q(x) = 0.5 * erfc(x / sqrt(2))."""
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x}")
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def theory_point(scheme: ModulationScheme, snr_db: float) -> TheoryPoint:
    """Closed-form EVM/SER/BER for a unit-power constellation over AWGN.

    EVM is the data-aided 100/sqrt(snr) law. QPSK SER and BER are exact;
    square-QAM SER is exact while its BER uses the Gray approximation
    SER / bits_per_symbol, which is accurate only where symbol errors
    land on lattice neighbours (high SNR).
    """
    if snr_db == math.inf:
        return TheoryPoint(snr_db=snr_db, evm_percent_theory=0.0, ser_theory=0.0, ber_theory=0.0)
    snr = db_to_linear(snr_db)
    evm_percent = 100.0 / math.sqrt(snr)
    if scheme is ModulationScheme.QPSK:
        q = q_function(math.sqrt(snr))
        ser = 2.0 * q - q * q
        ber = q
    else:
        m = scheme.order
        per_axis = 2.0 * (1.0 - 1.0 / math.sqrt(m)) * q_function(math.sqrt(3.0 * snr / (m - 1)))
        ser = 1.0 - (1.0 - per_axis) ** 2
        ber = ser / scheme.bits_per_symbol
    return TheoryPoint(snr_db=snr_db, evm_percent_theory=evm_percent, ser_theory=ser, ber_theory=ber)


def run_sweep(config: SweepConfig) -> list[SweepStepResult]:
    """Simulate every power step of the sweep; deterministic per config."""
    spec = ideal_points(config.scheme, config.mode)
    floor_dbm = thermal_noise_floor(config.floor)
    bits_per_symbol = config.scheme.bits_per_symbol
    results = []
    for index, rx_dbm in enumerate(config.power_steps()):
        snr_db = snr_from_rx_power(rx_dbm, floor_dbm)
        symbol_stream, noise_stream = np.random.SeedSequence([config.seed, index]).spawn(2)
        sent_labels = np.random.default_rng(symbol_stream).integers(
            0, spec.order, size=config.symbols_per_step, dtype=np.int64
        )
        sent = spec.points[sent_labels]
        channel = AwgnChannel(
            snr_db=snr_db,
            seed=int(noise_stream.generate_state(1, np.uint64)[0]),
            signal_power=spec.ref_rms**2,
        )
        noisy = apply_awgn(sent, channel)
        decided_labels = hard_decision_labels(noisy, spec)
        n = config.symbols_per_step
        results.append(
            SweepStepResult(
                rx_power_dbm=rx_dbm,
                snr_db=snr_db,
                evm_percent_data_aided=evm_report(noisy, sent, spec.ref_rms).evm_percent,
                evm_percent_decision_directed=evm_decision_directed(noisy, spec).evm_percent,
                ser=int(np.count_nonzero(decided_labels != sent_labels)) / n,
                ber=_kernels.count_bit_errors(sent_labels, decided_labels) / (n * bits_per_symbol),
                sampled_points=noisy[: config.constellation_sample_count].copy(),
            )
        )
    return results


def sweep_config_from_dict(data: dict) -> SweepConfig:
    """Build a SweepConfig from a parsed JSON document, naming bad fields."""
    if not isinstance(data, dict):
        raise ConfigError(f"config root must be an object, got {type(data).__name__}")
    known = {
        "scheme",
        "floor",
        "start_dbm",
        "stop_dbm",
        "step_db",
        "symbols_per_step",
        "seed",
        "constellation_sample_count",
        "mode",
        "metadata",
    }
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")

    try:
        scheme = ModulationScheme.from_name(_require(data, "scheme", str))
    except InputError as exc:
        raise ConfigError(f"scheme: {exc}") from exc

    floor_data = _require(data, "floor", dict)
    floor_known = {"bandwidth_hz", "noise_figure_db", "temperature_k"}
    floor_unknown = sorted(set(floor_data) - floor_known)
    if floor_unknown:
        raise ConfigError(f"floor: unknown keys: {', '.join(floor_unknown)}")
    try:
        floor = NoiseFloorModel(
            bandwidth_hz=_require(floor_data, "bandwidth_hz", (int, float), prefix="floor."),
            noise_figure_db=_require(floor_data, "noise_figure_db", (int, float), prefix="floor."),
            temperature_k=_optional(floor_data, "temperature_k", (int, float), 290.0, prefix="floor."),
        )
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"floor: {exc}") from exc

    mode_name = _optional(data, "mode", str, NormalizationMode.UNIT_POWER.value)
    try:
        mode = NormalizationMode(mode_name)
    except ValueError:
        valid = ", ".join(m.value for m in NormalizationMode)
        raise ConfigError(f"mode: unknown mode {mode_name!r} (expected one of {valid})") from None

    metadata = _optional(data, "metadata", dict, {})
    return SweepConfig(
        scheme=scheme,
        floor=floor,
        start_dbm=_require(data, "start_dbm", (int, float)),
        stop_dbm=_require(data, "stop_dbm", (int, float)),
        step_db=_require(data, "step_db", (int, float)),
        symbols_per_step=_require(data, "symbols_per_step", int),
        seed=_optional(data, "seed", int, 0),
        constellation_sample_count=_optional(data, "constellation_sample_count", int, 2000),
        mode=mode,
        metadata=dict(metadata),
    )


def _require(data: dict, key: str, types, prefix: str = ""):
    if key not in data:
        raise ConfigError(f"{prefix}{key}: missing required field")
    return _typed(data[key], key, types, prefix)


def _optional(data: dict, key: str, types, default, prefix: str = ""):
    if key not in data:
        return default
    return _typed(data[key], key, types, prefix)


def _typed(value, key: str, types, prefix: str):
    # bool is an int subclass; never acceptable where a number is expected.
    if isinstance(value, bool) or not isinstance(value, types):
        wanted = types.__name__ if isinstance(types, type) else "number"
        raise ConfigError(f"{prefix}{key}: expected {wanted}, got {value!r}")
    return value
