"""Receiver noise floor and AWGN application to symbol frames.

The floor is exact kTB at the model temperature plus the receiver noise
figure; SNR at a given Rx power is the dB distance to that floor, so a
1 dBm power step moves SNR by exactly 1 dB.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .units import as_symbol_frame, db_to_linear

BOLTZMANN_J_PER_K = 1.380649e-23


@dataclass(frozen=True)
class NoiseFloorModel:
    bandwidth_hz: float
    noise_figure_db: float = 0.0
    temperature_k: float = 290.0

    def __post_init__(self):
        if not (math.isfinite(self.bandwidth_hz) and self.bandwidth_hz > 0):
            raise ValueError(f"bandwidth_hz must be finite and > 0, got {self.bandwidth_hz}")
        if not (math.isfinite(self.noise_figure_db) and self.noise_figure_db >= 0):
            raise ValueError(f"noise_figure_db must be finite and >= 0, got {self.noise_figure_db}")
        if not (math.isfinite(self.temperature_k) and self.temperature_k > 0):
            raise ValueError(f"temperature_k must be finite and > 0, got {self.temperature_k}")


def thermal_noise_floor(model: NoiseFloorModel) -> float:
    """Noise floor in dBm: kTB over the bandwidth plus the noise figure."""
    ktb_mw = BOLTZMANN_J_PER_K * model.temperature_k * model.bandwidth_hz * 1000.0
    return 10.0 * math.log10(ktb_mw) + model.noise_figure_db


def snr_from_rx_power(rx_dbm: float, floor_dbm: float) -> float:
    """SNR in dB of a received power over a noise floor."""
    for name, value in (("rx_dbm", rx_dbm), ("floor_dbm", floor_dbm)):
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value}")
    return rx_dbm - floor_dbm


@dataclass(frozen=True)
class AwgnChannel:
    """Complex AWGN at a target SNR relative to a known signal power.

    Noise variance is signal_power / (2 * snr_linear) per real dimension.
    snr_db = +inf is the noiseless sentinel; NaN and -inf are rejected.
    """

    snr_db: float
    seed: int = 0
    signal_power: float = 1.0

    def __post_init__(self):
        if math.isnan(self.snr_db) or self.snr_db == -math.inf:
            raise ValueError(f"snr_db must not be NaN or -inf, got {self.snr_db}")
        if not (math.isfinite(self.signal_power) and self.signal_power > 0):
            raise ValueError(f"signal_power must be finite and > 0, got {self.signal_power}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def apply_awgn(frame, channel: AwgnChannel) -> np.ndarray:
    """Add seeded complex white Gaussian noise to every sample."""
    frame = as_symbol_frame(frame, allow_empty=False)
    if channel.snr_db == math.inf:
        return frame.copy()
    sigma = math.sqrt(channel.signal_power / (2.0 * db_to_linear(channel.snr_db)))
    rng = np.random.default_rng(channel.seed)
    draws = rng.standard_normal((2, frame.size))
    return frame + sigma * (draws[0] + 1j * draws[1])
