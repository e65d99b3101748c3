"""rxkit: desk-scale RF link-quality toolkit.

Receiver sensitivity desense analysis, EVM computation over IQ frames,
and stepped Rx-power sweeps toward the thermal noise floor over a
simulated AWGN channel, with closed-form oracles for cross-checking.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as kernel_backend
from .channel import (
    BOLTZMANN_J_PER_K,
    AwgnChannel,
    NoiseFloorModel,
    apply_awgn,
    snr_from_rx_power,
    thermal_noise_floor,
)
from .desense import (
    DesenseRow,
    DesenseSummary,
    SensitivityRecord,
    compute_desense,
    emit_desense_csv,
    emit_sensitivity_csv,
    parse_sensitivity_csv,
    summarize,
)
from .errors import ConfigError, FormatError, InputError, PairingError, RxkitError
from .evm import EvmMode, EvmReport, error_vector_magnitudes, evm_decision_directed, evm_report
from .modulation import (
    ConstellationSpec,
    ModulationScheme,
    NormalizationMode,
    demodulate_hard,
    hard_decision_labels,
    ideal_points,
    modulate,
)
from .sweep import (
    SweepConfig,
    SweepStepResult,
    TheoryPoint,
    q_function,
    run_sweep,
    sweep_config_from_dict,
    theory_point,
)
from .units import as_symbol_frame, db_to_linear, dbm_to_mw, iq_frame, linear_to_db, mw_to_dbm

__all__ = [
    "__version__",
    "kernel_backend",
    "BOLTZMANN_J_PER_K",
    "AwgnChannel",
    "NoiseFloorModel",
    "apply_awgn",
    "snr_from_rx_power",
    "thermal_noise_floor",
    "DesenseRow",
    "DesenseSummary",
    "SensitivityRecord",
    "compute_desense",
    "emit_desense_csv",
    "emit_sensitivity_csv",
    "parse_sensitivity_csv",
    "summarize",
    "ConfigError",
    "FormatError",
    "InputError",
    "PairingError",
    "RxkitError",
    "EvmMode",
    "EvmReport",
    "error_vector_magnitudes",
    "evm_decision_directed",
    "evm_report",
    "ConstellationSpec",
    "ModulationScheme",
    "NormalizationMode",
    "demodulate_hard",
    "hard_decision_labels",
    "ideal_points",
    "modulate",
    "SweepConfig",
    "SweepStepResult",
    "TheoryPoint",
    "q_function",
    "run_sweep",
    "sweep_config_from_dict",
    "theory_point",
    "as_symbol_frame",
    "db_to_linear",
    "dbm_to_mw",
    "iq_frame",
    "linear_to_db",
    "mw_to_dbm",
]
