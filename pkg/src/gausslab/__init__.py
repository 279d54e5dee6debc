"""Gaussian channel simulation, entanglement and NLA-assisted error correction."""

__version__ = "0.1.0"

from .channels import (
    Channel,
    ChannelClass,
    apply_to_mode2,
    classify,
    compose,
    is_entanglement_breaking,
)
from .entanglement import (
    decompose_tmsv_channel,
    eof_from_ro,
    eof_state,
    log_negativity,
    ro_choi,
    ro_tmsv_through_channel,
)
from .errors import CutoffError, DomainError, GaussLabError, UnphysicalError, UnsupportedStateError
from .fidelity import (
    SingleModeGaussian,
    appendix_a_scan,
    apply_channel_1mode,
    gaussian_fidelity_1mode,
    squeezed_vacuum,
    tmsv_channel_fidelity,
)
from .gaussian import (
    SymplecticSpectrum,
    TwoModeCovariance,
    is_physical,
    mean_energy_per_mode,
    symplectic_eigenvalues,
    tmsv,
)
from .nla import (
    EffectiveParams,
    GainBounds,
    correctable,
    effective_params,
    gain_bounds,
    lambda_max,
    optimize_lambda,
    simulated_thermal_channel,
    theta,
)
from .teleport import ResourcePair, chi_opt, optimal_resource, resource_family, simulated_channel
