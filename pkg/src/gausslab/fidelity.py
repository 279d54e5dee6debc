"""Single-mode Gaussian fidelity and the fidelity-versus-entanglement scan.

Fidelity between an input state and a channel output can increase when an
amplifier is added in front of a loss channel, even where the combined
channel destroys all entanglement.  :func:`appendix_a_scan` maps where both
happen at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import Channel, apply_to_mode2, compose, is_entanglement_breaking
from .errors import DomainError, UnphysicalError
from .gaussian import DEFAULT_TOL, chi_to_r, tmsv


@dataclass(frozen=True)
class SingleModeGaussian:
    """Zero-mean single-mode state with diagonal covariance (v_x, v_p)."""

    v_x: float
    v_p: float

    def __post_init__(self):
        if self.v_x <= 0.0 or self.v_p <= 0.0 or self.v_x * self.v_p < 1.0 - DEFAULT_TOL:
            raise UnphysicalError(f"v_x * v_p = {self.v_x * self.v_p} < 1")

    def det(self) -> float:
        return self.v_x * self.v_p

    def matrix(self) -> np.ndarray:
        return np.diag([self.v_x, self.v_p])


def squeezed_vacuum(zeta: float) -> SingleModeGaussian:
    """Pure squeezed vacuum with r = artanh(zeta); x is the anti-squeezed quadrature."""
    if not 0.0 <= zeta < 1.0:
        raise DomainError(f"zeta={zeta} outside [0, 1)")
    r = chi_to_r(zeta)
    return SingleModeGaussian(math.exp(2.0 * r), math.exp(-2.0 * r))


def apply_channel_1mode(s: SingleModeGaussian, g: Channel) -> SingleModeGaussian:
    return SingleModeGaussian(g.tau * s.v_x + g.v, g.tau * s.v_p + g.v)


def gaussian_fidelity_1mode(s1: SingleModeGaussian, s2: SingleModeGaussian) -> float:
    delta_big = (s1.v_x + s2.v_x) * (s1.v_p + s2.v_p)
    delta_small = max(s1.det() - 1.0, 0.0) * max(s2.det() - 1.0, 0.0)
    return 2.0 / (math.sqrt(delta_big + delta_small) - math.sqrt(delta_small))


def tmsv_channel_fidelity(zeta: float, g: Channel) -> float:
    """Fidelity between TMSV(zeta) and the same state with ``g`` on its second arm.

    The input is pure, so the fidelity is the overlap <psi|rho|psi>, which
    for two zero-mean Gaussian modes is 4 / sqrt(det(V_in + V_out)).
    """
    sigma = tmsv(zeta)
    out = apply_to_mode2(sigma, g)
    return 4.0 / math.sqrt(np.linalg.det(sigma.matrix() + out.matrix()))


@dataclass(frozen=True)
class ScanResult:
    tau1: np.ndarray
    tau2: np.ndarray
    f1: np.ndarray
    f2: np.ndarray
    breaking: np.ndarray
    region: np.ndarray  # 1..4, indexed [i_tau1, j_tau2]

    def count(self, label: int) -> int:
        return int(np.sum(self.region == label))


def region_label(f1_lower: bool, breaking: bool) -> int:
    """I: F1 < F2 and breaking; II: breaking only; III: neither; IV: F1 < F2 only."""
    if breaking:
        return 1 if f1_lower else 2
    return 4 if f1_lower else 3


def appendix_a_scan(
    zeta: float, eps1: float, eps2: float, tau1_grid, tau2_grid, input_state: str = "two-mode"
) -> ScanResult:
    """Compare loss alone against amplifier-then-loss.

    F1 is the input/output fidelity through L(tau1, eps1); F2 is the same
    through the amplifier A(tau2, eps2) followed by L(tau1, eps1).  The
    breaking flag refers to the composite channel.  ``input_state`` selects
    a TMSV(zeta) with the channels on one arm ("two-mode") or a single-mode
    squeezed vacuum ("single-mode").
    """
    if eps1 < 1.0 or eps2 < 1.0:
        raise DomainError("excess noise must be >= 1")
    if input_state == "two-mode":
        fidelity = lambda g: tmsv_channel_fidelity(zeta, g)  # noqa: E731
    elif input_state == "single-mode":
        s = squeezed_vacuum(zeta)
        fidelity = lambda g: gaussian_fidelity_1mode(s, apply_channel_1mode(s, g))  # noqa: E731
    else:
        raise DomainError(f"input_state must be 'two-mode' or 'single-mode', got {input_state!r}")
    t1 = np.asarray(tau1_grid, dtype=float)
    t2 = np.asarray(tau2_grid, dtype=float)
    f1 = np.empty((len(t1), len(t2)))
    f2 = np.empty_like(f1)
    eb = np.zeros(f1.shape, dtype=bool)
    region = np.empty(f1.shape, dtype=int)
    for i, a in enumerate(t1):
        loss = Channel.loss(float(a), eps1)
        fid1 = fidelity(loss)
        for j, b in enumerate(t2):
            both = compose(Channel.amplifier(float(b), eps2), loss)
            f1[i, j] = fid1
            f2[i, j] = fidelity(both)
            eb[i, j] = is_entanglement_breaking(both)
            region[i, j] = region_label(f1[i, j] < f2[i, j], eb[i, j])
    return ScanResult(t1, t2, f1, f2, eb, region)
