"""Channel simulation by continuous-variable teleportation.

Teleporting with a balanced resource (a, b, c) and classical gain ``lam``
acts on the input as the phase-insensitive channel
``tau = lam``, ``v = a*lam - 2*c*sqrt(lam) + b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channels import Channel, apply_to_mode2, is_entanglement_breaking, require_physical
from .errors import DomainError, UnphysicalError, UnsupportedStateError
from .gaussian import (
    DEFAULT_TOL,
    SymplecticSpectrum,
    TwoModeCovariance,
    is_physical,
    tmsv,
)


@dataclass(frozen=True)
class ResourcePair:
    rho_plus: TwoModeCovariance
    rho_minus: TwoModeCovariance
    spectrum_used: SymplecticSpectrum


def simulated_noise(rho: TwoModeCovariance, lam: float) -> float:
    return rho.a * lam - 2.0 * rho.c1 * math.sqrt(lam) + rho.b


def simulated_channel(rho: TwoModeCovariance, lam: float, tol: float = DEFAULT_TOL) -> Channel:
    """Channel induced on the teleported mode by resource ``rho`` at gain ``lam``."""
    if lam < 0:
        raise DomainError(f"teleportation gain must be non-negative, got {lam}")
    if not rho.is_balanced():
        raise UnsupportedStateError("teleportation resource must be balanced (c2 = -c1)")
    # nu_minus carries roundoff of order eps * a^2 for strongly correlated resources
    if not is_physical(rho, tol * max(1.0, rho.a)):
        raise UnphysicalError(f"unphysical resource state {rho}")
    return Channel(lam, simulated_noise(rho, lam))


def resource_family(g: Channel, spectrum: SymplecticSpectrum, tol: float = DEFAULT_TOL) -> ResourcePair:
    """Both balanced resources with the given symplectic spectrum that simulate ``g``.

    The solution is taken on the a >= b branch, with teleportation gain equal
    to the channel's tau.
    """
    require_physical(g, tol)
    tau, v = g.tau, g.v
    if abs(tau - 1.0) <= tol:
        raise DomainError("tau = 1 (additive noise) is singular for the resource family")
    if tau <= 0.0:
        raise DomainError("tau = 0 leaves the correlation undetermined")
    nm, np_ = spectrum.nu_minus, spectrum.nu_plus
    f1 = tau * nm - nm + v
    f2 = np_ - tau * np_ + v
    # the product only needs to be non-negative up to roundoff at the pure boundaries
    if f1 < -tol or f2 < -tol:
        raise DomainError(
            f"spectrum ({nm}, {np_}) incompatible with channel tau={tau}, v={v}"
        )
    root = math.sqrt(tau * max(f1, 0.0) * max(f2, 0.0))
    d = (tau - 1.0) ** 2
    gap = nm - np_  # (1 - tau)(nu+ - nu-) is written as (tau - 1)(nu- - nu+)
    gap_term = (tau - 1.0) * gap

    def member(sign: float) -> TwoModeCovariance:
        a = (gap_term + (1.0 + tau) * v + sign * 2.0 * root) / d
        b = (tau * gap_term + (1.0 + tau) * v + sign * 2.0 * root) / d
        c = (tau * gap_term + 2.0 * tau * v + sign * (1.0 + tau) * root) / (math.sqrt(tau) * d)
        return TwoModeCovariance.balanced(a, b, c)

    return ResourcePair(member(+1.0), member(-1.0), spectrum)


def chi_opt(g: Channel, tol: float = DEFAULT_TOL) -> float:
    """Squeezing of the minimum-energy pure resource simulating ``g``."""
    require_physical(g, tol)
    if g.is_identity(tol):
        raise DomainError(
            "the identity channel cannot be simulated with a finite-energy resource"
        )
    tau, v = g.tau, g.v
    excess = v - abs(1.0 - tau)
    # noise within a few ulps of |1 - tau| is a pure channel; the square root
    # would otherwise turn that roundoff into a 1e-8 error
    if excess <= 4.0 * math.ulp(max(1.0, tau)):
        excess = 0.0
    rad = (v + abs(1.0 - tau)) * excess
    chi = (2.0 * math.sqrt(tau) - math.sqrt(max(rad, 0.0))) / (tau + v + 1.0)
    if chi <= 0.0 or is_entanglement_breaking(g, tol=0.0):
        return 0.0
    return chi


def optimal_resource(g: Channel, tol: float = DEFAULT_TOL) -> tuple[float, TwoModeCovariance]:
    chi = chi_opt(g, tol)
    return chi, tmsv(chi)


def teleport_output(
    sigma_in: TwoModeCovariance, rho: TwoModeCovariance, lam: float, tol: float = DEFAULT_TOL
) -> TwoModeCovariance:
    """Output of teleporting the second mode of ``sigma_in`` with resource ``rho``."""
    return apply_to_mode2(sigma_in, simulated_channel(rho, lam, tol), tol)
