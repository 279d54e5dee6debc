"""Error correction of thermal-loss channels with noiseless linear amplification.

Protocol: one arm of a TMSV(chi) resource crosses a loss channel (tau, eps)
and is amplified by an ideal NLA of gain g.  On success the resource is
again a TMSV, now with squeezing chi_e, whose second arm went through an
effective loss channel (tau_e, eps_e).  Teleporting with it at gain ``lam``
simulates a channel which may decohere less than the original one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channels import Channel, is_entanglement_breaking, require_physical
from .entanglement import eof_from_ro, ro_choi, ro_tmsv_through_channel
from .errors import DomainError, UnphysicalError, UnsupportedStateError
from .gaussian import DEFAULT_TOL, TwoModeCovariance
from .optimize import grid_golden_max


def gain_from_xi(xi: float) -> float:
    """NLA gain set by the tunable beam-splitter ratio xi in (0, 1]."""
    if not 0.0 < xi <= 1.0:
        raise DomainError(f"beam-splitter ratio xi={xi} outside (0, 1]")
    return math.sqrt((1.0 - xi) / xi)


def xi_from_gain(g: float) -> float:
    return 1.0 / (1.0 + g * g)


@dataclass(frozen=True)
class EffectiveParams:
    chi_e: float
    tau_e: float
    eps_e: float

    @property
    def noise(self) -> float:
        return abs(1.0 - self.tau_e) * self.eps_e

    @property
    def channel(self) -> Channel:
        return Channel(self.tau_e, self.noise)

    def simulated_noise(self, lam: float) -> float:
        """Noise a*lam - 2*c*sqrt(lam) + b of teleporting with the effective resource.

        Rewritten as a sum of non-negative terms so it stays accurate when
        chi_e approaches 1 and a, b, c all diverge.
        """
        x, t = self.chi_e, self.tau_e
        d = math.sqrt(lam) - math.sqrt(t)
        return ((1.0 - x) * (lam + t) + 2.0 * x * d * d / (1.0 - x)) / (1.0 + x) + self.noise

    def resource(self) -> TwoModeCovariance:
        """Covariance of TMSV(chi_e) after the effective channel on its second arm."""
        x2 = self.chi_e * self.chi_e
        a = (1.0 + x2) / (1.0 - x2)
        c = 2.0 * math.sqrt(self.tau_e) * self.chi_e / (1.0 - x2)
        return TwoModeCovariance.balanced(a, self.tau_e * a + self.noise, c)


@dataclass(frozen=True)
class GainBounds:
    g_chi: float
    g_eps: float

    @property
    def g_max(self) -> float:
        return min(self.g_chi, self.g_eps)


def _loss_params(g: Channel) -> tuple[float, float]:
    if not 0.0 < g.tau < 1.0:
        raise UnsupportedStateError(
            f"NLA effective parameters cover loss channels (0 < tau < 1), got tau={g.tau}"
        )
    eps = g.eps
    if eps < 1.0 - DEFAULT_TOL:
        raise UnphysicalError(f"loss channel with eps={eps} < 1")
    return g.tau, max(eps, 1.0)


def effective_triple(chi: float, tau: float, eps: float, gain: float) -> tuple[float, float, float]:
    """Closed-form (chi_e, tau_e, eps_e) with no gain-range checks."""
    G = gain * gain
    k = tau + 1.0 + eps * (tau - 1.0)  # 1 + tau - v
    chi_e = chi * math.sqrt((2.0 + (G - 1.0) * k) / (2.0 + (eps - 1.0) * (tau - 1.0) * (G - 1.0)))
    tau_e = (
        4.0 * G * tau
        / (eps + 1.0 + (eps - 1.0) * ((tau - 1.0) * G - tau))
        / ((eps + 1.0) * (1.0 - tau) + k * G)
    )
    eps_e = (
        (tau + 1.0 + eps * (2.0 + eps * (1.0 - tau)) + (eps - 1.0) * k * G * G)
        / ((eps + 1.0 - (eps - 1.0) * G) ** 2 - tau * (eps * eps - 1.0) * (G - 1.0) ** 2)
    )
    return chi_e, tau_e, eps_e


def gain_bounds(chi: float, g: Channel) -> GainBounds:
    tau, eps = _loss_params(g)
    x2 = chi * chi
    num_chi = tau * (1.0 - eps) + (eps + 1.0) * (1.0 + (tau - 1.0) * x2)
    den_chi = tau - 1.0 + eps * (tau - 1.0) * (x2 - 1.0) + (tau + 1.0) * x2
    g_chi = math.sqrt(num_chi / den_chi) if den_chi > 0.0 else math.inf
    if eps == 1.0:
        g_eps = math.inf
    else:
        num_eps = (1.0 - eps * eps) * (1.0 - tau) + 2.0 * math.sqrt((eps * eps - 1.0) * tau)
        den_eps = (eps - 1.0) * (tau + 1.0 + eps * (tau - 1.0))
        g_eps = math.sqrt(num_eps / den_eps) if den_eps > 0.0 and num_eps > 0.0 else math.inf
    return GainBounds(g_chi, g_eps)


def effective_params(chi: float, g: Channel, gain: float, rtol: float = 1e-12) -> EffectiveParams:
    """Effective resource after loss channel ``g`` and a successful ideal NLA."""
    if not 0.0 <= chi < 1.0:
        raise DomainError(f"chi={chi} outside [0, 1)")
    if gain < 1.0:
        raise DomainError(f"NLA gain must be >= 1, got {gain}")
    tau, eps = _loss_params(g)
    if is_entanglement_breaking(g, tol=0.0):
        raise UnsupportedStateError(
            f"{g} is entanglement breaking; the effective parameters are unphysical there"
        )
    bounds = gain_bounds(chi, g)
    if gain > bounds.g_max * (1.0 + rtol):
        raise UnphysicalError(
            f"gain {gain} exceeds g_max={bounds.g_max:.12g} (g_chi={bounds.g_chi:.12g}, "
            f"g_eps={bounds.g_eps:.12g})"
        )
    return EffectiveParams(*effective_triple(chi, tau, eps, gain))


def correctable(chi: float, g: Channel, tol: float = DEFAULT_TOL) -> bool:
    """Whether NLA-assisted teleportation with TMSV(chi) can beat channel ``g``."""
    if chi <= 0.0:
        return False
    if not g.is_physical(tol) or is_entanglement_breaking(g, tol=0.0):
        return False
    if not 0.0 < g.tau < 1.0:
        return False
    return gain_bounds(chi, g).g_max > 1.0 / chi


def theta(eff: EffectiveParams, lam: float) -> float:
    """Noise parameter of the simulated channel: v = (1 - lam) * theta."""
    if lam <= 0.0:
        raise DomainError(f"teleportation gain must be positive, got {lam}")
    if lam == 1.0:
        raise DomainError("theta has a removable pole at lam = 1; use simulated_thermal_channel")
    x, t = eff.chi_e, eff.tau_e
    x2 = x * x
    # -noise == eps_e * (tau_e - 1) on the loss side
    num = -eff.noise * (x2 - 1.0) + x2 * (t + lam) - 4.0 * x * math.sqrt(t * lam) + t + lam
    return num / ((lam - 1.0) * (x2 - 1.0))


def simulated_thermal_channel(eff: EffectiveParams, lam: float) -> Channel:
    """Channel simulated by teleporting with the effective resource at gain ``lam``."""
    if abs(lam - 1.0) <= 1e-12:
        return Channel(lam, eff.simulated_noise(lam))
    th = theta(eff, lam)
    if lam < 1.0:
        return Channel(lam, (1.0 - lam) * th)
    return Channel(lam, (lam - 1.0) * (-th))


def lambda_max(eff: EffectiveParams) -> float:
    """Largest teleportation gain whose simulated channel is not entanglement breaking.

    Solves a*lam - 2*c*sqrt(lam) + b = 1 + lam for the upper root.  When the
    effective resource is separable no such root exists and the gain that
    minimises the breaking margin, tau_e / chi_e^2, is returned instead.
    """
    x, t = eff.chi_e, eff.tau_e
    if x <= 0.0:
        raise DomainError("a product resource (chi_e = 0) gives no usable teleportation gain")
    margin = 1.0 + t - eff.noise
    if margin < 0.0:
        return t / (x * x)
    y = (2.0 * math.sqrt(t) + math.sqrt(2.0 * margin * (1.0 - x * x))) / (2.0 * x)
    return y * y


def lambda_window(eff: EffectiveParams) -> tuple[float, float]:
    """Range of teleportation gains whose simulated channel is not entanglement breaking.

    The lower end is the other root of the same quadratic in sqrt(lam),
    taken from the product of roots to avoid cancellation.  A separable
    effective resource gives the degenerate window (hi, hi).
    """
    hi = lambda_max(eff)
    x, t = eff.chi_e, eff.tau_e
    if 1.0 + t - eff.noise < 0.0:
        return hi, hi
    prod = ((1.0 + x * x) * t + (eff.noise - 1.0) * (1.0 - x * x)) / (2.0 * x * x)
    lo = (prod / math.sqrt(hi)) ** 2 if prod > 0.0 else 0.0
    return lo, hi


def pure_sim_tau(chi_e: float, tau_e: float, kind: str = "loss") -> float:
    """Transmissivity (or gain) simulated with a pure effective channel."""
    if kind == "loss":
        return tau_e * chi_e * chi_e
    if kind == "amplifier":
        return tau_e / (chi_e * chi_e)
    raise DomainError(f"kind must be 'loss' or 'amplifier', got {kind!r}")


def _output_eof(r_in: float, v: float, lam: float, scale: float = 1.0) -> float:
    ch = Channel(lam, max(v, abs(1.0 - lam)))
    return eof_from_ro(ro_tmsv_through_channel(r_in, ch, tol=DEFAULT_TOL * scale))


def optimize_lambda_for_resource(
    rho: TwoModeCovariance,
    zeta: float,
    window,
    n_grid: int = 128,
    tol: float = 1e-10,
) -> tuple[float, float]:
    """Best teleportation gain for a TMSV(zeta) input and resource ``rho``.

    ``window`` is either the upper gain (searching from 0) or a (lo, hi) pair.
    """
    lo, hi = (0.0, window) if isinstance(window, (int, float)) else window
    r_in = math.atanh(zeta)
    scale = max(1.0, rho.a)

    def f(lam):
        return _output_eof(r_in, rho.a * lam - 2.0 * rho.c1 * math.sqrt(lam) + rho.b, lam, scale)

    return grid_golden_max(f, lo, hi, n_grid, tol)


def optimize_lambda(
    eff: EffectiveParams, zeta: float, n_grid: int = 128, tol: float = 1e-10
) -> tuple[float, float]:
    """Maximise the output entanglement over the teleportation gain.

    The search runs over the gains that keep the simulated channel from
    breaking entanglement, which can be far narrower than [0, lambda_max].

    Returns ``(lambda_star, eof_star)``.  If every gain leaves the output
    separable, the least noisy gain tau_e / chi_e^2 is returned with EOF 0.
    """
    if not 0.0 <= zeta < 1.0:
        raise DomainError(f"zeta={zeta} outside [0, 1)")
    lo, hi = lambda_window(eff)
    r_in = math.atanh(zeta)
    lam, best = grid_golden_max(
        lambda l: _output_eof(r_in, eff.simulated_noise(l), l), lo, hi, n_grid, tol
    )
    if best <= 0.0:
        return eff.tau_e / (eff.chi_e ** 2), 0.0
    return lam, best


def direct_eof(g: Channel, zeta: float) -> float:
    """EOF after sending one arm of TMSV(zeta) straight through ``g``."""
    return eof_from_ro(ro_tmsv_through_channel(math.atanh(zeta), g))


def choi_eof(g: Channel) -> float:
    return eof_from_ro(ro_choi(g))


def resource_eof(eff: EffectiveParams) -> float:
    return eof_from_ro(ro_tmsv_through_channel(math.atanh(eff.chi_e), eff.channel))


@dataclass(frozen=True)
class CurvePoint:
    g: float
    eff: EffectiveParams
    resource_eof: float
    lambda_star: float
    output_eof_star: float


def correction_curve(
    g: Channel,
    chi: float,
    zeta: float,
    gains,
    n_grid: int = 128,
    tol: float = 1e-10,
) -> list[CurvePoint]:
    require_physical(g)
    points = []
    for gain in gains:
        eff = effective_params(chi, g, float(gain))
        lam, best = optimize_lambda(eff, zeta, n_grid, tol)
        points.append(CurvePoint(float(gain), eff, resource_eof(eff), lam, best))
    return points


def lambda_bounds(rho: TwoModeCovariance) -> tuple[float, float] | None:
    """Non-breaking gain window for a general balanced resource, or None."""
    hi = lambda_upper(rho)
    if hi is None:
        return None
    prod = (rho.b - 1.0) / (rho.a - 1.0)
    lo = (prod / math.sqrt(hi)) ** 2 if prod > 0.0 and hi > 0.0 else 0.0
    return lo, hi


def lambda_upper(rho: TwoModeCovariance) -> float | None:
    """Largest gain at which resource ``rho`` simulates a non-breaking channel.

    Upper root of a*lam - 2*c*sqrt(lam) + b = 1 + lam; None if the resource
    cannot avoid entanglement breaking at any gain.
    """
    a, b, c = rho.a, rho.b, abs(rho.c1)
    if a <= 1.0:
        return None
    disc = c * c - (a - 1.0) * (b - 1.0)
    if disc < 0.0:
        return None
    y = (c + math.sqrt(disc)) / (a - 1.0)
    return y * y


def optimize_lambda_general(rho: TwoModeCovariance, zeta: float, n_grid: int = 128, tol: float = 1e-10):
    """Like :func:`optimize_lambda` for any balanced resource covariance."""
    window = lambda_bounds(rho)
    if window is None:
        return None, 0.0
    lam, best = optimize_lambda_for_resource(rho, zeta, window, n_grid, tol)
    if best <= 0.0:
        return None, 0.0
    return lam, best


def scissor_resource(chi: float, g: Channel, gain: float, tail_tol: float = 1e-10):
    """Second moments of TMSV(chi) after ``g`` and a single quantum scissor.

    The state is non-Gaussian; only its covariance is returned, together
    with the scissor success weight.
    """
    from . import fock

    cutoff = 1
    if chi > 0.0:
        cutoff = max(2, int(math.ceil(math.log(tail_tol) / (2.0 * math.log(chi)))))
    state = fock.apply_loss_fock(fock.tmsv_fock(chi, cutoff, tail_tol), g, tail_tol=tail_tol)
    out, weight = fock.apply_scissor_T1(state, gain)
    return fock.covariance_from_fock(out), weight
