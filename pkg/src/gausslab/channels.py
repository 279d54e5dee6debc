"""Phase-insensitive single-mode Gaussian channels.

A channel with transmissivity/gain ``tau`` and added noise ``v`` maps the
covariance of the mode it acts on as ``V -> tau * V + v``.  Loss and
amplifier channels are also commonly written with the excess noise
``eps = v / |1 - tau|``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, UnphysicalError
from .gaussian import DEFAULT_TOL, TwoModeCovariance


class ChannelClass(enum.Enum):
    IDENTITY = "Identity"
    PURE_LOSS = "PureLoss"
    THERMAL_LOSS = "ThermalLoss"
    PURE_AMPLIFIER = "PureAmplifier"
    THERMAL_AMPLIFIER = "ThermalAmplifier"
    ADDITIVE_NOISE = "AdditiveNoise"
    UNPHYSICAL = "Unphysical"


@dataclass(frozen=True)
class Channel:
    tau: float
    v: float

    @classmethod
    def identity(cls) -> Channel:
        return cls(1.0, 0.0)

    @classmethod
    def loss(cls, tau: float, eps: float = 1.0) -> Channel:
        if not 0.0 <= tau <= 1.0:
            raise DomainError(f"loss transmissivity {tau} outside [0, 1]")
        return cls(tau, (1.0 - tau) * eps)

    @classmethod
    def amplifier(cls, tau: float, eps: float = 1.0) -> Channel:
        if tau < 1.0:
            raise DomainError(f"amplifier gain {tau} below 1")
        return cls(tau, (tau - 1.0) * eps)

    @classmethod
    def from_eps(cls, tau: float, eps: float) -> Channel:
        return cls(tau, abs(1.0 - tau) * eps)

    @property
    def eps(self) -> float | None:
        """Excess noise v/|1 - tau|; None for tau = 1 where it is undefined."""
        gap = abs(1.0 - self.tau)
        if gap == 0.0:
            return None
        return self.v / gap

    def is_physical(self, tol: float = DEFAULT_TOL) -> bool:
        return self.tau >= 0.0 and self.v >= 0.0 and self.v >= abs(1.0 - self.tau) - tol

    def is_identity(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.tau - 1.0) <= tol and abs(self.v) <= tol

    def kind(self, tol: float = DEFAULT_TOL) -> ChannelClass:
        return classify(self, tol)


def classify(g: Channel, tol: float = DEFAULT_TOL) -> ChannelClass:
    tau, v = g.tau, g.v
    if tau < 0.0 or v < -tol or v < abs(1.0 - tau) - tol:
        return ChannelClass.UNPHYSICAL
    if abs(tau - 1.0) <= tol:
        return ChannelClass.IDENTITY if v <= tol else ChannelClass.ADDITIVE_NOISE
    pure = abs(v - abs(1.0 - tau)) <= tol
    if tau < 1.0:
        return ChannelClass.PURE_LOSS if pure else ChannelClass.THERMAL_LOSS
    return ChannelClass.PURE_AMPLIFIER if pure else ChannelClass.THERMAL_AMPLIFIER


def require_physical(g: Channel, tol: float = DEFAULT_TOL) -> None:
    if not g.is_physical(tol):
        raise UnphysicalError(f"unphysical channel tau={g.tau}, v={g.v}: need v >= |1 - tau|")


def apply_to_mode2(sigma: TwoModeCovariance, g: Channel, tol: float = DEFAULT_TOL) -> TwoModeCovariance:
    """Send the second mode of ``sigma`` through ``g``."""
    require_physical(g, tol)
    st = math.sqrt(g.tau)
    return TwoModeCovariance(sigma.a, g.tau * sigma.b + g.v, st * sigma.c1, st * sigma.c2)


def is_entanglement_breaking(g: Channel, tol: float = DEFAULT_TOL) -> bool:
    return g.v >= 1.0 + abs(g.tau) - tol


def compose(first: Channel, second: Channel) -> Channel:
    """Channel equivalent to applying ``first`` and then ``second``."""
    return Channel(first.tau * second.tau, second.tau * first.v + second.v)


__all__ = [
    "Channel",
    "ChannelClass",
    "apply_to_mode2",
    "classify",
    "compose",
    "is_entanglement_breaking",
    "require_physical",
]
