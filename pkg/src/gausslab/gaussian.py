"""Two-mode covariance matrices in standard form.

Quadratures are x = a + a^dag and p = i(a^dag - a), so the vacuum has unit
variance.  A zero-mean two-mode state in standard form is fully described by
four numbers::

    [[a,  0,  c1, 0 ],
     [0,  a,  0,  c2],
     [c1, 0,  b,  0 ],
     [0,  c2, 0,  b ]]
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GaussLabError

DEFAULT_TOL = 1e-9

# symplectic form for the (x1, p1, x2, p2) ordering
OMEGA = np.array(
    [[0.0, 1.0, 0.0, 0.0],
     [-1.0, 0.0, 0.0, 0.0],
     [0.0, 0.0, 0.0, 1.0],
     [0.0, 0.0, -1.0, 0.0]]
)


@dataclass(frozen=True)
class TwoModeCovariance:
    a: float
    b: float
    c1: float
    c2: float

    @classmethod
    def vacuum(cls) -> TwoModeCovariance:
        return cls(1.0, 1.0, 0.0, 0.0)

    @classmethod
    def balanced(cls, a: float, b: float, c: float) -> TwoModeCovariance:
        """Resource-style state with c2 = -c1."""
        return cls(a, b, c, -c)

    def is_balanced(self, tol: float = 1e-12) -> bool:
        scale = max(1.0, abs(self.c1))
        return abs(self.c1 + self.c2) <= tol * scale

    def matrix(self) -> np.ndarray:
        a, b, c1, c2 = self.a, self.b, self.c1, self.c2
        return np.array(
            [[a, 0.0, c1, 0.0],
             [0.0, a, 0.0, c2],
             [c1, 0.0, b, 0.0],
             [0.0, c2, 0.0, b]]
        )

    def swapped(self) -> TwoModeCovariance:
        return TwoModeCovariance(self.b, self.a, self.c1, self.c2)

    def partial_transpose(self) -> TwoModeCovariance:
        # p2 -> -p2
        return TwoModeCovariance(self.a, self.b, self.c1, -self.c2)

    def scaled(self, s: float) -> TwoModeCovariance:
        return TwoModeCovariance(s * self.a, s * self.b, s * self.c1, s * self.c2)


@dataclass(frozen=True)
class SymplecticSpectrum:
    nu_minus: float
    nu_plus: float

    def __post_init__(self):
        if self.nu_minus < 0 or self.nu_plus < self.nu_minus:
            raise DomainError(
                f"need 0 <= nu_minus <= nu_plus, got ({self.nu_minus}, {self.nu_plus})"
            )

    def as_tuple(self) -> tuple[float, float]:
        return (self.nu_minus, self.nu_plus)


def chi_to_r(chi: float) -> float:
    return math.atanh(chi)


def r_to_chi(r: float) -> float:
    return math.tanh(r)


def _check_chi(chi: float) -> None:
    if not 0.0 <= chi < 1.0:
        raise DomainError(
            f"squeezing parameter chi={chi} outside [0, 1); chi -> 1 needs infinite energy"
        )


def tmsv(chi: float) -> TwoModeCovariance:
    """Two-mode squeezed vacuum with chi = tanh(r)."""
    _check_chi(chi)
    d = 1.0 - chi * chi
    a = (1.0 + chi * chi) / d
    c = 2.0 * chi / d
    return TwoModeCovariance(a, a, c, -c)


def symplectic_eigenvalues(sigma: TwoModeCovariance, tol: float = DEFAULT_TOL) -> SymplecticSpectrum:
    """Ordered symplectic spectrum of a standard-form covariance.

    Balanced states use the closed form in (a, b, c); everything else goes
    through the two symplectic invariants (determinant and seralian).
    """
    a, b, c1, c2 = sigma.a, sigma.b, sigma.c1, sigma.c2
    if sigma.is_balanced():
        disc = (a + b) ** 2 - 4.0 * c1 * c1
        if disc < -tol:
            raise GaussLabError(f"malformed covariance: negative discriminant {disc}")
        root = math.sqrt(max(disc, 0.0))
        gap = abs(a - b)
        return SymplecticSpectrum(max((root - gap) / 2.0, 0.0), (root + gap) / 2.0)
    return symplectic_eigenvalues_invariant(sigma, tol)


def symplectic_eigenvalues_invariant(sigma: TwoModeCovariance, tol: float = DEFAULT_TOL) -> SymplecticSpectrum:
    a, b, c1, c2 = sigma.a, sigma.b, sigma.c1, sigma.c2
    seralian = a * a + b * b + 2.0 * c1 * c2
    det = (a * b - c1 * c1) * (a * b - c2 * c2)
    disc = seralian * seralian - 4.0 * det
    if disc < -tol * max(1.0, seralian * seralian):
        raise GaussLabError(f"malformed covariance: negative discriminant {disc}")
    root = math.sqrt(max(disc, 0.0))
    lo = (seralian - root) / 2.0
    hi = (seralian + root) / 2.0
    if lo < -tol:
        raise GaussLabError(f"malformed covariance: negative symplectic invariant {lo}")
    return SymplecticSpectrum(math.sqrt(max(lo, 0.0)), math.sqrt(hi))


def symplectic_eigenvalues_numeric(sigma: TwoModeCovariance) -> SymplecticSpectrum:
    """Spectrum from the eigenvalues of i*Omega*sigma (moduli come in pairs)."""
    ev = np.linalg.eigvals(1j * OMEGA @ sigma.matrix())
    nus = np.sort(np.abs(ev))
    return SymplecticSpectrum(float(nus[0]), float(nus[2]))


def is_physical(sigma: TwoModeCovariance, tol: float = DEFAULT_TOL) -> bool:
    if tol < 0:
        raise DomainError("tolerance must be non-negative")
    try:
        nus = symplectic_eigenvalues(sigma, tol)
    except GaussLabError:
        return False
    return nus.nu_minus >= 1.0 - tol and sigma.a >= 1.0 - tol and sigma.b >= 1.0 - tol


def mean_energy_per_mode(rho: TwoModeCovariance) -> float:
    """Mean photon number per mode, (tr(rho) - 4) / 8."""
    return (2.0 * rho.a + 2.0 * rho.b - 4.0) / 8.0
