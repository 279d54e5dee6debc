"""Entanglement of formation and logarithmic negativity for two-mode states.

The entanglement of formation of the states handled here is parameterised
by ``r_o``, the smallest two-mode squeezing needed to prepare the state.  For
a balanced state (c2 = -c1) the state can always be written as one arm of a
two-mode squeezed vacuum sent through a phase-insensitive channel, which is
what :func:`decompose_tmsv_channel` recovers.
"""

from __future__ import annotations

import math

from .channels import Channel, is_entanglement_breaking, require_physical
from .errors import DomainError, UnphysicalError, UnsupportedStateError
from .gaussian import (
    DEFAULT_TOL,
    TwoModeCovariance,
    is_physical,
    symplectic_eigenvalues,
    symplectic_eigenvalues_invariant,
)


def eof_from_ro(r_o: float) -> float:
    """Entanglement of formation in ebits for minimum squeezing ``r_o``."""
    if r_o < 0:
        raise DomainError(f"r_o must be non-negative, got {r_o}")
    if r_o == 0.0:
        return 0.0
    ch2 = math.cosh(r_o) ** 2
    sh2 = math.sinh(r_o) ** 2
    return ch2 * math.log2(ch2) - sh2 * math.log2(sh2)


def _noise_root(g: Channel, tol: float) -> float:
    """sqrt(v^2 - (1 - tau)^2), rejecting channels where it is imaginary."""
    rad = g.v * g.v - (1.0 - g.tau) ** 2
    if rad < -tol:
        raise UnphysicalError(f"v^2 - (1 - tau)^2 = {rad} < 0 for tau={g.tau}, v={g.v}")
    return math.sqrt(max(rad, 0.0))


def _v_minus_root(g: Channel, s: float) -> float:
    # v - s written without cancellation
    if g.v + s == 0.0:
        return 0.0
    return (1.0 - g.tau) ** 2 / (g.v + s)


def ro_tmsv_through_channel(r: float, g: Channel, tol: float = DEFAULT_TOL) -> float:
    """Minimum squeezing of a TMSV(r) whose second arm went through ``g``.

    Evaluated in the rearranged form where every term of numerator and
    denominator is non-negative, scaled by u = exp(-2r); this stays accurate
    for large ``r`` where the textbook cosh/sinh form cancels catastrophically.
    """
    if r < 0:
        raise DomainError(f"squeezing r must be non-negative, got {r}")
    require_physical(g, tol)
    s = _noise_root(g, tol)
    if is_entanglement_breaking(g, tol=0.0):
        return 0.0
    t, v = g.tau, g.v
    u = math.exp(-2.0 * r)
    dm = _v_minus_root(g, s)
    dp = v + s
    num = (
        0.5 * dm * dm
        + 0.5 * (u * u) ** 2 * dp * dp
        + 2.0 * (1.0 + t) * dm * u
        + 2.0 * (1.0 + t) * dp * u ** 3
        + (3.0 + 2.0 * t + 3.0 * t * t) * u * u
    )
    st = math.sqrt(t)
    inner = v * u + 0.5 * ((1.0 - st) ** 2 + u * u * (1.0 + st) ** 2)
    den = 2.0 * inner * inner
    return max(0.0, 0.25 * math.log(num / den))


def ro_choi(g: Channel, tol: float = DEFAULT_TOL) -> float:
    """Minimum squeezing of the (infinite-energy) Choi state of ``g``."""
    require_physical(g, tol)
    if g.is_identity(tol):
        raise DomainError("the identity channel has a divergent Choi-state entanglement")
    if is_entanglement_breaking(g, tol=0.0):
        return 0.0
    if g.tau == 1.0:
        return max(0.0, 0.25 * math.log(4.0 / (g.v * g.v)))
    s = _noise_root(g, tol)
    # equal to (1/4) ln{[2v(v - s) - (1 - tau)^2] / (1 - sqrt(tau))^4}
    ro = math.log1p(math.sqrt(g.tau)) - 0.5 * math.log(g.v + s)
    return max(0.0, ro)


def decompose_tmsv_channel(
    sigma: TwoModeCovariance, tol: float = DEFAULT_TOL
) -> tuple[float, Channel]:
    """Write a balanced state as TMSV(r) with a channel on its second arm.

    Returns ``(r, channel)`` with cosh(2r) = a, tau = c^2 / (a^2 - 1) and
    v = b - tau * a.
    """
    if not sigma.is_balanced():
        raise UnsupportedStateError("only balanced states (c2 = -c1) can be decomposed")
    if sigma.a <= 1.0 or sigma.c1 <= 0.0:
        raise UnsupportedStateError(
            f"need a > 1 and c1 > 0 to decompose, got a={sigma.a}, c1={sigma.c1}"
        )
    r = 0.5 * math.acosh(sigma.a)
    tau = sigma.c1 * sigma.c1 / (sigma.a * sigma.a - 1.0)
    g = Channel(tau, sigma.b - tau * sigma.a)
    if not g.is_physical(tol * max(1.0, sigma.a)):
        raise UnsupportedStateError(
            f"state decomposes into an unphysical channel tau={g.tau}, v={g.v}"
        )
    return r, g


def eof_pure(sigma: TwoModeCovariance) -> float:
    """Entropy of entanglement of a pure two-mode state (a = b)."""
    # cosh(2 r) = a for the local thermal state
    return eof_from_ro(0.5 * math.acosh(max(sigma.a, 1.0)))


def eof_state(sigma: TwoModeCovariance, tol: float = DEFAULT_TOL) -> float:
    """Entanglement of formation (ebits) of a balanced two-mode state.

    Non-balanced correlations (c2 != -c1, other than a product state) are
    rejected rather than approximated.
    """
    if not is_physical(sigma, tol):
        raise UnphysicalError(f"unphysical covariance {sigma}")
    if sigma.c1 == 0.0 and sigma.c2 == 0.0:
        return 0.0
    if not sigma.is_balanced():
        raise UnsupportedStateError(
            "entanglement of formation is only implemented for balanced states (c2 = -c1)"
        )
    if sigma.c1 < 0.0:
        # a local pi phase flips both correlations
        sigma = TwoModeCovariance(sigma.a, sigma.b, -sigma.c1, -sigma.c2)
    nus = symplectic_eigenvalues(sigma, tol)
    if nus.nu_plus <= 1.0 + tol:
        return eof_pure(sigma)
    r, g = decompose_tmsv_channel(sigma, tol)
    scaled_tol = tol * max(1.0, sigma.a)
    if is_entanglement_breaking(g, tol=scaled_tol):
        return 0.0
    return eof_from_ro(ro_tmsv_through_channel(r, g, tol=scaled_tol))


def log_negativity(sigma: TwoModeCovariance, tol: float = DEFAULT_TOL) -> float:
    """Logarithmic negativity (base 2) from the partially transposed spectrum."""
    nu = symplectic_eigenvalues_invariant(sigma.partial_transpose(), tol).nu_minus
    if nu <= 0.0:
        raise UnphysicalError("partially transposed spectrum vanished; covariance is not positive")
    if nu >= 1.0 - tol:
        return 0.0
    return -math.log2(nu)
