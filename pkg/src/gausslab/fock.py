"""Brute-force two-mode simulation in a truncated number basis.

This module deliberately avoids the covariance formalism so it can serve as
an independent check on it.  A pure state is an amplitude array ``psi[n1, n2]``.
Mixed states are stored as a stack of unnormalised pure components
``C[k, n1, n2]`` with rho = sum_k |C_k><C_k|; the full matrix is only built
on request.  All channels and amplifiers act on the second mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .channels import Channel
from .errors import CutoffError, DomainError, UnsupportedStateError
from .gaussian import TwoModeCovariance

TAIL_TOL = 1e-10


@dataclass(frozen=True)
class FockStateVector:
    amplitudes: np.ndarray

    @property
    def cutoff(self) -> int:
        return max(self.amplitudes.shape)

    def norm2(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def components(self) -> np.ndarray:
        return self.amplitudes[None, :, :]


@dataclass(frozen=True)
class FockDensityMatrix:
    components_: np.ndarray

    @classmethod
    def from_vector(cls, psi: FockStateVector) -> FockDensityMatrix:
        return cls(psi.components())

    @property
    def cutoff(self) -> int:
        return max(self.components_.shape[1:])

    @property
    def shape(self) -> tuple[int, int]:
        return self.components_.shape[1], self.components_.shape[2]

    def components(self) -> np.ndarray:
        return self.components_

    def trace(self) -> float:
        return float(np.sum(np.abs(self.components_) ** 2))

    def matrix(self) -> np.ndarray:
        """Dense (N1*N2) x (N1*N2) density matrix, row index n1 * N2 + n2."""
        flat = self.components_.reshape(self.components_.shape[0], -1)
        return flat.T @ flat.conj()

    def purity(self) -> float:
        flat = self.components_.reshape(self.components_.shape[0], -1)
        gram = flat.conj() @ flat.T
        tr = float(np.real(np.trace(gram)))
        return float(np.sum(np.abs(gram) ** 2)) / (tr * tr)


def _components(state) -> np.ndarray:
    if isinstance(state, (FockStateVector, FockDensityMatrix)):
        return state.components()
    raise TypeError(f"expected a Fock state, got {type(state).__name__}")


def _suggest_levels(ratio: float, tail_tol: float) -> int | None:
    if not 0.0 < ratio < 1.0:
        return None
    return int(math.ceil(math.log(tail_tol) / math.log(ratio)))


def tmsv_fock(chi: float, cutoff: int, tail_tol: float = TAIL_TOL) -> FockStateVector:
    """sqrt(1 - chi^2) * sum_n chi^n |n, n> on ``cutoff`` levels per mode."""
    if not 0.0 <= chi < 1.0:
        raise DomainError(f"chi={chi} outside [0, 1)")
    if cutoff < 1:
        raise DomainError("cutoff must be at least 1")
    if chi > 0.0 and chi ** (2 * cutoff) > tail_tol:
        need = _suggest_levels(chi * chi, tail_tol)
        raise CutoffError(
            f"cutoff {cutoff} leaves tail mass {chi ** (2 * cutoff):.3g} > {tail_tol:g}; "
            f"use cutoff >= {need}",
            suggested=need,
        )
    n = np.arange(cutoff)
    psi = np.zeros((cutoff, cutoff), dtype=complex)
    psi[n, n] = math.sqrt(1.0 - chi * chi) * chi ** n
    return FockStateVector(psi)


def squeezed_vacuum_fock(r: float, cutoff: int) -> FockStateVector:
    """Single-mode squeezed vacuum (x anti-squeezed) held in mode 2, mode 1 empty."""
    amps = np.zeros(cutoff, dtype=complex)
    t = math.tanh(r)
    for n in range(0, (cutoff + 1) // 2):
        log_mag = 0.5 * math.lgamma(2 * n + 1) - n * math.log(2.0) - math.lgamma(n + 1)
        amps[2 * n] = t ** n * math.exp(log_mag)
    amps /= math.sqrt(math.cosh(r))
    return FockStateVector(amps[None, :])


def _check_top_levels(comps: np.ndarray, tail_tol: float, what: str) -> None:
    mass = np.abs(comps) ** 2
    total = mass.sum()
    p2 = mass.sum(axis=(0, 1)) / total
    p1 = mass.sum(axis=(0, 2)) / total
    for label, p in (("mode 2", p2), ("mode 1", p1)):
        if len(p) > 1 and p[-1] > tail_tol:
            ratio = p[-1] / p[-2] if p[-2] > 0 else 0.0
            extra = _suggest_levels(ratio, tail_tol / p[-1]) if ratio else None
            suggested = len(p) + extra if extra else None
            raise CutoffError(
                f"{what}: {label} population {p[-1]:.3g} in the top level exceeds {tail_tol:g}"
                + (f"; try cutoff {suggested}" if suggested else ""),
                suggested=suggested,
            )


def _apply_mode2_diagonal(state, weights: np.ndarray):
    comps = _components(state)
    n2 = comps.shape[2]
    w = np.zeros(n2)
    k = min(n2, len(weights))
    w[:k] = weights[:k]
    out = comps * w[None, None, :]
    return out


def _wrap(comps: np.ndarray, like):
    if isinstance(like, FockStateVector):
        return FockStateVector(comps[0])
    return FockDensityMatrix(comps)


def apply_ideal_nla(state, gain: float, tail_tol: float = TAIL_TOL):
    """Apply g^n on mode 2 and renormalise.

    Returns ``(state, success_weight)`` where the weight is the squared norm
    of the amplified state relative to the input.
    """
    if gain < 1.0:
        raise DomainError(f"NLA gain must be >= 1, got {gain}")
    comps = _components(state)
    before = float(np.sum(np.abs(comps) ** 2))
    out = _apply_mode2_diagonal(state, gain ** np.arange(comps.shape[2], dtype=float))
    after = float(np.sum(np.abs(out) ** 2))
    _check_top_levels(out, tail_tol, "ideal NLA")
    out = out / math.sqrt(after)
    return _wrap(out, state), after / before


@lru_cache(maxsize=64)
def beam_splitter_amplitudes(n_max: int, m_max: int, tau: float) -> np.ndarray:
    """<p, n + m - p| B |n, m> for a signal with n < n_max and ancilla m < m_max.

    Convention: a^dag -> sqrt(tau) a^dag + sqrt(1 - tau) b^dag and
    b^dag -> -sqrt(1 - tau) a^dag + sqrt(tau) b^dag, with a the signal.
    """
    st, sr = math.sqrt(tau), math.sqrt(1.0 - tau)
    out = np.zeros((n_max, m_max, n_max + m_max - 1))
    for n in range(n_max):
        for m in range(m_max):
            acc = np.zeros(n + m + 1)
            for i in range(n + 1):
                ci = math.comb(n, i) * st ** i * sr ** (n - i)
                if ci == 0.0:
                    continue
                for j in range(m + 1):
                    acc[i + j] += ci * math.comb(m, j) * (-sr) ** j * st ** (m - j)
            for p in range(n + m + 1):
                k = n + m - p
                scale = 0.5 * (
                    math.lgamma(p + 1) + math.lgamma(k + 1) - math.lgamma(n + 1) - math.lgamma(m + 1)
                )
                out[n, m, p] = acc[p] * math.exp(scale)
    return out


def _pure_loss_components(comps: np.ndarray, tau: float) -> np.ndarray:
    n2 = comps.shape[2]
    out = []
    for k in range(n2):
        # A_k |n> = sqrt(C(n, k)) tau^((n-k)/2) (1-tau)^(k/2) |n - k>
        n = np.arange(k, n2)
        coef = np.array(
            [math.sqrt(math.comb(int(j), k)) * tau ** ((j - k) / 2) * (1.0 - tau) ** (k / 2) for j in n]
        )
        if not np.any(coef):
            continue
        comp = np.zeros_like(comps)
        comp[:, :, : n2 - k] = comps[:, :, k:] * coef[None, None, :]
        out.append(comp)
    return np.concatenate(out, axis=0)


def _thermal_loss_components(comps: np.ndarray, tau: float, nbar: float, m_max: int) -> np.ndarray:
    n2 = comps.shape[2]
    amps = beam_splitter_amplitudes(n2, m_max, tau)
    q = nbar / (1.0 + nbar)
    out = []
    for m in range(m_max):
        pm = (1.0 - q) * q ** m
        for k in range(n2 + m):
            # input signal n = p + k - m lands on output p with k photons in the ancilla
            t = np.zeros((n2, n2))
            for p in range(n2):
                n = p + k - m
                if 0 <= n < n2:
                    t[p, n] = amps[n, m, p]
            if not np.any(t):
                continue
            out.append(math.sqrt(pm) * np.einsum("kab,pb->kap", comps, t))
    return np.concatenate(out, axis=0)


def apply_loss_fock(state, g: Channel, ancilla_cutoff: int | None = None, tail_tol: float = TAIL_TOL) -> FockDensityMatrix:
    """Loss channel on mode 2 by coupling to a vacuum or thermal ancilla."""
    if not 0.0 <= g.tau <= 1.0:
        raise UnsupportedStateError(f"apply_loss_fock needs a loss channel, got tau={g.tau}")
    comps = _components(state)
    before = float(np.sum(np.abs(comps) ** 2))
    if g.tau == 1.0:
        if g.v > 0.0:
            raise UnsupportedStateError("additive noise is not a loss channel")
        return FockDensityMatrix(comps.copy())
    eps = g.eps
    if eps < 1.0 - 1e-12:
        raise DomainError(f"loss channel with eps={eps} < 1 is unphysical")
    if eps <= 1.0 + 1e-12:
        return FockDensityMatrix(_pure_loss_components(comps, g.tau))
    nbar = (eps - 1.0) / 2.0
    q = nbar / (1.0 + nbar)
    need = _suggest_levels(q, tail_tol)
    if ancilla_cutoff is None:
        ancilla_cutoff = need
    elif q ** ancilla_cutoff > tail_tol:
        raise CutoffError(
            f"ancilla cutoff {ancilla_cutoff} leaves thermal tail {q ** ancilla_cutoff:.3g}; "
            f"use >= {need}",
            suggested=need,
        )
    out = _thermal_loss_components(comps, g.tau, nbar, ancilla_cutoff)
    lost = 1.0 - float(np.sum(np.abs(out) ** 2)) / before - q ** ancilla_cutoff
    if lost > 10.0 * tail_tol:
        raise CutoffError(
            f"thermal loss pushed {lost:.3g} of the population above the mode-2 cutoff",
            suggested=comps.shape[2] + ancilla_cutoff,
        )
    return FockDensityMatrix(out)


def apply_scissor_T1(state, gain: float):
    """Single quantum scissor: keep |0>, |1> of mode 2 and weight |1> by g.

    Returns ``(state, success_weight)``; the weight is the squared norm of
    the unnormalised output relative to the input.
    """
    if gain < 1.0:
        raise DomainError(f"scissor gain must be >= 1, got {gain}")
    comps = _components(state)
    before = float(np.sum(np.abs(comps) ** 2))
    out = np.zeros(comps.shape[:2] + (2,), dtype=complex)
    out[:, :, 0] = comps[:, :, 0]
    if comps.shape[2] > 1:
        out[:, :, 1] = gain * comps[:, :, 1]
    out /= math.sqrt(1.0 + gain * gain)
    after = float(np.sum(np.abs(out) ** 2))
    if after == 0.0:
        raise DomainError("the scissor never succeeds on a state with no 0 or 1 photon population")
    return FockDensityMatrix(out / math.sqrt(after)), after / before


def truncation_operator_PiN(n_scissors: int, gain: float) -> np.ndarray:
    """Diagonal of the N-scissor truncation operator on levels 0..N."""
    if n_scissors < 1:
        raise DomainError("need at least one scissor")
    N = n_scissors
    n = np.arange(N + 1)
    logw = np.array([math.lgamma(N + 1) - math.lgamma(N - k + 1) - k * math.log(N) for k in n])
    return (1.0 / (1.0 + gain * gain)) ** (N / 2.0) * np.exp(logw)


def apply_scissors(state, n_scissors: int, gain: float):
    """N-scissor amplifier T_N = Pi_N g^n on mode 2; returns (state, success_weight)."""
    comps = _components(state)
    before = float(np.sum(np.abs(comps) ** 2))
    diag = truncation_operator_PiN(n_scissors, gain) * gain ** np.arange(n_scissors + 1, dtype=float)
    levels = min(comps.shape[2], n_scissors + 1)
    out = comps[:, :, :levels] * diag[None, None, :levels]
    after = float(np.sum(np.abs(out) ** 2))
    if after == 0.0:
        raise DomainError(f"the {n_scissors}-scissor amplifier never succeeds on this state")
    return FockDensityMatrix(out / math.sqrt(after)), after / before


def _moments(comps: np.ndarray) -> dict[str, complex]:
    n1, n2 = comps.shape[1:]
    s1 = np.sqrt(np.arange(1, n1))
    s2 = np.sqrt(np.arange(1, n2))
    c = comps
    z = float(np.sum(np.abs(c) ** 2))
    mass = np.abs(c) ** 2
    m = {}
    m["a1"] = np.sum(c[:, :-1, :].conj() * s1[None, :, None] * c[:, 1:, :]) / z
    m["a2"] = np.sum(c[:, :, :-1].conj() * s2[None, None, :] * c[:, :, 1:]) / z
    m["n1"] = np.sum(mass * np.arange(n1)[None, :, None]) / z
    m["n2"] = np.sum(mass * np.arange(n2)[None, None, :]) / z
    if n1 > 2:
        s11 = s1[:-1] * s1[1:]
        m["a1a1"] = np.sum(c[:, :-2, :].conj() * s11[None, :, None] * c[:, 2:, :]) / z
    else:
        m["a1a1"] = 0.0
    if n2 > 2:
        s22 = s2[:-1] * s2[1:]
        m["a2a2"] = np.sum(c[:, :, :-2].conj() * s22[None, None, :] * c[:, :, 2:]) / z
    else:
        m["a2a2"] = 0.0
    m["a1a2"] = np.sum(c[:, :-1, :-1].conj() * np.outer(s1, s2)[None] * c[:, 1:, 1:]) / z
    # <a1^dag a2> = sum conj(psi[n+1, m]) sqrt(n+1) sqrt(m+1) psi[n, m+1]
    m["a1d_a2"] = np.sum(c[:, 1:, :-1].conj() * np.outer(s1, s2)[None] * c[:, :-1, 1:]) / z
    return m


def covariance_matrix_fock(state, mean_tol: float = 1e-8) -> np.ndarray:
    """Full 4x4 covariance in (x1, p1, x2, p2) with x = a + a^dag."""
    m = _moments(_components(state))
    if abs(m["a1"]) > mean_tol or abs(m["a2"]) > mean_tol:
        raise UnsupportedStateError(
            f"state has non-zero first moments (<a1>={m['a1']:.3g}, <a2>={m['a2']:.3g})"
        )
    V = np.zeros((4, 4))
    for j, (aa, nn) in enumerate((("a1a1", "n1"), ("a2a2", "n2"))):
        zz = complex(m[aa])
        n = float(np.real(m[nn]))
        V[2 * j, 2 * j] = 2.0 * zz.real + 2.0 * n + 1.0
        V[2 * j + 1, 2 * j + 1] = -2.0 * zz.real + 2.0 * n + 1.0
        V[2 * j, 2 * j + 1] = V[2 * j + 1, 2 * j] = 2.0 * zz.imag
    z12 = complex(m["a1a2"])
    w = complex(m["a1d_a2"])
    V[0, 2] = V[2, 0] = 2.0 * z12.real + 2.0 * w.real
    V[1, 3] = V[3, 1] = -2.0 * z12.real + 2.0 * w.real
    V[0, 3] = V[3, 0] = 2.0 * w.imag + 2.0 * z12.imag
    V[1, 2] = V[2, 1] = -2.0 * w.imag + 2.0 * z12.imag
    return V


def covariance_from_fock(state, mean_tol: float = 1e-8) -> TwoModeCovariance:
    """Standard-form entries (a, b, c1, c2) from the number-basis state."""
    V = covariance_matrix_fock(state, mean_tol)
    return TwoModeCovariance(
        float(0.5 * (V[0, 0] + V[1, 1])),
        float(0.5 * (V[2, 2] + V[3, 3])),
        float(V[0, 2]),
        float(V[1, 3]),
    )


def reduced_density_matrix(state, mode: int = 2) -> np.ndarray:
    comps = _components(state)
    z = float(np.sum(np.abs(comps) ** 2))
    if mode == 1:
        rho = np.einsum("kam,kbm->ab", comps, comps.conj())
    elif mode == 2:
        rho = np.einsum("kna,knb->ab", comps, comps.conj())
    else:
        raise DomainError("mode must be 1 or 2")
    return rho / z


def entropy_of_entanglement(state, purity_tol: float = 1e-8) -> float:
    """Von Neumann entropy (bits) of one mode of a pure two-mode state."""
    if isinstance(state, FockStateVector):
        psi = state.amplitudes
    else:
        comps = _components(state)
        if len(comps) == 1:
            psi = comps[0]
        else:
            dm = FockDensityMatrix(comps)
            if dm.purity() < 1.0 - purity_tol:
                raise UnsupportedStateError("entropy of entanglement needs a pure state")
            flat = comps.reshape(len(comps), -1)
            gram = flat.conj() @ flat.T
            _, vecs = np.linalg.eigh(gram)
            psi = (flat.T @ vecs[:, -1]).reshape(comps.shape[1:])
    s = np.linalg.svd(psi, compute_uv=False)
    p = s ** 2
    p = p[p > 0] / p.sum()
    return float(-np.sum(p * np.log2(p)))
