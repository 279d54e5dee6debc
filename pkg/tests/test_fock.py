import math

import numpy as np
import pytest

from gausslab.channels import Channel, apply_to_mode2
from gausslab.entanglement import eof_from_ro
from gausslab.errors import CutoffError, DomainError, UnsupportedStateError
from gausslab.fock import (
    FockDensityMatrix,
    FockStateVector,
    apply_ideal_nla,
    apply_loss_fock,
    apply_scissor_T1,
    apply_scissors,
    beam_splitter_amplitudes,
    covariance_from_fock,
    entropy_of_entanglement,
    reduced_density_matrix,
    tmsv_fock,
    truncation_operator_PiN,
)
from gausslab.gaussian import TwoModeCovariance, tmsv


def product_state(a, b):
    return FockStateVector(np.outer(a, b).astype(complex))


def test_tmsv_fock_amplitudes():
    psi = tmsv_fock(0.0, 5)
    assert psi.amplitudes[0, 0] == 1 and psi.norm2() == 1
    psi = tmsv_fock(0.5, 30)
    probs = np.abs(np.diag(psi.amplitudes)) ** 2
    n = np.arange(30)
    assert np.allclose(probs, 0.75 * 0.25**n, atol=1e-15)
    off = psi.amplitudes - np.diag(np.diag(psi.amplitudes))
    assert not off.any()


def test_tmsv_fock_covariance():
    sigma = covariance_from_fock(tmsv_fock(0.5, 40))
    assert np.allclose(sigma.matrix(), tmsv(0.5).matrix(), atol=1e-6)
    assert covariance_from_fock(tmsv_fock(0.0, 3)) == TwoModeCovariance.vacuum()


def test_tmsv_fock_cutoff_error_suggests_cutoff():
    with pytest.raises(CutoffError) as info:
        tmsv_fock(0.9, 20)
    need = info.value.suggested
    assert need is not None and 0.81**need <= 1e-10
    tmsv_fock(0.9, need)


def test_ideal_nla_scales_chi():
    psi = tmsv_fock(0.5, 60)
    same, w = apply_ideal_nla(psi, 1.0)
    assert np.allclose(same.amplitudes, psi.amplitudes) and w == pytest.approx(1.0)
    out, w = apply_ideal_nla(psi, 1.5)
    assert np.allclose(out.amplitudes, tmsv_fock(0.75, 60).amplitudes, atol=1e-12)
    assert w == pytest.approx((1 - 0.25) / (1 - 0.5625), rel=1e-9)
    sigma = covariance_from_fock(out)
    assert np.allclose(sigma.matrix(), tmsv(0.75).matrix(), atol=1e-6)


def test_ideal_nla_cutoff_error():
    with pytest.raises(CutoffError):
        apply_ideal_nla(tmsv_fock(0.5, 20), 1.9)
    with pytest.raises(DomainError):
        apply_ideal_nla(tmsv_fock(0.5, 20), 0.5)


def test_beam_splitter_is_unitary():
    n_max = m_max = 6
    amps = beam_splitter_amplitudes(n_max, m_max, 0.3)
    # rows of fixed total photon number form an orthogonal matrix
    for total in range(n_max):
        pairs = [(n, total - n) for n in range(total + 1)]
        u = np.array([[amps[n, m, p] for p in range(total + 1)] for n, m in pairs])
        assert np.allclose(u @ u.T, np.eye(total + 1), atol=1e-12)


def test_pure_loss_vacuum_fixed_point():
    vac = product_state([1, 0, 0], [1, 0, 0])
    out = apply_loss_fock(vac, Channel(0.3, 0.7))
    rho = out.matrix()
    assert rho[0, 0] == pytest.approx(1.0)
    assert np.allclose(rho - np.diag(np.diag(rho)), 0)


def test_pure_loss_matches_gaussian():
    out = apply_loss_fock(tmsv_fock(0.5, 40), Channel(0.5, 0.5))
    expected = apply_to_mode2(tmsv(0.5), Channel(0.5, 0.5))
    assert np.allclose(covariance_from_fock(out).matrix(), expected.matrix(), atol=1e-6)


def test_thermal_loss_matches_gaussian():
    g = Channel.loss(0.5, 1.05)
    out = apply_loss_fock(tmsv_fock(0.5, 40), g, ancilla_cutoff=8)
    expected = apply_to_mode2(tmsv(0.5), g)
    assert np.allclose(covariance_from_fock(out).matrix(), expected.matrix(), atol=1e-4)
    with pytest.raises(CutoffError) as info:
        apply_loss_fock(tmsv_fock(0.5, 40), g, ancilla_cutoff=3)
    assert info.value.suggested > 3


def test_loss_rejects_non_loss_channels():
    psi = tmsv_fock(0.3, 20)
    with pytest.raises(UnsupportedStateError):
        apply_loss_fock(psi, Channel(1.5, 0.5))
    with pytest.raises(UnsupportedStateError):
        apply_loss_fock(psi, Channel(1.0, 0.3))


def test_density_matrices_stay_psd_and_normalised():
    rho = apply_loss_fock(tmsv_fock(0.5, 25), Channel.loss(0.6, 1.2))
    for state in (rho, apply_ideal_nla(rho, 1.3)[0], apply_scissor_T1(rho, 2.0)[0], apply_scissors(rho, 3, 1.5)[0]):
        m = state.matrix()
        # the thermal ancilla is truncated at a 1e-10 tail
        assert state.trace() == pytest.approx(1.0, abs=1e-9)
        assert np.allclose(m, m.conj().T)
        assert np.linalg.eigvalsh(m).min() > -1e-12


def test_scissor_T1_examples():
    g = 2.0
    vac = product_state([1], [1, 0, 0])
    out, w = apply_scissor_T1(vac, g)
    assert w == pytest.approx(1 / (1 + g * g))
    assert out.matrix()[0, 0] == pytest.approx(1.0)
    alpha, beta = 0.6, 0.8
    out, w = apply_scissor_T1(product_state([1], [alpha, beta, 0]), g)
    unnorm = np.array([alpha, g * beta]) / math.sqrt(1 + g * g)
    assert w == pytest.approx(np.sum(unnorm**2))
    assert np.allclose(out.components()[0, 0], unnorm / np.linalg.norm(unnorm))
    with pytest.raises(DomainError):
        apply_scissor_T1(product_state([1], [0, 0, 1]), g)


def test_scissor_drops_higher_levels():
    psi = product_state([1], [0.6, 0.0, 0.8])
    out, w = apply_scissor_T1(psi, 1.5)
    assert out.shape == (1, 2)
    assert w == pytest.approx(0.36 / (1 + 2.25))


def test_PiN_examples():
    g = 1.7
    w1 = truncation_operator_PiN(1, g)
    assert np.allclose(w1, np.array([1.0, 1.0]) / math.sqrt(1 + g * g))
    rho = apply_loss_fock(tmsv_fock(0.5, 25), Channel(0.5, 0.5))
    a, wa = apply_scissors(rho, 1, g)
    b, wb = apply_scissor_T1(rho, g)
    assert np.allclose(a.matrix(), b.matrix(), atol=1e-14)
    assert wa == pytest.approx(wb, abs=1e-12)
    with pytest.raises(DomainError):
        truncation_operator_PiN(0, g)


def test_PiN_large_N_recovers_ideal_nla_shape():
    g, N = 1.3, 64
    w = truncation_operator_PiN(N, g)
    ratio = w[:5] / w[0]
    assert np.allclose(ratio, 1.0, atol=0.2)
    assert np.all(np.diff(ratio) <= 1e-12)
    w8 = truncation_operator_PiN(8, g)
    assert abs(ratio[3] - 1) < abs(w8[3] / w8[0] - 1)
    psi = tmsv_fock(0.3, 30)
    ideal = covariance_from_fock(apply_ideal_nla(psi, g)[0]).matrix()
    gaps = [
        np.abs(covariance_from_fock(apply_scissors(psi, n, g)[0]).matrix() - ideal).max()
        for n in (4, 16, 64, 256)
    ]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 2e-3


def test_covariance_rejects_displaced_states():
    psi = product_state([1], np.array([1.0, 1.0, 0.0]) / math.sqrt(2))
    with pytest.raises(UnsupportedStateError):
        covariance_from_fock(psi)


def test_entropy_examples():
    assert entropy_of_entanglement(product_state([0.6, 0.8], [1, 0])) == pytest.approx(0.0, abs=1e-12)
    for chi in (0.2, 0.5, 0.8):
        psi = tmsv_fock(chi, 120)
        assert entropy_of_entanglement(psi) == pytest.approx(eof_from_ro(math.atanh(chi)), abs=1e-6)
    psi = tmsv_fock(0.5, 40)
    phases = np.exp(1j * 0.7 * np.arange(40))
    rotated = FockStateVector(psi.amplitudes * phases[None, :])
    assert entropy_of_entanglement(rotated) == pytest.approx(entropy_of_entanglement(psi), abs=1e-12)


def test_entropy_rejects_mixed_states():
    rho = apply_loss_fock(tmsv_fock(0.5, 25), Channel(0.5, 0.5))
    with pytest.raises(UnsupportedStateError):
        entropy_of_entanglement(rho)
    pure = FockDensityMatrix.from_vector(tmsv_fock(0.5, 30))
    assert entropy_of_entanglement(pure) == pytest.approx(eof_from_ro(math.atanh(0.5)), abs=1e-6)


def test_reduced_density_matrix_is_thermal_for_tmsv():
    red = reduced_density_matrix(tmsv_fock(0.5, 30), mode=1)
    n = np.arange(30)
    assert np.allclose(np.diag(red).real, 0.75 * 0.25**n, atol=1e-15)
