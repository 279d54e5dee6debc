import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gausslab.channels import Channel
from gausslab.errors import DomainError, UnphysicalError
from gausslab.fidelity import (
    SingleModeGaussian,
    appendix_a_scan,
    apply_channel_1mode,
    gaussian_fidelity_1mode,
    region_label,
    squeezed_vacuum,
    tmsv_channel_fidelity,
)
from gausslab.fock import apply_loss_fock, covariance_matrix_fock, squeezed_vacuum_fock, tmsv_fock


def test_squeezed_vacuum():
    assert squeezed_vacuum(0.0) == SingleModeGaussian(1.0, 1.0)
    s = squeezed_vacuum(0.8)
    assert s.det() == pytest.approx(1.0, abs=1e-12)
    assert s.v_x == pytest.approx(9.0)
    with pytest.raises(DomainError):
        squeezed_vacuum(1.0)
    with pytest.raises(UnphysicalError):
        SingleModeGaussian(0.5, 1.0)


def test_squeezed_vacuum_matches_fock_moments():
    psi = squeezed_vacuum_fock(math.atanh(0.5), 80)
    v = covariance_matrix_fock(psi)
    s = squeezed_vacuum(0.5)
    assert (v[2, 2], v[3, 3]) == pytest.approx((s.v_x, s.v_p), abs=1e-9)


def test_apply_channel_1mode():
    s = squeezed_vacuum(0.8)
    assert apply_channel_1mode(s, Channel.identity()) == s
    vac = SingleModeGaussian(1.0, 1.0)
    out = apply_channel_1mode(vac, Channel(0.3, 0.7))
    assert (out.v_x, out.v_p) == pytest.approx((1.0, 1.0))
    out = apply_channel_1mode(s, Channel.loss(0.6, 1.01))
    assert out.v_x == pytest.approx(0.6 * 9 + 0.4 * 1.01)
    assert out.v_p == pytest.approx(0.6 / 9 + 0.4 * 1.01)


def test_fidelity_examples():
    s = squeezed_vacuum(0.6)
    assert gaussian_fidelity_1mode(s, s) == pytest.approx(1.0, abs=1e-12)
    for z1, z2 in ((0.0, 0.5), (0.3, 0.8), (0.6, 0.2)):
        r1, r2 = math.atanh(z1), math.atanh(z2)
        f = gaussian_fidelity_1mode(squeezed_vacuum(z1), squeezed_vacuum(z2))
        assert f == pytest.approx(1 / math.cosh(r1 - r2), abs=1e-12)


def test_fidelity_matches_fock_overlap():
    for z1, z2 in ((0.0, 0.5), (0.3, 0.7), (0.6, 0.2)):
        a = squeezed_vacuum_fock(math.atanh(z1), 60).components()[0, 0]
        b = squeezed_vacuum_fock(math.atanh(z2), 60).components()[0, 0]
        overlap = abs(np.vdot(a, b)) ** 2
        f = gaussian_fidelity_1mode(squeezed_vacuum(z1), squeezed_vacuum(z2))
        assert f == pytest.approx(overlap, abs=1e-6)


states = st.tuples(st.floats(0.1, 10), st.floats(0.1, 10)).filter(lambda t: t[0] * t[1] >= 1).map(
    lambda t: SingleModeGaussian(*t)
)


@settings(max_examples=300, deadline=None)
@given(states, states)
def test_fidelity_bounds_and_symmetry(s1, s2):
    f = gaussian_fidelity_1mode(s1, s2)
    assert 0.0 < f <= 1.0 + 1e-12
    assert f == pytest.approx(gaussian_fidelity_1mode(s2, s1), rel=1e-12)
    assert gaussian_fidelity_1mode(s1, s1) == pytest.approx(1.0, abs=1e-12)


def test_tmsv_channel_fidelity_matches_fock_overlap():
    psi = tmsv_fock(0.5, 40)
    vec = psi.amplitudes.reshape(-1)
    for g in (Channel(0.5, 0.5), Channel(0.8, 0.2), Channel.loss(0.6, 1.3)):
        rho = apply_loss_fock(psi, g).matrix()
        overlap = float(np.real(np.vdot(vec, rho @ vec)))
        assert tmsv_channel_fidelity(0.5, g) == pytest.approx(overlap, abs=1e-6)
    assert tmsv_channel_fidelity(0.5, Channel.identity()) == pytest.approx(1.0, abs=1e-12)


def test_region_labels():
    assert region_label(True, True) == 1
    assert region_label(False, True) == 2
    assert region_label(False, False) == 3
    assert region_label(True, False) == 4


def test_scan_identity_amplifier_gives_equal_fidelities():
    for mode in ("two-mode", "single-mode"):
        res = appendix_a_scan(0.8, 1.01, 1.0, np.linspace(0.1, 0.9, 5), [1.0], input_state=mode)
        assert np.allclose(res.f1, res.f2, atol=1e-14)


def test_scan_partitions_grid_and_finds_region_one():
    t1 = np.linspace(0.01, 0.99, 30)
    t2 = np.linspace(1.0, 3.0, 30)
    res = appendix_a_scan(0.8, 1.01, 2.5, t1, t2)
    assert sum(res.count(k) for k in (1, 2, 3, 4)) == res.region.size
    assert res.count(1) > 0
    assert np.all(res.f1 > 0) and np.all(res.f2 <= 1 + 1e-12)


def test_single_mode_reading_never_improves_fidelity():
    res = appendix_a_scan(0.8, 1.01, 2.5, np.linspace(0.01, 0.99, 20), np.linspace(1, 3, 20), input_state="single-mode")
    assert res.count(1) == 0
    assert np.all(res.f2 <= res.f1 + 1e-12)


def test_scan_rejects_bad_inputs():
    with pytest.raises(DomainError):
        appendix_a_scan(0.8, 0.9, 2.5, [0.5], [1.5])
    with pytest.raises(DomainError):
        appendix_a_scan(0.8, 1.01, 2.5, [0.5], [1.5], input_state="three-mode")
