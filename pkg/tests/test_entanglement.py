import math

import numpy as np
import pytest

from gausslab.channels import Channel, apply_to_mode2
from gausslab.entanglement import (
    decompose_tmsv_channel,
    eof_from_ro,
    eof_state,
    log_negativity,
    ro_choi,
    ro_tmsv_through_channel,
)
from gausslab.errors import DomainError, UnphysicalError, UnsupportedStateError
from gausslab.fock import entropy_of_entanglement, tmsv_fock
from gausslab.gaussian import TwoModeCovariance, symplectic_eigenvalues_numeric, tmsv

from oracles import eof_literal, eof_symmetric, ro_choi_literal, ro_literal


def channel_grid():
    for tau in np.linspace(0.05, 2.0, 14):
        lo, hi = abs(1 - tau), 1 + tau
        for f in np.linspace(0, 0.98, 8):
            g = Channel(float(tau), float(lo + f * (hi - lo)))
            if not g.is_identity():
                yield g


def test_eof_from_ro_examples():
    assert eof_from_ro(0.0) == 0.0
    r5, r9 = math.atanh(0.5), math.atanh(0.9)
    assert eof_from_ro(r5) == pytest.approx(eof_literal(r5), rel=1e-14)
    assert eof_from_ro(r9) > eof_from_ro(r5)
    with pytest.raises(DomainError):
        eof_from_ro(-0.1)


def test_eof_matches_fock_entropy():
    for chi in (0.1, 0.3, 0.5, 0.7):
        psi = tmsv_fock(chi, 80)
        assert entropy_of_entanglement(psi) == pytest.approx(eof_from_ro(math.atanh(chi)), abs=1e-6)


def test_ro_matches_literal_form():
    for r in (0.1, 0.5, 1.0, 2.0):
        for g in channel_grid():
            assert ro_tmsv_through_channel(r, g) == pytest.approx(ro_literal(r, g.tau, g.v), abs=1e-9)


def test_ro_limits():
    r = math.atanh(0.6)
    assert ro_tmsv_through_channel(r, Channel(1.0, 1e-9)) == pytest.approx(r, abs=1e-6)
    for tau in (0.2, 1.0, 1.7):
        assert ro_tmsv_through_channel(r, Channel(tau, 1 + tau)) == 0.0


def test_ro_fig4_channel_roundtrip():
    r = math.atanh(0.5)
    g = Channel.loss(0.5, 1.05)
    assert g.v == pytest.approx(0.525)
    out = apply_to_mode2(tmsv(0.5), g)
    r2, g2 = decompose_tmsv_channel(out)
    value = ro_tmsv_through_channel(r, g)
    assert value > 0
    assert ro_tmsv_through_channel(r2, g2) == pytest.approx(value, abs=1e-12)


def test_ro_rejects_unphysical():
    with pytest.raises(UnphysicalError):
        ro_tmsv_through_channel(0.5, Channel(0.5, 0.3))


def test_ro_stable_at_large_squeezing():
    g = Channel.loss(0.5, 1.05)
    values = [ro_tmsv_through_channel(r, g) for r in (5, 10, 20, 40)]
    assert all(np.isfinite(values))
    assert values[-1] == pytest.approx(ro_choi(g), abs=1e-12)


def test_choi_examples():
    assert ro_choi(Channel(1, 2)) == 0.0
    assert ro_choi(Channel(1, 1)) == pytest.approx(0.25 * math.log(4))
    assert ro_choi(Channel(0.5, 0.5)) == pytest.approx(math.atanh(math.sqrt(0.5)), abs=1e-9)
    with pytest.raises(DomainError):
        ro_choi(Channel.identity())


def test_choi_matches_literal_form():
    for g in channel_grid():
        if g.tau == 1.0:
            continue
        assert ro_choi(g) == pytest.approx(ro_choi_literal(g.tau, g.v), abs=1e-9)


def test_choi_pure_loss_closed_form():
    for tau in np.arange(0.1, 0.95, 0.1):
        assert ro_choi(Channel(tau, 1 - tau)) == pytest.approx(math.atanh(math.sqrt(tau)), abs=1e-9)


def test_choi_is_large_squeezing_limit():
    for g in channel_grid():
        assert ro_tmsv_through_channel(10.0, g) == pytest.approx(ro_choi(g), abs=1e-6)


def test_decompose_examples():
    r, g = decompose_tmsv_channel(tmsv(0.4))
    assert r == pytest.approx(math.atanh(0.4))
    assert g.tau == pytest.approx(1.0) and g.v == pytest.approx(0.0, abs=1e-12)
    r, g = decompose_tmsv_channel(apply_to_mode2(tmsv(0.5), Channel(0.7, 0.4)))
    assert (r, g.tau, g.v) == pytest.approx((math.atanh(0.5), 0.7, 0.4), abs=1e-10)
    r, g = decompose_tmsv_channel(TwoModeCovariance.balanced(5 / 3, 4 / 3, 4 / 3 * math.sqrt(0.5)))
    assert (r, g.tau, g.v) == pytest.approx((math.atanh(0.5), 0.5, 0.5), abs=1e-12)


def test_decompose_rejects():
    with pytest.raises(UnsupportedStateError):
        decompose_tmsv_channel(TwoModeCovariance.vacuum())
    with pytest.raises(UnsupportedStateError):
        decompose_tmsv_channel(TwoModeCovariance(2, 2, 1, 0.5))


def test_eof_state_examples():
    assert eof_state(TwoModeCovariance.vacuum()) == 0.0
    assert eof_state(tmsv(0.5)) == pytest.approx(eof_from_ro(math.atanh(0.5)), rel=1e-12)
    g = Channel(0.5, 0.525)
    out = apply_to_mode2(tmsv(0.5), g)
    direct = eof_from_ro(ro_tmsv_through_channel(math.atanh(0.5), g))
    assert eof_state(out) == pytest.approx(direct, abs=1e-12)
    flipped = TwoModeCovariance(out.a, out.b, -out.c1, -out.c2)
    assert eof_state(flipped) == pytest.approx(direct, abs=1e-12)


def test_eof_state_is_symmetric_under_mode_swap():
    for g in channel_grid():
        out = apply_to_mode2(tmsv(0.5), g)
        # on pure channels sqrt(v^2 - (1 - tau)^2) turns 1e-16 roundoff into 1e-8
        assert eof_state(out.swapped()) == pytest.approx(eof_state(out), abs=1e-7)


def test_eof_state_rejects_general_correlations():
    with pytest.raises(UnsupportedStateError):
        eof_state(TwoModeCovariance(2, 2, 1, 0.5))


def test_eof_matches_symmetric_state_oracle():
    # states with b = a: pick tau and set v = a(1 - tau)
    for chi in (0.3, 0.6, 0.85):
        s = tmsv(chi)
        for tau in (0.3, 0.6, 0.9):
            g = Channel(tau, s.a * (1 - tau))
            out = apply_to_mode2(s, g)
            assert out.b == pytest.approx(out.a)
            nu_pt = symplectic_eigenvalues_numeric(out.partial_transpose()).nu_minus
            assert eof_state(out) == pytest.approx(eof_symmetric(nu_pt), abs=1e-9)


def test_log_negativity():
    assert log_negativity(TwoModeCovariance.vacuum()) == 0.0
    for chi in (0.2, 0.5, 0.9):
        assert log_negativity(tmsv(chi)) == pytest.approx(math.log2((1 + chi) / (1 - chi)), rel=1e-12)
    out = apply_to_mode2(tmsv(0.5), Channel(0.6, 0.9))
    nu = symplectic_eigenvalues_numeric(out.partial_transpose()).nu_minus
    assert log_negativity(out) == pytest.approx(-math.log2(nu), abs=1e-10)
    assert log_negativity(apply_to_mode2(tmsv(0.5), Channel(0.6, 1.6))) == 0.0
