import math

import numpy as np
import pytest

from thermal_jcm import (
    DomainError,
    JcmParams,
    assemble_dense,
    evolve,
    joint_spectrum,
    reduced_atom,
    reduced_field,
    thermal_distribution,
    von_neumann_entropy,
)


def test_params_validation():
    with pytest.raises(DomainError):
        JcmParams(g=0.0, t=1.0)
    with pytest.raises(DomainError):
        JcmParams(g=-1.0, t=1.0)
    with pytest.raises(DomainError):
        JcmParams(g=1.0, t=-0.1)
    assert JcmParams(g=2.0, t=3.0).tau == 6.0
    assert JcmParams.from_tau(5.0, g=2.0).t == 2.5


def test_identity_evolution_at_t_zero():
    dist = thermal_distribution(1.0, 1e-12)
    state = evolve(dist, JcmParams(g=1.0, t=0.0))
    np.testing.assert_array_equal(state.cos_amp, 1.0)
    np.testing.assert_array_equal(state.sin_amp, 0.0)
    for weight, (c, s) in state.blocks:
        assert (c, s) == (1.0, 0.0)


def test_vacuum_quarter_turn_block():
    dist = thermal_distribution(0.0)
    state = evolve(dist, JcmParams.from_tau(math.pi / 4))
    p0, (c0, s0) = state.blocks[0]
    assert p0 == 1.0
    assert c0 == pytest.approx(math.sqrt(0.5), abs=1e-15)
    assert s0 == pytest.approx(math.sqrt(0.5), abs=1e-15)


def test_block_angle_scales_with_sqrt_n_plus_one():
    dist = thermal_distribution(1.0, 1e-12)
    state = evolve(dist, JcmParams.from_tau(math.pi / 4))
    # block 1 rotates by (pi/4) sqrt(2)
    assert state.cos_amp[1] == pytest.approx(0.4440158403262133, abs=1e-15)


def test_amplitude_normalization_per_block():
    dist = thermal_distribution(2.0, 1e-12)
    state = evolve(dist, JcmParams.from_tau(7.3))
    np.testing.assert_allclose(state.cos_amp**2 + state.sin_amp**2, 1.0, atol=1e-14)


def test_reduced_atom_examples():
    dist = thermal_distribution(0.5, 1e-12)
    p_e, p_g = reduced_atom(evolve(dist, JcmParams(t=0.0)))
    assert p_e == pytest.approx(1.0, abs=1e-12)
    assert p_g == 0.0

    vac = thermal_distribution(0.0)
    p_e, p_g = reduced_atom(evolve(vac, JcmParams.from_tau(math.pi / 4)))
    assert p_e == pytest.approx(0.5, abs=1e-14)
    assert p_g == pytest.approx(0.5, abs=1e-14)


def test_reduced_traces_are_preserved():
    dist = thermal_distribution(3.0, 1e-12)
    total = float(np.sum(dist.probs))
    for tau in (0.0, 0.7, 4.1, 19.0):
        state = evolve(dist, JcmParams.from_tau(tau))
        p_e, p_g = reduced_atom(state)
        assert p_e + p_g == pytest.approx(total, abs=1e-12)
        assert float(np.sum(reduced_field(state))) == pytest.approx(total, abs=1e-12)


def test_reduced_field_vacuum_emission():
    vac = thermal_distribution(0.0)
    q = reduced_field(evolve(vac, JcmParams.from_tau(math.pi / 2)))
    assert q[0] == pytest.approx(0.0, abs=1e-30)
    assert q[1] == pytest.approx(1.0, abs=1e-14)

    q0 = reduced_field(evolve(vac, JcmParams(t=0.0)))
    np.testing.assert_allclose(q0[: vac.cutoff + 1], vac.probs, atol=1e-15)


def test_joint_spectrum_is_time_invariant():
    dist = thermal_distribution(1.0, 1e-12)
    spec_a = joint_spectrum(evolve(dist, JcmParams(t=0.0)))
    spec_b = joint_spectrum(evolve(dist, JcmParams(t=7.3)))
    np.testing.assert_array_equal(spec_a, dist.probs)
    np.testing.assert_array_equal(spec_a, spec_b)


def test_block_periodicity():
    # theta_n advances by pi over one Rabi period 2 pi / (2 g sqrt(n+1)),
    # so the amplitude pair returns up to a global sign: populations and
    # the coherence product are what must match.
    dist = thermal_distribution(1.0, 1e-12)
    g = 1.0
    for n in (0, 3, 10):
        t = 1.7
        period = 2.0 * math.pi / (2.0 * g * math.sqrt(n + 1.0))
        s1 = evolve(dist, JcmParams(g=g, t=t))
        s2 = evolve(dist, JcmParams(g=g, t=t + period))
        assert s1.cos_amp[n] ** 2 == pytest.approx(s2.cos_amp[n] ** 2, abs=1e-10)
        assert s1.cos_amp[n] * s1.sin_amp[n] == pytest.approx(
            s2.cos_amp[n] * s2.sin_amp[n], abs=1e-10
        )


def test_pure_global_state_for_vacuum_field():
    vac = thermal_distribution(0.0)
    state = evolve(vac, JcmParams.from_tau(math.pi / 4))
    assert von_neumann_entropy(joint_spectrum(state)) == 0.0
    # mutual information of a pure state doubles the marginal entropy
    p_e, p_g = reduced_atom(state)
    s_atom = von_neumann_entropy([p_e, p_g])
    s_field = von_neumann_entropy(reduced_field(state))
    assert s_atom + s_field == pytest.approx(2.0 * s_atom, abs=1e-12)


def test_assemble_dense_structure():
    dist = thermal_distribution(1.0, 1e-12)
    state = evolve(dist, JcmParams.from_tau(1.3))
    dm = assemble_dense(state, normalize=False)
    a = dm.entries
    levels = dist.cutoff + 2
    assert dm.subsystem_dims == (2, levels)
    assert float(np.trace(a).real) == pytest.approx(float(np.sum(dist.probs)), abs=1e-12)
    # coherence between |e,n> and |g,n+1> is +i P_n c_n s_n
    n = 2
    expected = 1j * dist.probs[n] * state.cos_amp[n] * state.sin_amp[n]
    assert a[levels + n, n + 1] == pytest.approx(expected, abs=1e-15)
    assert a[n + 1, levels + n] == pytest.approx(np.conj(expected), abs=1e-15)
    # no atom coherence: the (g, e) blocks touch only the one-step ladder
    assert a[0, levels + 0] == 0.0


def test_assemble_dense_rejects_short_field_space():
    dist = thermal_distribution(1.0, 1e-12)
    state = evolve(dist, JcmParams.from_tau(1.0))
    with pytest.raises(DomainError):
        assemble_dense(state, n_levels=dist.cutoff + 1)
