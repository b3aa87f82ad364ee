import math

import numpy as np
import pytest

import blochorbit as bo


def test_density_round_trip():
    rng = np.random.default_rng(3)
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    s = bo.from_density(rho)
    assert np.allclose(bo.to_density(s), rho, atol=1e-14)
    assert bo.validate(s)["valid"]


def test_invalid_density_raises():
    with pytest.raises(ValueError):
        bo.from_density(np.diag([1.5, -0.5, 0, 0]).astype(complex))


def test_product_state_layout():
    s = bo.product_state([0.5, 0, 0], [0, 0, 0.5])
    assert s.T[0, 2] == 0.5
    assert bo.validate(s)["product"]


def test_one_dim_matches_oracle():
    s = bo.product_state([0.5, 0, 0], [0, 0, 0.5])
    spec = bo.OneDimInteraction(bo.Axis.z, bo.Axis.z, math.pi / 2)
    out = bo.apply_interaction(s, spec)
    assert np.allclose(out.r1, [0, 0.5, 0], atol=1e-15)
    assert out.max_abs_diff(bo.oracle.evolve_state(s, spec)) < 1e-12


def test_trace_orbit_shapes():
    s = bo.product_state([0.2, 0.1, 0], [0, 0.3, 0])
    phi, rows = bo.trace_orbit(s, bo.HeisenbergExchange(1.0), 1.0, 5)
    assert phi.shape == (5,)
    assert rows.shape == (5, 15)
    assert np.allclose(rows[0, :3], s.r1)


def test_ellipse_and_entanglement():
    s = bo.product_state([0, 0, 0.5], [0, 0, -0.5])
    rep = bo.heisenberg_entanglement_scan(s, 1.0, 64)
    assert rep.maximal
    assert rep.phi_star == pytest.approx(math.pi / 4)
    e = bo.fit_one_dim(bo.product_state([0.3, 0, 0], [0, 0.2, 0]), bo.Subsystem.first, bo.Axis.z, bo.Axis.y)
    assert abs(e.chi) < 1e-12
    assert e.b == pytest.approx(2 * 0.2 * 0.3)


def test_reachable_samples_inside_disk():
    s = bo.product_state([0.3, 0.1, 0.2], [0, 0.5, 0])
    disk = bo.reachable_disk(s, bo.Axis.z, bo.Axis.x)
    for r in bo.sample_reachable(s, bo.Axis.z, bo.Axis.x, 200, 2, 7):
        assert disk.ellipse_value(r) <= 1 + 1e-9
