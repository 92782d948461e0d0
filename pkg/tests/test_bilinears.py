import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import field_arrays
from stadirac import oracle
from stadirac.bilinears import (FieldJet, FieldPoint, angular_momentum_density, bilinears, lagrangian_density,
                                momentum_density, orbital_angular_momentum_density, pseudoscalar_bilinear,
                                pseudovector_components, pseudovector_current, pseudovector_current_multivector,
                                scalar_bilinear, spin_density, vector_components, vector_current,
                                vector_current_multivector)
from stadirac.rotors import random_rotor, sandwich
from stadirac.sta_core import E, E0, I, Multivector

PAIRS = [(i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]


def point(f=0.0, E=(0, 0, 0), B=(0, 0, 0), g=0.0):
    return FieldPoint(f, np.array(E, float), np.array(B, float), g)


# FieldPoint / FieldJet ----------------------------------------------------------

@given(field_arrays)
def test_field_point_multivector_round_trip(a):
    p = FieldPoint.from_array(a)
    m = p.to_multivector()
    assert m.is_even()
    assert np.array_equal(FieldPoint.from_multivector(m).as_array(), a)


def test_field_point_basis_convention():
    m = point(f=1, E=(2, 0, 0), B=(0, 3, 0), g=4).to_multivector()
    assert m == 1 + 2 * (E[1] * E0) + 3 * (I * E[2] * E0) + 4 * I


def test_field_point_rejects_odd_multivectors_and_bad_shapes():
    with pytest.raises(ValueError):
        FieldPoint.from_multivector(point(f=1).to_multivector() + E0)
    with pytest.raises(ValueError):
        FieldPoint.from_array(np.zeros(7))
    with pytest.raises(ValueError):
        FieldPoint(0.0, np.zeros(2), np.zeros(3), 0.0)


def test_field_jet_shape_checked():
    with pytest.raises(ValueError):
        FieldJet(point(), np.zeros((3, 8)))
    jet = FieldJet.constant(point(f=2))
    assert np.array_equal(jet.d, np.zeros((4, 8)))
    assert jet.fd_order is None


# point bilinears ---------------------------------------------------------------

def test_scalar_examples():
    Ev, Bv = np.array([1.0, 2.0, -1.0]), np.array([0.5, 0.0, 3.0])
    assert scalar_bilinear(point(E=Ev, B=Bv)) == pytest.approx(Bv @ Bv - Ev @ Ev, abs=1e-15)
    assert scalar_bilinear(point(f=1)) == 1


def test_pseudoscalar_examples():
    Ev, Bv = np.array([1.0, 2.0, -1.0]), np.array([0.5, 0.0, 3.0])
    assert pseudoscalar_bilinear(point(E=Ev, B=Bv)) == pytest.approx(-2 * Ev @ Bv, abs=1e-15)
    assert pseudoscalar_bilinear(point(E=(1, 0, 0), B=(0, 2, 0))) == 0


def test_vector_current_examples():
    Ev, Bv = np.array([1.0, 2.0, -1.0]), np.array([0.5, 0.0, 3.0])
    j = vector_current(point(E=Ev, B=Bv))
    assert j[0] == pytest.approx(Ev @ Ev + Bv @ Bv)
    assert np.allclose(j[1:], 2 * np.cross(Ev, Bv), atol=1e-15)
    assert np.array_equal(vector_current(point(f=1)), [1, 0, 0, 0])


def test_pseudovector_current_examples():
    assert np.array_equal(pseudovector_current(point(B=(0, 0, 1))), [0, 0, 0, -1])
    Ev, Bv = np.array([1.0, 2.0, -1.0]), np.array([0.5, 0.0, 3.0])
    poynting = np.cross(Ev, Bv)
    stress = np.outer(Ev, Ev) + np.outer(Bv, Bv) - 0.5 * np.eye(3) * (Ev @ Ev + Bv @ Bv)
    j5 = pseudovector_current(point(E=Ev, B=Bv))
    assert np.allclose(j5, [2 * poynting[2], -2 * stress[2, 0], -2 * stress[2, 1], -2 * stress[2, 2]], atol=1e-14)


def test_point_bilinears_match_oracle(rng):
    for _ in range(1000):
        p = FieldPoint.random(rng)
        ref = oracle.point_bilinears(oracle.bispinor(p))
        b = bilinears(p)
        assert abs(b.scalar - ref["scalar"]) < 1e-12
        assert abs(b.pseudoscalar - ref["pseudoscalar"]) < 1e-12
        assert np.max(np.abs(b.j - ref["j"])) < 1e-12
        assert np.max(np.abs(b.j5 - ref["j5"])) < 1e-12
        for v in ref.values():
            assert np.max(np.abs(np.imag(v))) < 1e-12


def test_point_bilinears_broadcast_over_arrays(rng):
    data = rng.normal(size=(8, 5, 3))
    p = FieldPoint.from_array(data)
    j, j5, s = vector_current(p), pseudovector_current(p), scalar_bilinear(p)
    assert j.shape == j5.shape == (4, 5, 3) and s.shape == (5, 3)
    single = FieldPoint.from_array(data[:, 2, 1])
    assert np.allclose(j[:, 2, 1], vector_current(single), atol=0)
    assert np.allclose(j5[:, 2, 1], pseudovector_current(single), atol=0)


@given(field_arrays)
def test_charge_density_positive(a):
    j0 = vector_current(FieldPoint.from_array(a))[0]
    assert j0 >= 0
    if np.max(np.abs(a)) > 1e-150:  # below this the squares underflow
        assert j0 > 0
    if not np.any(a):
        assert j0 == 0


@given(field_arrays)
def test_current_is_null_on_light_cone(a):
    """j and j5 are null and orthogonal, and j^2 = S^2 + P^2 (Fierz identities)."""
    p = FieldPoint.from_array(a)
    j, j5 = vector_current(p), pseudovector_current(p)
    mink = lambda u, v: u[0] * v[0] - u[1:] @ v[1:]
    s, ps = scalar_bilinear(p), pseudoscalar_bilinear(p)
    scale = max(1.0, j[0] ** 2)
    assert abs(mink(j, j) - (s ** 2 + ps ** 2)) < 1e-10 * scale
    assert abs(mink(j5, j5) + (s ** 2 + ps ** 2)) < 1e-10 * scale
    assert abs(mink(j, j5)) < 1e-10 * scale


def test_multivector_current_forms(rng):
    for _ in range(100):
        p = FieldPoint.random(rng)
        m = p.to_multivector()
        assert np.allclose(vector_components(vector_current_multivector(m)), vector_current(p), atol=1e-12)
        assert np.allclose(pseudovector_components(pseudovector_current_multivector(m)),
                           pseudovector_current(p), atol=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1), field_arrays)
def test_lorentz_covariance_of_currents(seed, a):
    rot = random_rotor(np.random.default_rng(seed))
    p = FieldPoint.from_array(a)
    moved = FieldPoint.from_multivector(rot.value * p.to_multivector(), atol=1e-9)
    scale = max(1.0, float(vector_current(moved)[0]))
    j_expected = vector_components(sandwich(rot, Multivector.vector(vector_current(p))))
    assert np.allclose(vector_current(moved), j_expected, atol=1e-10 * scale)
    assert abs(scalar_bilinear(moved) - scalar_bilinear(p)) < 1e-10 * scale
    assert abs(pseudoscalar_bilinear(moved) - pseudoscalar_bilinear(p)) < 1e-10 * scale


# jet bilinears -------------------------------------------------------------------

def test_jet_bilinears_vanish_without_derivatives(rng):
    jet = FieldJet.constant(FieldPoint.random(rng))
    assert lagrangian_density(jet) == 0
    for i in (1, 2, 3):
        assert momentum_density(jet, i) == 0
    zero = FieldJet.constant(point())
    for i, j in PAIRS:
        assert angular_momentum_density(zero, rng.normal(size=3), i, j) == 0


@pytest.mark.parametrize("polynomial_only", [True, False])
def test_jet_bilinears_match_oracle_with_exact_derivatives(rng, polynomial_only):
    for _ in range(100):
        fld = oracle.AnalyticField.random(rng, polynomial_only=polynomial_only)
        x4 = rng.normal(size=4)
        jet = fld.jet(x4)
        psi, dpsi = oracle.bispinor(jet.point), oracle.exact_bispinor_derivatives(jet)
        assert abs(lagrangian_density(jet) - oracle.lagrangian(psi, dpsi)) < 1e-12
        for i in (1, 2, 3):
            assert abs(momentum_density(jet, i) - oracle.momentum(psi, dpsi, i)) < 1e-12
        for i, j in PAIRS:
            ref = oracle.angular_momentum(psi, dpsi, x4[1:], i, j)
            assert abs(angular_momentum_density(jet, x4[1:], i, j) - ref) < 1e-12


def test_jet_bilinears_match_oracle_with_finite_differences(rng):
    for _ in range(50):
        fld = oracle.AnalyticField.random(rng)
        x4 = rng.normal(size=4)
        jet = fld.jet(x4)
        psi, dpsi = oracle.bispinor(jet.point), oracle.fd_bispinor_derivatives(fld, x4, 1e-4)
        assert abs(lagrangian_density(jet) - oracle.lagrangian(psi, dpsi)) < 1e-6
        for i in (1, 2, 3):
            assert abs(momentum_density(jet, i) - oracle.momentum(psi, dpsi, i)) < 1e-6
        for i, j in PAIRS:
            ref = oracle.angular_momentum(psi, dpsi, x4[1:], i, j)
            assert abs(angular_momentum_density(jet, x4[1:], i, j) - ref) < 1e-6


def plane_wave_jet(k, x4, amp=1.0):
    """E = (a cos k(z - t), 0, 0), B = (0, a cos k(z - t), 0) with its exact jet."""
    t, z = x4[0], x4[3]
    c, s = amp * math.cos(k * (z - t)), amp * math.sin(k * (z - t))
    p = point(E=(c, 0, 0), B=(0, c, 0))
    d = np.zeros((4, 8))
    d[0, 1] = d[0, 5] = k * s
    d[3, 1] = d[3, 5] = -k * s
    return FieldJet(p, d)


def test_plane_wave_jets_match_oracle(rng):
    for _ in range(50):
        x4 = rng.normal(size=4)
        jet = plane_wave_jet(rng.uniform(0.5, 3), x4, rng.uniform(0.5, 2))
        psi, dpsi = oracle.bispinor(jet.point), oracle.exact_bispinor_derivatives(jet)
        assert abs(lagrangian_density(jet) - oracle.lagrangian(psi, dpsi)) < 1e-12
        for i in (1, 2, 3):
            assert abs(momentum_density(jet, i) - oracle.momentum(psi, dpsi, i)) < 1e-12


def test_momentum_reduces_to_electromagnetic_form(rng):
    for _ in range(50):
        fld = oracle.AnalyticField.random(rng)
        jet = fld.jet(rng.normal(size=4))
        arr = jet.point.as_array()
        arr[0] = arr[7] = 0.0
        d = jet.d.copy()
        d[:, 0] = d[:, 7] = 0.0
        jet = FieldJet(FieldPoint.from_array(arr), d)
        Ev, Bv = jet.point.E, jet.point.B
        for i in (1, 2, 3):
            up = FieldPoint.from_array(-jet.d[i])  # d^i = -d_i
            expected = -up.B[0] * Bv[1] + up.B[1] * Bv[0] - up.E[0] * Ev[1] + up.E[1] * Ev[0]
            assert momentum_density(jet, i) == pytest.approx(expected, abs=1e-12)


def test_momentum_rejects_bad_index():
    with pytest.raises(ValueError):
        momentum_density(FieldJet.constant(point()), 0)


def test_spin_half_for_uniform_b3():
    jet = FieldJet.constant(point(B=(0, 0, 1)))
    assert angular_momentum_density(jet, np.zeros(3), 1, 2) == 0.5
    assert spin_density(jet.point, 1, 2) == 0.5
    assert spin_density(jet.point, 2, 1) == -0.5


def test_spin_term_closed_form_in_the_12_plane(rng):
    for _ in range(100):
        p = FieldPoint.random(rng)
        closed = 0.5 * (p.f ** 2 + p.g ** 2 - p.E @ p.E - p.B @ p.B + 2 * p.E[2] ** 2 + 2 * p.B[2] ** 2)
        assert spin_density(p, 1, 2) == pytest.approx(closed, abs=1e-12)


def test_angular_momentum_is_antisymmetric_and_rejects_diagonal(rng):
    fld = oracle.AnalyticField.random(rng)
    x4 = rng.normal(size=4)
    jet = fld.jet(x4)
    for i, j in PAIRS:
        assert angular_momentum_density(jet, x4[1:], i, j) == pytest.approx(
            -angular_momentum_density(jet, x4[1:], j, i), abs=1e-12)
    for i in (1, 2, 3):
        with pytest.raises(ValueError):
            angular_momentum_density(jet, x4[1:], i, i)


def test_orbital_part_at_origin_vanishes(rng):
    jet = oracle.AnalyticField.random(rng).jet(rng.normal(size=4))
    assert orbital_angular_momentum_density(jet, np.zeros(3), 1, 2) == 0
