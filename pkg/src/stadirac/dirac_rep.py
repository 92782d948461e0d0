"""Dirac-basis 4x4 matrix representation of Cl(1,3) and projection onto bispinors.

This module is the independent side of every cross-check: matrices are built
from the gamma matrices by plain matrix multiplication and never consult the
blade product table.  Covariant basis vectors map as e_0 -> gamma^0 and
e_i -> -gamma^i.
"""
from __future__ import annotations

import numpy as np

from .sta_core import Multivector, E, I

ComplexMat4 = np.ndarray  # shape (4, 4), complex128
Bispinor = np.ndarray  # shape (4,), complex128

REP_TOL = 1e-12

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)

_GAMMA = (
    np.block([[_I2, _Z2], [_Z2, -_I2]]),
    *(np.block([[_Z2, s], [-s, _Z2]]) for s in PAULI),
)
for _g in _GAMMA:
    _g.setflags(write=False)

IDENTITY4 = np.eye(4, dtype=complex)
GAMMA5 = 1j * _GAMMA[0] @ _GAMMA[1] @ _GAMMA[2] @ _GAMMA[3]


def gamma(mu: int) -> ComplexMat4:
    """Contravariant Dirac matrix gamma^mu."""
    if mu not in range(4):
        raise ValueError(f"gamma index must be 0..3, got {mu}")
    return _GAMMA[mu].copy()


def _blade_matrix(mask: int) -> ComplexMat4:
    m = IDENTITY4.copy()
    for mu in range(4):
        if mask >> mu & 1:
            m = m @ (_GAMMA[mu] if mu == 0 else -_GAMMA[mu])
    return m


BASIS_MATRICES = np.stack([_blade_matrix(m) for m in range(16)])
BASIS_MATRICES.setflags(write=False)


def represent(m: Multivector) -> ComplexMat4:
    return np.tensordot(m.coeffs, BASIS_MATRICES, axes=1)


# O(i): right-multiplying psi_M by -gamma^1 gamma^2 = -e_1 e_2 multiplies psi by i
IMAGINARY_UNIT = -(E[1] * E[2])
# the alternative candidates I g^1, I g^3, I g^1 g^0, I g^3 g^0 are not implemented


def projection_bispinor() -> Bispinor:
    return np.array([1, 0, 0, 0], dtype=complex)


def project(m: Multivector) -> Bispinor:
    """psi = represent(psi_M) w."""
    return represent(m) @ projection_bispinor()


def dirac_adjoint(psi: Bispinor) -> np.ndarray:
    """Row vector psi^dagger gamma^0."""
    return np.conj(psi) @ _GAMMA[0]


def matrix_bilinear(psi: Bispinor, op: ComplexMat4) -> complex:
    return complex(dirac_adjoint(psi) @ op @ psi)


def m11_expansion(m: Multivector) -> complex:
    """<M> + <M e^0> + i <M I e^3> + i <M I e^3 e^0>, the (1,1) entry of represent(M)."""
    e0, e3 = E[0], -E[3]
    return complex(m.scalar_value + (m * e0).scalar_value,
                   (m * I * e3).scalar_value + (m * I * e3 * e0).scalar_value)
