"""Matrix-side evaluation of bilinears and a family of analytic test fields.

Field matrices are assembled directly from gamma matrices
(psi_M = f 1 - E_i g^i g^0 - B_i I g^i g^0 + g I, I = -g^0 g^1 g^2 g^3)
so nothing here depends on the blade product table or on bilinears.py.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bilinears import FieldJet, FieldPoint
from .dirac_rep import GAMMA5, IDENTITY4, gamma, matrix_bilinear, projection_bispinor

_G = [gamma(mu) for mu in range(4)]
_PSEUDO = -_G[0] @ _G[1] @ _G[2] @ _G[3]
_FIELD_MATRICES = np.stack([
    IDENTITY4,
    *(-_G[i] @ _G[0] for i in (1, 2, 3)),
    *(-_PSEUDO @ _G[i] @ _G[0] for i in (1, 2, 3)),
    _PSEUDO,
])


def field_matrix(p: FieldPoint | np.ndarray) -> np.ndarray:
    a = p.as_array() if isinstance(p, FieldPoint) else np.asarray(p, float)
    return np.tensordot(a, _FIELD_MATRICES, axes=1)


def bispinor(p: FieldPoint | np.ndarray) -> np.ndarray:
    return field_matrix(p) @ projection_bispinor()


def point_bilinears(psi: np.ndarray) -> dict[str, complex | np.ndarray]:
    """Raw (complex) matrix bilinears for a bispinor."""
    return {
        "scalar": matrix_bilinear(psi, IDENTITY4),
        "pseudoscalar": -1j * matrix_bilinear(psi, GAMMA5),
        "j": np.array([matrix_bilinear(psi, _G[mu]) for mu in range(4)]),
        "j5": np.array([matrix_bilinear(psi, GAMMA5 @ _G[mu]) for mu in range(4)]),
    }


def lagrangian(psi: np.ndarray, dpsi: np.ndarray) -> float:
    """Re(i psi-bar gamma^mu d_mu psi); dpsi[mu] are covariant derivative bispinors."""
    return sum(1j * matrix_bilinear_vec(psi, _G[mu], dpsi[mu]) for mu in range(4)).real


def momentum(psi: np.ndarray, dpsi: np.ndarray, i: int) -> float:
    """Re(-i psi-bar gamma^0 d^i psi) with d^i = -d_i."""
    return (-1j * matrix_bilinear_vec(psi, _G[0], -dpsi[i])).real


def angular_momentum(psi: np.ndarray, dpsi: np.ndarray, x, i: int, j: int) -> float:
    """Re(-i psi-bar g^0 l^{ij} psi + i/4 psi-bar g^0 [g^i, g^j] psi)."""
    l_psi = x[i - 1] * (-dpsi[j]) - x[j - 1] * (-dpsi[i])
    comm = _G[i] @ _G[j] - _G[j] @ _G[i]
    return (-1j * matrix_bilinear_vec(psi, _G[0], l_psi)
            + 0.25j * matrix_bilinear(psi, _G[0] @ comm)).real


def matrix_bilinear_vec(left: np.ndarray, op: np.ndarray, right: np.ndarray) -> complex:
    """psi-bar(left) op right."""
    return complex(np.conj(left) @ _G[0] @ op @ right)


def exact_bispinor_derivatives(jet: FieldJet) -> np.ndarray:
    return np.stack([bispinor(jet.d[mu]) for mu in range(4)])


def fd_bispinor_derivatives(field: Callable[[np.ndarray], FieldPoint], x: np.ndarray,
                            h: float = 1e-4) -> np.ndarray:
    """Central differences of psi(x) along each coordinate x^mu, error O(h^2)."""
    x = np.asarray(x, dtype=float)
    out = []
    for mu in range(4):
        step = np.zeros(4)
        step[mu] = h
        out.append((bispinor(field(x + step)) - bispinor(field(x - step))) / (2 * h))
    return np.stack(out)


@dataclass(frozen=True)
class AnalyticField:
    """Each component = quadratic polynomial + a few sine modes (wavevector entries in [-1, 1]).

    Value and exact first derivatives are both available in closed form.
    """

    const: np.ndarray  # (8,)
    linear: np.ndarray  # (8, 4)
    quad: np.ndarray  # (8, 4, 4), symmetric
    amp: np.ndarray  # (8, M)
    wavevec: np.ndarray  # (8, M, 4)
    phase: np.ndarray  # (8, M)

    @classmethod
    def random(cls, rng: np.random.Generator, modes: int = 2, polynomial_only: bool = False) -> AnalyticField:
        q = rng.normal(size=(8, 4, 4)) * 0.5
        q = 0.5 * (q + q.transpose(0, 2, 1))
        amp = np.zeros((8, modes)) if polynomial_only else rng.normal(size=(8, modes))
        return cls(rng.normal(size=8), rng.normal(size=(8, 4)), q, amp,
                   rng.uniform(-1, 1, size=(8, modes, 4)), rng.uniform(0, 2 * np.pi, size=(8, modes)))

    def values(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        arg = self.wavevec @ x + self.phase
        return (self.const + self.linear @ x + 0.5 * np.einsum("cij,i,j->c", self.quad, x, x)
                + np.sum(self.amp * np.sin(arg), axis=1))

    def derivatives(self, x) -> np.ndarray:
        """(4, 8): d(component)/dx^mu."""
        x = np.asarray(x, dtype=float)
        arg = self.wavevec @ x + self.phase
        d = (self.linear + np.einsum("cij,j->ci", self.quad, x)
             + np.einsum("cm,cmi->ci", self.amp * np.cos(arg), self.wavevec))
        return d.T

    def __call__(self, x) -> FieldPoint:
        return FieldPoint.from_array(self.values(x))

    def jet(self, x) -> FieldJet:
        return FieldJet(self(x), self.derivatives(x))
