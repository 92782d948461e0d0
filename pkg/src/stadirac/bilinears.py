"""Dirac bilinears written directly in the field components (f, E, B, g).

Every function here works on the component values alone; none of them touch
the matrix representation.  ``oracle.py`` holds the matrix-side counterparts.
The point-level functions broadcast: fields may be scalars or arrays with the
vector index first (E and B of shape (3, ...)).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .sta_core import E as BASIS, E0, I, ONE, Multivector, upper

COMPONENTS = ("f", "E1", "E2", "E3", "B1", "B2", "B3", "g")

# psi_M = f 1 + E_i e_i e_0 + B_i I e_i e_0 + g I, one basis element per component
FIELD_BASIS = (
    ONE,
    *(BASIS[i] * E0 for i in (1, 2, 3)),
    *(I * BASIS[i] * E0 for i in (1, 2, 3)),
    I,
)
_BASIS_BLADE = [(int(np.flatnonzero(b.coeffs)[0]), float(b.coeffs[np.flatnonzero(b.coeffs)[0]]))
                for b in FIELD_BASIS]


@dataclass(frozen=True)
class FieldPoint:
    f: float | np.ndarray
    E: np.ndarray
    B: np.ndarray
    g: float | np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "E", np.asarray(self.E, dtype=float))
        object.__setattr__(self, "B", np.asarray(self.B, dtype=float))
        if self.E.shape[:1] != (3,) or self.B.shape[:1] != (3,):
            raise ValueError("E and B need 3 components along the first axis")

    @classmethod
    def from_array(cls, a) -> FieldPoint:
        a = np.asarray(a, dtype=float)
        if a.shape[:1] != (8,):
            raise ValueError(f"expected 8 components along the first axis, got {a.shape}")
        return cls(a[0], a[1:4], a[4:7], a[7])

    @classmethod
    def random(cls, rng: np.random.Generator, scale: float = 1.0) -> FieldPoint:
        return cls.from_array(scale * rng.normal(size=8))

    def as_array(self) -> np.ndarray:
        return np.concatenate([np.asarray(self.f, float)[None], self.E, self.B,
                               np.asarray(self.g, float)[None]])

    def to_multivector(self) -> Multivector:
        a = self.as_array()
        if a.shape != (8,):
            raise ValueError("to_multivector needs a single point")
        c = np.zeros(16)
        for x, (mask, sign) in zip(a, _BASIS_BLADE):
            c[mask] += sign * x
        return Multivector(c)

    @classmethod
    def from_multivector(cls, m: Multivector, atol: float = 0.0) -> FieldPoint:
        """Read (f, E, B, g) off an even multivector; odd parts are rejected."""
        odd = np.max(np.abs(m.odd_part().coeffs))
        if odd > atol:
            raise ValueError(f"field multivector has an odd part of size {odd:.3e}")
        return cls.from_array([m.coeffs[mask] / sign for mask, sign in _BASIS_BLADE])


@dataclass(frozen=True)
class FieldJet:
    """Field values plus covariant first derivatives d[mu, c] = d(component c)/dx^mu.

    Coordinates are x^mu = (t, x, y, z).  ``fd_order`` is None for exact jets
    and the stencil order for finite-difference estimates.
    """

    point: FieldPoint
    d: np.ndarray
    fd_order: Optional[int] = None

    def __post_init__(self):
        d = np.asarray(self.d, dtype=float)
        if d.shape[:2] != (4, 8):
            raise ValueError(f"jet derivatives must have shape (4, 8, ...), got {d.shape}")
        object.__setattr__(self, "d", d)

    def partial(self, mu: int) -> FieldPoint:
        return FieldPoint.from_array(self.d[mu])

    @classmethod
    def constant(cls, point: FieldPoint) -> FieldJet:
        return cls(point, np.zeros((4, 8) + np.shape(point.f)))


@dataclass(frozen=True)
class BilinearSet:
    scalar: float
    pseudoscalar: float
    j: np.ndarray
    j5: np.ndarray


def _cross(a, b):
    return np.array([a[1] * b[2] - a[2] * b[1],
                     a[2] * b[0] - a[0] * b[2],
                     a[0] * b[1] - a[1] * b[0]])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def scalar_bilinear(p: FieldPoint):
    """psi-bar psi = f^2 - g^2 + B^2 - E^2."""
    return p.f ** 2 - p.g ** 2 + _dot(p.B, p.B) - _dot(p.E, p.E)


def pseudoscalar_bilinear(p: FieldPoint):
    """-i psi-bar gamma^5 psi = 2 (f g - E.B)."""
    return 2 * (p.f * p.g - _dot(p.E, p.B))


def vector_current(p: FieldPoint) -> np.ndarray:
    """j^mu: (f^2 + g^2 + E^2 + B^2, 2 (f E + g B + E x B))."""
    j0 = p.f ** 2 + p.g ** 2 + _dot(p.E, p.E) + _dot(p.B, p.B)
    ji = 2 * (p.f * p.E + p.g * p.B + _cross(p.E, p.B))
    return np.concatenate([np.asarray(j0)[None], ji])


def pseudovector_current(p: FieldPoint) -> np.ndarray:
    """j5^mu = psi-bar gamma^5 gamma^mu psi."""
    f, g = p.f, p.g
    E1, E2, E3 = p.E
    B1, B2, B3 = p.B
    return np.array([
        2 * (-f * E3 - g * B3 + E1 * B2 - E2 * B1),
        -2 * (g * E2 - f * B2 + B3 * B1 + E3 * E1),
        -2 * (-g * E1 + f * B1 + B3 * B2 + E3 * E2),
        -(f ** 2 + g ** 2 + B3 ** 2 - B1 ** 2 - B2 ** 2 + E3 ** 2 - E1 ** 2 - E2 ** 2),
    ])


def bilinears(p: FieldPoint) -> BilinearSet:
    return BilinearSet(scalar_bilinear(p), pseudoscalar_bilinear(p),
                       vector_current(p), pseudovector_current(p))


def lagrangian_density(jet: FieldJet):
    """Re(i psi-bar gamma^mu d_mu psi) term by term in the field components."""
    p = jet.point
    f, g, Ev, Bv = p.f, p.g, p.E, p.B
    dt = jet.partial(0)
    grad_f = jet.d[1:4, 0]
    grad_g = jet.d[1:4, 7]
    dE = jet.d[1:4, 1:4]  # dE[i, k] = d_i E_k
    dB = jet.d[1:4, 4:7]
    div_E = dE[0, 0] + dE[1, 1] + dE[2, 2]
    div_B = dB[0, 0] + dB[1, 1] + dB[2, 2]
    curl_E = np.array([dE[1, 2] - dE[2, 1], dE[2, 0] - dE[0, 2], dE[0, 1] - dE[1, 0]])
    curl_B = np.array([dB[1, 2] - dB[2, 1], dB[2, 0] - dB[0, 2], dB[0, 1] - dB[1, 0]])
    return (Bv[2] * dt.f - f * dt.B[2] - _cross(Bv, dt.B)[2]
            - Ev[2] * dt.g + g * dt.E[2] - _cross(Ev, dt.E)[2]
            - f * jet.d[3, 7] + g * jet.d[3, 0] + Bv[2] * div_E - Ev[2] * div_B
            - _cross(Bv, grad_g)[2] - f * curl_E[2]
            - _cross(Bv, curl_E)[2] + _cross(Ev, curl_B)[2]
            - _cross(Ev, grad_f)[2] - g * curl_B[2])


def _momentum_form(p: FieldPoint, dq: FieldPoint):
    """<gamma^0 D(psi_M) I gamma^3 ~psi_M> for a first-order operator D with D(psi_M) ~ dq."""
    return (dq.B[2] * p.f - dq.f * p.B[2] - dq.B[0] * p.B[1] + dq.B[1] * p.B[0]
            - dq.E[2] * p.g + dq.g * p.E[2] - dq.E[0] * p.E[1] + dq.E[1] * p.E[0])


def momentum_density(jet: FieldJet, i: int):
    """P^i = T^{0i} with the contravariant derivative d^i = -d_i."""
    if i not in (1, 2, 3):
        raise ValueError("momentum index must be 1, 2 or 3")
    return _momentum_form(jet.point, FieldPoint.from_array(-jet.d[i]))


def _levi_civita(i: int, j: int, k: int) -> int:
    return (i - j) * (j - k) * (k - i) // 2


def spin_density(p: FieldPoint, i: int, j: int):
    """Spin part of M^{0ij}: -1/2 eps_{ijk} j5^k.

    For (i, j) = (1, 2) this is 1/2 (f^2 + g^2 - E^2 - B^2 + 2 E_3^2 + 2 B_3^2).
    """
    if {i, j} - {1, 2, 3} or i == j:
        raise ValueError("spin plane needs two distinct indices in 1..3")
    k = 6 - i - j
    return -0.5 * _levi_civita(i, j, k) * pseudovector_current(p)[k]


def orbital_angular_momentum_density(jet: FieldJet, x, i: int, j: int):
    """Orbital part of M^{0ij} with l^{ij} = x^i d^j - x^j d^i acting on the jet."""
    if {i, j} - {1, 2, 3} or i == j:
        raise ValueError("angular momentum plane needs two distinct indices in 1..3")
    x = np.asarray(x, dtype=float)
    l_q = -x[i - 1] * jet.d[j] + x[j - 1] * jet.d[i]
    return _momentum_form(jet.point, FieldPoint.from_array(l_q))


def angular_momentum_density(jet: FieldJet, x, i: int, j: int):
    """M^{0ij} at spatial position x = (x^1, x^2, x^3), origin chosen by the caller."""
    return orbital_angular_momentum_density(jet, x, i, j) + spin_density(jet.point, i, j)


def bilinear_via_grade_projection(m: Multivector) -> float:
    """Real part of the (1,1) matrix entry: <M> for even M, <M e^0> for odd M."""
    if m.is_even():
        return m.scalar_value
    if m.is_odd():
        return (m * upper(0)).scalar_value
    raise ValueError("grade-projection bilinear needs a purely even or purely odd multivector")


# geometric-algebra forms of the currents, used for covariance checks

def vector_current_multivector(psi_m: Multivector) -> Multivector:
    """j = psi_M e_0 ~psi_M (a vector)."""
    return psi_m * E0 * ~psi_m


def pseudovector_current_multivector(psi_m: Multivector) -> Multivector:
    """j5 = psi_M I e^3 ~psi_M (a pseudovector)."""
    return psi_m * I * upper(3) * ~psi_m


def vector_components(v: Multivector) -> np.ndarray:
    """Contravariant components v^mu = <e^mu v>."""
    return np.array([(upper(mu) * v).scalar_value for mu in range(4)])


def pseudovector_components(v: Multivector) -> np.ndarray:
    """Components (I e^mu) . v of a pseudovector."""
    return np.array([(I * upper(mu) * v).scalar_value for mu in range(4)])
