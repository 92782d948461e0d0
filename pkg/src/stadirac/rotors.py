"""Rotation and boost rotors, and their one- and two-sided actions."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .sta_core import E, E0, I, ONE, Multivector, reverse

UNIT_TOL = 1e-9


def normalization_error(value: Multivector) -> float:
    """max |reverse(R) R - 1| over all coefficients."""
    return float(np.max(np.abs((reverse(value) * value - ONE).coeffs)))


@dataclass(frozen=True, eq=False)
class Rotor:
    """Even unit multivector; ``kind``/``params`` are diagnostics only."""

    value: Multivector
    kind: str = "general"
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.value.is_even():
            raise ValueError("rotor must be even (grades 0, 2, 4)")
        err = normalization_error(self.value)
        if err > UNIT_TOL:
            raise ValueError(f"rotor is not unit-normalized: |~R R - 1| = {err:.3e}")

    @property
    def reverse(self) -> Rotor:
        return Rotor(reverse(self.value), kind=self.kind, params={"reversed": self.params})

    def __mul__(self, other: Rotor) -> Rotor:
        return compose(self, other)


IDENTITY = Rotor(ONE, kind="identity")


def rotation_rotor(half_angle: float, plane: Multivector) -> Rotor:
    """cos(h) + sin(h) * plane for a unit spacelike bivector ``plane``.

    With plane = e1^e2 and h = phi/2 the sandwich turns e1 towards e2 by phi.
    """
    if plane.grades() - {2} or not plane.grades():
        raise ValueError("rotation plane must be a nonzero bivector")
    sq = plane * plane
    if not sq.allclose(-1.0, atol=1e-12):
        raise ValueError("rotation plane must be a unit spacelike bivector (square -1)")
    value = math.cos(half_angle) * ONE + math.sin(half_angle) * plane
    return Rotor(value, kind="rotation", params={"half_angle": half_angle, "plane": plane})


def rotation_about(half_angle: float, normal: Sequence[float]) -> Rotor:
    """Rotation about the spatial unit normal n, written in dual form.

    The plane is -n_i I e_i e_0, so normal (0, 0, 1) gives the e1^e2 plane.
    """
    n = _unit3(normal)
    plane = -sum((n[i] * (I * E[i + 1] * E0) for i in range(3)), Multivector())
    r = rotation_rotor(half_angle, plane)
    return Rotor(r.value, kind="rotation", params={"half_angle": half_angle, "normal": tuple(n)})


def boost_rotor(half_rapidity: float, direction: int | Sequence[float]) -> Rotor:
    """cosh(h) + sinh(h) n_k e_k e_0 for spatial unit direction n (or axis index 1..3)."""
    if isinstance(direction, (int, np.integer)):
        if direction not in (1, 2, 3):
            raise ValueError("boost axis index must be 1, 2 or 3")
        n = np.zeros(3)
        n[direction - 1] = 1.0
    else:
        n = _unit3(direction)
    gen = sum((n[k] * (E[k + 1] * E0) for k in range(3)), Multivector())
    value = math.cosh(half_rapidity) * ONE + math.sinh(half_rapidity) * gen
    return Rotor(value, kind="boost", params={"half_rapidity": half_rapidity, "direction": tuple(n)})


def sandwich(r: Rotor | Multivector, m: Multivector) -> Multivector:
    """Two-sided action R M ~R."""
    if not isinstance(r, Rotor):
        r = Rotor(r)
    return r.value * m * reverse(r.value)


def one_sided(r: Rotor | Multivector, m: Multivector) -> Multivector:
    value = r.value if isinstance(r, Rotor) else r
    return value * m


def compose(r1: Rotor, r2: Rotor) -> Rotor:
    """R1 R2 (apply R2 first).  Checked against the unit tolerance, never renormalized."""
    return Rotor(r1.value * r2.value, kind="composite", params={"factors": (r1.kind, r2.kind)})


def lorentz_rotor(half_angle: float, normal: Sequence[float], half_rapidity: float,
                  boost_direction: Sequence[float]) -> Rotor:
    """exp(-(phi/2) n_i I e_i e_0) exp((alpha/2) n'_k e_k e_0): rotation times boost."""
    return compose(rotation_about(half_angle, normal), boost_rotor(half_rapidity, boost_direction))


def random_rotor(rng: np.random.Generator, max_rapidity: float = 2.0) -> Rotor:
    """Random rotation composed with a random boost of rapidity in [-max, max]."""
    phi = rng.uniform(-2 * math.pi, 2 * math.pi)
    alpha = rng.uniform(-max_rapidity, max_rapidity)
    n, n2 = rng.normal(size=(2, 3))
    return lorentz_rotor(phi / 2, n / np.linalg.norm(n), alpha / 2, n2 / np.linalg.norm(n2))


def _unit3(v: Sequence[float]) -> np.ndarray:
    n = np.asarray(v, dtype=float)
    if n.shape != (3,):
        raise ValueError("expected 3 spatial components")
    norm = np.linalg.norm(n)
    if norm == 0:
        raise ValueError("direction must be nonzero")
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"direction must be a unit vector, |n| = {norm!r}")
    return n
