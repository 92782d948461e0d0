"""Periodic-grid evolution of (f, E, B, g) under the generalized Maxwell equations.

    d_t f = -div E
    d_t E = -grad f + curl B
    d_t B = -grad g - curl E
    d_t g = -div B

Spatial derivatives are central differences (order 6 by default, 2/4/8
available), time stepping is classic RK4, c = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bilinears import (COMPONENTS, FieldJet, FieldPoint, pseudoscalar_bilinear,
                        pseudovector_current, scalar_bilinear, vector_current)

CFL_LIMIT = 0.5

_FIRST = {
    2: (1 / 2,),
    4: (2 / 3, -1 / 12),
    6: (3 / 4, -3 / 20, 1 / 60),
    8: (4 / 5, -1 / 5, 4 / 105, -1 / 280),
}
_SECOND = {
    2: (-2.0, 1.0),
    4: (-5 / 2, 4 / 3, -1 / 12),
    6: (-49 / 18, 3 / 2, -3 / 20, 1 / 90),
    8: (-205 / 72, 8 / 5, -1 / 5, 8 / 315, -1 / 560),
}


class NonFiniteStateError(FloatingPointError):
    pass


class CFLViolation(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    dims: tuple[int, int, int]
    dx: float
    order: int = 6

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        if len(dims) != 3 or min(dims) < 1:
            raise ValueError(f"dims must be three positive integers, got {self.dims}")
        if not self.dx > 0:
            raise ValueError("dx must be positive")
        if self.order not in _FIRST:
            raise ValueError(f"stencil order must be one of {sorted(_FIRST)}")
        half = self.order // 2
        for n in dims:
            if n > 1 and n < 2 * half + 1:
                raise ValueError(f"axis of {n} cells is too short for an order-{self.order} stencil")
        object.__setattr__(self, "dims", dims)

    @property
    def active_axes(self) -> tuple[int, ...]:
        return tuple(a for a, n in enumerate(self.dims) if n > 1)

    @property
    def lengths(self) -> tuple[float, float, float]:
        return tuple(n * self.dx for n in self.dims)

    @property
    def cell_volume(self) -> float:
        return self.dx ** len(self.active_axes)

    def coordinates(self) -> list[np.ndarray]:
        """Cell-centre-free node coordinates x_a = i * dx, broadcastable to the grid."""
        out = []
        for a, n in enumerate(self.dims):
            shape = [1, 1, 1]
            shape[a] = n
            out.append((np.arange(n) * self.dx).reshape(shape))
        return out


@dataclass(frozen=True, eq=False)
class FieldState:
    grid: GridSpec
    data: np.ndarray  # (8, Nx, Ny, Nz) in COMPONENTS order
    time: float = 0.0

    def __post_init__(self):
        data = np.asarray(self.data, dtype=float)
        if data.shape != (8, *self.grid.dims):
            raise ValueError(f"state data shape {data.shape} does not match grid {self.grid.dims}")
        if not np.all(np.isfinite(data)):
            bad = [COMPONENTS[c] for c in range(8) if not np.all(np.isfinite(data[c]))]
            raise NonFiniteStateError(f"non-finite values at t={self.time} in {bad}")
        object.__setattr__(self, "data", data)

    @property
    def f(self):
        return self.data[0]

    @property
    def E(self):
        return self.data[1:4]

    @property
    def B(self):
        return self.data[4:7]

    @property
    def g(self):
        return self.data[7]

    def point(self) -> FieldPoint:
        return FieldPoint.from_array(self.data)


@dataclass(frozen=True)
class ConservedTotals:
    Q: np.ndarray
    Q5: np.ndarray
    S: float
    P: float

    def as_row(self) -> list[float]:
        return [*map(float, self.Q), *map(float, self.Q5), float(self.S), float(self.P)]


def ddx(a: np.ndarray, axis: int, grid: GridSpec) -> np.ndarray:
    """Periodic central first derivative along spatial ``axis`` (0..2) of a grid array."""
    if grid.dims[axis] == 1:
        return np.zeros_like(a)
    ax = a.ndim - 3 + axis
    out = np.zeros_like(a)
    for m, c in enumerate(_FIRST[grid.order], start=1):
        out += c * (np.roll(a, -m, axis=ax) - np.roll(a, m, axis=ax))
    return out / grid.dx


def laplacian(a: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Compact periodic central Laplacian of the grid's order."""
    out = np.zeros_like(a)
    coeffs = _SECOND[grid.order]
    for axis in grid.active_axes:
        ax = a.ndim - 3 + axis
        # sum_m c_m (a[+m] + a[-m] - 2a) equals the stencil and vanishes exactly on constants
        for m, c in enumerate(coeffs[1:], start=1):
            out += c * (np.roll(a, -m, axis=ax) + np.roll(a, m, axis=ax) - 2 * a)
    return out / grid.dx ** 2


def _rates(data: np.ndarray, grid: GridSpec) -> np.ndarray:
    d = [[ddx(data[c], a, grid) for a in range(3)] for c in range(8)]
    # d[c][a] = d_a of component c
    f, E, B, g = 0, (1, 2, 3), (4, 5, 6), 7

    def div(v):
        return d[v[0]][0] + d[v[1]][1] + d[v[2]][2]

    def curl(v):
        return (d[v[2]][1] - d[v[1]][2], d[v[0]][2] - d[v[2]][0], d[v[1]][0] - d[v[0]][1])

    cE, cB = curl(E), curl(B)
    out = np.empty_like(data)
    out[0] = -div(E)
    for i in range(3):
        out[1 + i] = -d[f][i] + cB[i]
        out[4 + i] = -d[g][i] - cE[i]
    out[7] = -div(B)
    return out


def time_derivative(s: FieldState) -> np.ndarray:
    """d_t of all eight components, shape (8, Nx, Ny, Nz)."""
    return _rates(s.data, s.grid)


def step(s: FieldState, dt: float) -> FieldState:
    """One classic RK4 step; negative dt integrates backwards."""
    if abs(dt) > CFL_LIMIT * s.grid.dx * (1 + 1e-12):
        raise CFLViolation(f"|dt| = {abs(dt)} exceeds {CFL_LIMIT} * dx = {CFL_LIMIT * s.grid.dx}")
    y = s.data
    k1 = _rates(y, s.grid)
    k2 = _rates(y + 0.5 * dt * k1, s.grid)
    k3 = _rates(y + 0.5 * dt * k2, s.grid)
    k4 = _rates(y + dt * k3, s.grid)
    return FieldState(s.grid, y + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4), s.time + dt)


def box_residual(history: Sequence[FieldState], dt: float, corrected: bool = True) -> np.ndarray:
    """Pointwise discrete (d_tt - lap) residual at the middle of three states, shape (8, ...).

    The time second difference carries an O(dt^2) error (dt^2/12) d_t^4; with
    ``corrected`` it is cancelled using d_t^4 = lap^2, which holds on solutions,
    so the residual is O(dt^4 + dx^p) instead of O(dt^2 + dx^p).
    """
    if len(history) != 3:
        raise ValueError("need exactly three consecutive states")
    s0, s1, s2 = history
    if not s0.grid == s1.grid == s2.grid:
        raise ValueError("states live on different grids")
    for a, b in ((s0, s1), (s1, s2)):
        if not math.isclose(b.time - a.time, dt, rel_tol=1e-9, abs_tol=1e-12):
            raise ValueError(f"states are not spaced by dt={dt} (got {b.time - a.time})")
    lap = laplacian(s1.data, s1.grid)
    res = (s2.data - 2 * s1.data + s0.data) / dt ** 2 - lap
    if corrected:
        res -= dt ** 2 / 12 * laplacian(lap, s1.grid)
    return res


def second_order_residual(history: Sequence[FieldState], dt: float, corrected: bool = True) -> np.ndarray:
    """Max-norm of the discrete wave-operator residual for each of the 8 components."""
    res = box_residual(history, dt, corrected)
    return np.abs(res).reshape(8, -1).max(axis=1)


def pairwise_sum(a: np.ndarray) -> float:
    """Fixed-order pairwise tree sum of all entries (independent of any threading)."""
    v = np.ravel(a).astype(float)
    if v.size == 0:
        return 0.0
    n = 1 << (v.size - 1).bit_length()
    v = np.concatenate([v, np.zeros(n - v.size)])
    while v.size > 1:
        v = v[0::2] + v[1::2]
    return float(v[0])


def conserved_totals(s: FieldState) -> ConservedTotals:
    p = s.point()
    vol = s.grid.cell_volume
    j = vector_current(p)
    j5 = pseudovector_current(p)
    return ConservedTotals(
        Q=np.array([pairwise_sum(j[mu]) * vol for mu in range(4)]),
        Q5=np.array([pairwise_sum(j5[mu]) * vol for mu in range(4)]),
        S=pairwise_sum(scalar_bilinear(p)) * vol,
        P=pairwise_sum(pseudoscalar_bilinear(p)) * vol,
    )


def jet_at(s: FieldState, index: tuple[int, int, int]) -> FieldJet:
    """FieldJet at one grid node: spatial derivatives by the grid stencil, d_t from the equations."""
    spatial = np.stack([ddx(s.data, a, s.grid) for a in range(3)])
    rates = time_derivative(s)
    d = np.concatenate([rates[None], spatial])[(slice(None), slice(None), *index)]
    return FieldJet(FieldPoint.from_array(s.data[(slice(None), *index)]), d, fd_order=s.grid.order)


# scenarios -----------------------------------------------------------------

SCENARIOS = ("zero", "plane_wave", "longitudinal", "gaussian", "noise")
ANALYTIC_SCENARIOS = ("zero", "plane_wave", "longitudinal")


def _wave_axis(grid: GridSpec, params: dict) -> int:
    axis = params.get("axis")
    if axis is None:
        if not grid.active_axes:
            raise ValueError("wave scenarios need at least one axis with more than one cell")
        axis = grid.active_axes[0]
    if axis not in (0, 1, 2) or grid.dims[axis] == 1:
        raise ValueError(f"wave axis {axis} is not an active grid axis")
    return axis


def _wavenumber(grid: GridSpec, axis: int, params: dict) -> float:
    length = grid.lengths[axis]
    if "wavenumber" in params:
        k = float(params["wavenumber"])
        m = k * length / (2 * math.pi)
        if abs(m - round(m)) > 1e-9 * max(1.0, abs(m)):
            raise ValueError(f"wavenumber {k} is not commensurate with the periodic box (L={length})")
        return k
    m = params.get("mode", 1)
    if int(m) != m:
        raise ValueError("mode must be an integer")
    return 2 * math.pi * int(m) / length


def init_state(grid: GridSpec, scenario: str, time: float = 0.0, **params) -> FieldState:
    """Build a named initial condition.

    For the analytic scenarios (zero, plane_wave, longitudinal) ``time`` gives
    the exact solution at that time.

    plane_wave: axis, mode | wavenumber, amplitude, direction (+1/-1, or 0 for a
        standing wave).  Transverse, E along axis+1, B along axis+2 (cyclic), f = g = 0.
    longitudinal: same parameters plus pair ("fE" or "gB"): f = E_axis (or g = B_axis).
    gaussian: component, width, center (3 coords), amplitude; periodic images summed.
    noise: seed, kmax, amplitude; random band-limited Fourier modes in every component.
    """
    data = np.zeros((8, *grid.dims))
    x = grid.coordinates()
    if scenario == "zero":
        _reject_unknown(params, set())
    elif scenario in ("plane_wave", "longitudinal"):
        _reject_unknown(params, {"axis", "mode", "wavenumber", "amplitude", "direction", "pair"}
                        if scenario == "longitudinal" else
                        {"axis", "mode", "wavenumber", "amplitude", "direction"})
        axis = _wave_axis(grid, params)
        k = _wavenumber(grid, axis, params)
        amp = float(params.get("amplitude", 1.0))
        direction = params.get("direction", 1)
        if direction not in (1, -1, 0):
            raise ValueError("direction must be +1, -1 or 0 (standing wave)")
        pair = params.get("pair", "fE")
        if scenario == "plane_wave":
            first, second = 1 + (axis + 1) % 3, 4 + (axis + 2) % 3
        elif pair in ("fE", "gB"):
            first, second = (0, 1 + axis) if pair == "fE" else (7, 4 + axis)
        else:
            raise ValueError("pair must be 'fE' or 'gB'")
        # a standing wave is the average of the two travelling ones
        signs = (1, -1) if direction == 0 else (direction,)
        for sgn in signs:
            wave = amp / len(signs) * np.cos(k * (x[axis] - sgn * time)) * np.ones(grid.dims)
            data[first] += wave
            data[second] += sgn * wave
    elif scenario == "gaussian":
        _reject_unknown(params, {"component", "width", "center", "amplitude"})
        comp = params.get("component", "f")
        if comp not in COMPONENTS:
            raise ValueError(f"unknown component {comp!r}")
        lengths = grid.lengths
        width = float(params.get("width", min(lengths[a] for a in grid.active_axes) / 8
                                 if grid.active_axes else 1.0))
        center = params.get("center", [lengths[a] / 2 for a in range(3)])
        profile = np.ones(grid.dims)
        for a in grid.active_axes:
            # summing nearby periodic images keeps the profile smooth across the seam
            d = x[a] - center[a]
            profile = profile * sum(np.exp(-0.5 * ((d + n * lengths[a]) / width) ** 2)
                                    for n in range(-2, 3))
        data[COMPONENTS.index(comp)] = float(params.get("amplitude", 1.0)) * profile
    elif scenario == "noise":
        _reject_unknown(params, {"seed", "kmax", "amplitude"})
        rng = np.random.default_rng(params.get("seed", 0))
        kmax = int(params.get("kmax", 2))
        amp = float(params.get("amplitude", 1.0))
        ranges = [range(-kmax, kmax + 1) if n > 1 else range(1) for n in grid.dims]
        modes = [(a, b, c) for a in ranges[0] for b in ranges[1] for c in ranges[2] if (a, b, c) != (0, 0, 0)]
        lengths = grid.lengths
        phase_arg = [2 * math.pi * x[a] / lengths[a] for a in range(3)]
        for comp in range(8):
            coef = rng.normal(size=len(modes)) / math.sqrt(max(len(modes), 1))
            phi = rng.uniform(0, 2 * math.pi, size=len(modes))
            acc = np.zeros(grid.dims)
            for (ma, mb, mc), c, ph in zip(modes, coef, phi):
                acc = acc + c * np.cos(ma * phase_arg[0] + mb * phase_arg[1] + mc * phase_arg[2] + ph)
            data[comp] = amp * acc
    else:
        raise ValueError(f"unknown scenario {scenario!r}; choose from {SCENARIOS}")
    return FieldState(grid, data, time)


def _reject_unknown(params: dict, allowed: set[str]) -> None:
    extra = set(params) - allowed
    if extra:
        raise ValueError(f"unknown scenario parameters: {sorted(extra)}")
