"""Command-line harness: algebra/bilinear/Lorentz check suites and field simulations.

    stadirac <mode> [--config PATH] [--out PATH] [--seed N]

mode is one of check-algebra, check-bilinears, check-lorentz, simulate.  Exit
status is 0 iff every check passes, 1 on a failed check, 2 on a bad config or
rejected run parameters, 3 when a simulation hits non-finite values.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import logging
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional

import numpy as np

from . import oracle
from .bilinears import (FieldPoint, angular_momentum_density, bilinear_via_grade_projection,
                        lagrangian_density, momentum_density, pseudoscalar_bilinear, pseudovector_current,
                        pseudovector_components, scalar_bilinear, vector_components, vector_current,
                        vector_current_multivector, pseudovector_current_multivector)
from .dirac_rep import BASIS_MATRICES, m11_expansion, project, projection_bispinor, represent
from .maxwell_solver import (ANALYTIC_SCENARIOS, CFLViolation, GridSpec, NonFiniteStateError,
                             conserved_totals, init_state, second_order_residual, step)
from .rotors import IDENTITY, one_sided, random_rotor, rotation_rotor, sandwich
from .sta_core import (BLADES, E, E0, I, Multivector, blade_mul, blade_name, dual, grade_of,
                       hermitian_adjoint, outer_product, reverse)

log = logging.getLogger("stadirac")

MODES = ("check-algebra", "check-bilinears", "check-lorentz", "simulate")

DEFAULT_TOLERANCES = {
    "point": 1e-12,
    "imag": 1e-12,
    "jet_analytic": 1e-12,
    "jet_fd": 1e-6,
    "lorentz": 1e-10,
    "drift": 1e-6,
    "field_error": 1e-5,
}

CSV_COLUMNS = ["step", "time", "Q0", "Q1", "Q2", "Q3", "Q5_0", "Q5_1", "Q5_2", "Q5_3", "S", "P",
               "box_residual_max"]


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    mode: str = "check-algebra"
    grid: dict[str, Any] = field(default_factory=lambda: {"dims": [64, 1, 1], "dx": 1 / 64, "order": 6})
    scenario: dict[str, Any] = field(default_factory=lambda: {"name": "plane_wave", "params": {}})
    dt: Optional[float] = None
    cfl: float = 0.25
    steps: int = 1000
    output: str = "simulation.csv"
    seed: int = 1
    samples: int = 1000
    jet_samples: int = 200
    rotors: int = 100
    fd_step: float = 1e-4
    tolerances: dict[str, float] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> RunConfig:
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
        known = {f.name for f in dataclasses.fields(cls)}
        extra = set(raw) - known
        if extra:
            raise ConfigError(f"unknown config keys: {sorted(extra)}")
        cfg = cls(**{**dataclasses.asdict(cls()), **raw})
        cfg.validate()
        return cfg

    @classmethod
    def load(cls, path: str | Path) -> RunConfig:
        try:
            raw = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
        return cls.from_dict(raw)

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        grid_extra = set(self.grid) - {"dims", "dx", "order"}
        if grid_extra:
            raise ConfigError(f"unknown grid keys: {sorted(grid_extra)}")
        scen_extra = set(self.scenario) - {"name", "params"}
        if scen_extra:
            raise ConfigError(f"unknown scenario keys: {sorted(scen_extra)}")
        tol_extra = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if tol_extra:
            raise ConfigError(f"unknown tolerance keys: {sorted(tol_extra)}")
        for name in ("steps", "samples", "jet_samples", "rotors"):
            if int(getattr(self, name)) < 0:
                raise ConfigError(f"{name} must be non-negative")

    def tol(self, name: str) -> float:
        return float(self.tolerances.get(name, DEFAULT_TOLERANCES[name]))

    def grid_spec(self) -> GridSpec:
        g = {"dims": [64, 1, 1], "dx": 1 / 64, "order": 6, **self.grid}
        try:
            return GridSpec(tuple(g["dims"]), float(g["dx"]), int(g["order"]))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc


@dataclass
class Check:
    name: str
    passed: bool
    value: float = 0.0
    threshold: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.value:.3e} (threshold {self.threshold:.1e})"


@dataclass
class Report:
    mode: str
    checks: list[Check] = field(default_factory=list)
    max_errors: dict[str, float] = field(default_factory=dict)
    drift: dict[str, float] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)
    tolerance_overrides: dict[str, float] = field(default_factory=dict)
    runtime_s: float = 0.0
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def bound(self, name: str, value: float, threshold: float, key: Optional[str] = None) -> Check:
        """Record ``value <= threshold`` as a named check and its max error."""
        value = float(value)
        c = Check(name, bool(value <= threshold), value, threshold)
        self.checks.append(c)
        self.max_errors[key or name] = value
        return c

    def exact(self, name: str, ok: bool) -> Check:
        c = Check(name, bool(ok))
        self.checks.append(c)
        return c

    def summary(self) -> dict[str, Any]:
        out = {
            "mode": self.mode,
            "passed": self.passed,
            "max_errors": self.max_errors,
            "drift": self.drift,
            "runtime_s": self.runtime_s,
            "counts": self.counts,
            "tolerance_overrides": self.tolerance_overrides,
            "checks": [{"name": c.name, "passed": c.passed} for c in self.checks],
        }
        if self.error:
            out["error"] = self.error
        return out


# check-algebra -------------------------------------------------------------

# basis roots of +1 and -1, written as wedge products of vectors
_ROOTS_PLUS = {"1": [], "e0": [0], "e1^e0": [1, 0], "e2^e0": [2, 0], "e3^e0": [3, 0],
               "e1^e2^e3": [1, 2, 3]}
_ROOTS_MINUS = {"e1": [1], "e2": [2], "e3": [3], "e1^e2": [1, 2], "e2^e3": [2, 3], "e3^e1": [3, 1],
                "e0^e1^e2": [0, 1, 2], "e0^e2^e3": [0, 2, 3], "e0^e3^e1": [0, 3, 1], "I": [0, 1, 2, 3]}


def _wedge(indices: list[int]) -> Multivector:
    out = Multivector.scalar(1.0)
    for mu in indices:
        out = outer_product(out, E[mu])
    return out


def run_check_algebra(cfg: RunConfig, mul: Callable[[int, int], tuple[int, int]] = blade_mul) -> Report:
    """Product table against the Dirac matrices, the root lists, involution and duality tables.

    ``mul`` replaces the blade product under test (used for fault injection).
    """
    rep = Report("check-algebra")
    rng = np.random.default_rng(cfg.seed)

    entries = 0
    for a in range(16):
        for b in range(16):
            sign, c = mul(a, b)
            entries += 1
            ok = np.array_equal(BASIS_MATRICES[a] @ BASIS_MATRICES[b], sign * BASIS_MATRICES[c])
            if not ok:
                rep.exact(f"product_table[{blade_name(a)}*{blade_name(b)}]", False)
    rep.counts["product_table_entries"] = entries
    rep.exact("product_table", not any(n.startswith("product_table[") for n in rep.failures))

    for label, idx in _ROOTS_PLUS.items():
        x = _wedge(idx)
        rep.exact(f"root_of_plus_one[{label}]", x * x == 1)
    for label, idx in _ROOTS_MINUS.items():
        x = _wedge(idx)
        rep.exact(f"root_of_minus_one[{label}]", x * x == -1)
    rep.counts["roots_plus"] = len(_ROOTS_PLUS)
    rep.counts["roots_minus"] = len(_ROOTS_MINUS)

    for m in BLADES:
        b = Multivector.blade(m)
        r = grade_of(m)
        expect = 1 if r in (0, 1, 4) else -1
        rep.exact(f"reverse_parity[{blade_name(m)}]", reverse(b) == expect * b)
        rep.exact(f"adjoint_matches_conjugate_transpose[{blade_name(m)}]",
                  np.array_equal(represent(hermitian_adjoint(b)), BASIS_MATRICES[m].conj().T))
        commutes = I * b == b * I
        rep.exact(f"pseudoscalar_commutation[{blade_name(m)}]", commutes == (r % 2 == 0))

    self_conj = {"1": Multivector.scalar(1.0), "e0": E0, "Ie0": I * E0,
                 **{f"e{i}e0": E[i] * E0 for i in (1, 2, 3)}}
    sign_flip = {"I": I, **{f"e{i}": E[i] for i in (1, 2, 3)},
                 **{f"Ie{i}e0": I * E[i] * E0 for i in (1, 2, 3)}, **{f"Ie{i}": I * E[i] for i in (1, 2, 3)}}
    for label, x in self_conj.items():
        rep.exact(f"adjoint_fixes[{label}]", hermitian_adjoint(x) == x and x * x == 1)
    for label, x in sign_flip.items():
        rep.exact(f"adjoint_negates[{label}]", hermitian_adjoint(x) == -x and x * x == -1)

    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        rep.exact(f"duality[e{i}^e{j}=-I e{k} e0]", outer_product(E[i], E[j]) == -(dual(E[k] * E0)))
        rep.exact(f"duality[e0^e{i}^e{j}=-I e{k}]", _wedge([0, i, j]) == -(dual(E[k])))
    rep.exact("duality[e1^e2^e3=-I e0]", _wedge([1, 2, 3]) == -dual(E0))

    n_assoc = 200
    ok_assoc = ok_parity = ok_cyclic = True
    for _ in range(n_assoc):
        a, b, c = (Multivector(rng.integers(-5, 6, size=16)) for _ in range(3))
        ok_assoc &= (a * b) * c == a * (b * c)
        ok_cyclic &= (a * b * c).scalar_value == (c * a * b).scalar_value
        ok_parity &= ((a.even_part() * b.even_part()).is_even() and (a.odd_part() * b.odd_part()).is_even()
                      and (a.even_part() * b.odd_part()).is_odd())
    rep.counts["random_triples"] = n_assoc
    rep.exact("associativity_integer_triples", ok_assoc)
    rep.exact("cyclic_scalar_part", ok_cyclic)
    rep.exact("grade_parity", ok_parity)
    return rep


# check-bilinears -----------------------------------------------------------

def _max_abs(values) -> float:
    return float(np.max(np.abs(np.asarray(values)))) if np.size(values) else 0.0


def run_check_bilinears(cfg: RunConfig) -> Report:
    rep = Report("check-bilinears")
    rng = np.random.default_rng(cfg.seed)
    tol_p, tol_i = cfg.tol("point"), cfg.tol("imag")

    err = {k: 0.0 for k in ("scalar", "pseudoscalar", "j", "j5", "project")}
    imag = 0.0
    for _ in range(cfg.samples):
        p = FieldPoint.random(rng)
        psi = oracle.bispinor(p)
        f, (E1, E2, E3), (B1, B2, B3), g = p.f, p.E, p.B, p.g
        column = np.array([f + 1j * B3, 1j * B1 - B2, 1j * g + E3, E1 + 1j * E2])
        err["project"] = max(err["project"], _max_abs(project(p.to_multivector()) - column),
                             _max_abs(psi - column))
        ref = oracle.point_bilinears(psi)
        imag = max(imag, *(_max_abs(np.imag(v)) for v in ref.values()))
        err["scalar"] = max(err["scalar"], abs(scalar_bilinear(p) - ref["scalar"].real))
        err["pseudoscalar"] = max(err["pseudoscalar"], abs(pseudoscalar_bilinear(p) - ref["pseudoscalar"].real))
        err["j"] = max(err["j"], _max_abs(vector_current(p) - ref["j"].real))
        err["j5"] = max(err["j5"], _max_abs(pseudovector_current(p) - ref["j5"].real))
    for k, v in err.items():
        rep.bound(f"point_{k}", v, tol_p)
    rep.bound("oracle_imaginary_parts", imag, tol_i)

    gp = 0.0
    for _ in range(cfg.samples):
        m = Multivector(rng.normal(size=16))
        for part in (m.even_part(), m.odd_part()):
            gp = max(gp, abs(bilinear_via_grade_projection(part) - represent(part)[0, 0].real))
        gp = max(gp, abs(m11_expansion(m) - represent(m)[0, 0]))
    rep.bound("grade_projection_m11", gp, tol_p)
    rep.counts["points"] = cfg.samples

    exact_err = {"lagrangian": 0.0, "momentum": 0.0, "angular_momentum": 0.0}
    fd_err = dict(exact_err)
    pairs = [(i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
    for _ in range(cfg.jet_samples):
        fld = oracle.AnalyticField.random(rng)
        x4 = rng.normal(size=4)
        jet = fld.jet(x4)
        psi = oracle.bispinor(jet.point)
        for dpsi, acc in ((oracle.exact_bispinor_derivatives(jet), exact_err),
                          (oracle.fd_bispinor_derivatives(fld, x4, cfg.fd_step), fd_err)):
            acc["lagrangian"] = max(acc["lagrangian"], abs(lagrangian_density(jet) - oracle.lagrangian(psi, dpsi)))
            for i in (1, 2, 3):
                acc["momentum"] = max(acc["momentum"], abs(momentum_density(jet, i) - oracle.momentum(psi, dpsi, i)))
            for i, j in pairs:
                acc["angular_momentum"] = max(
                    acc["angular_momentum"],
                    abs(angular_momentum_density(jet, x4[1:], i, j) - oracle.angular_momentum(psi, dpsi, x4[1:], i, j)))
    for k in exact_err:
        rep.bound(f"jet_analytic_{k}", exact_err[k], cfg.tol("jet_analytic"))
        rep.bound(f"jet_fd_{k}", fd_err[k], cfg.tol("jet_fd"))
    rep.counts["jets"] = cfg.jet_samples
    return rep


# check-lorentz -------------------------------------------------------------

def _pseudovector(components) -> Multivector:
    """sum_mu c^mu I e_mu, so that (I e^mu) . v = c^mu."""
    return sum((float(c) * (I * E[mu]) for mu, c in enumerate(components)), Multivector())


def run_check_lorentz(cfg: RunConfig) -> Report:
    rep = Report("check-lorentz")
    rng = np.random.default_rng(cfg.seed)
    tol = cfg.tol("lorentz")
    w = projection_bispinor()

    err = {k: 0.0 for k in ("j_covariance", "j5_covariance", "scalar_invariance", "pseudoscalar_invariance",
                            "spinor_scalar_invariance", "component_rule", "current_multivector_forms")}
    for _ in range(cfg.rotors):
        rot = random_rotor(rng)
        p = FieldPoint.random(rng)
        psi_m = p.to_multivector()
        spinor_t = represent(rot.value) @ oracle.bispinor(p)
        ref_t = oracle.point_bilinears(spinor_t)

        j = vector_current(p)
        j5 = pseudovector_current(p)
        err["current_multivector_forms"] = max(
            err["current_multivector_forms"],
            _max_abs(vector_components(vector_current_multivector(psi_m)) - j),
            _max_abs(pseudovector_components(pseudovector_current_multivector(psi_m)) - j5))
        err["j_covariance"] = max(err["j_covariance"], _max_abs(
            vector_components(sandwich(rot, Multivector.vector(j))) - ref_t["j"].real))
        err["j5_covariance"] = max(err["j5_covariance"], _max_abs(
            pseudovector_components(sandwich(rot, _pseudovector(j5))) - ref_t["j5"].real))

        p_t = FieldPoint.from_multivector(sandwich(rot, psi_m), atol=1e-9)
        err["scalar_invariance"] = max(err["scalar_invariance"], abs(scalar_bilinear(p_t) - scalar_bilinear(p)))
        err["pseudoscalar_invariance"] = max(err["pseudoscalar_invariance"],
                                             abs(pseudoscalar_bilinear(p_t) - pseudoscalar_bilinear(p)))
        err["spinor_scalar_invariance"] = max(err["spinor_scalar_invariance"],
                                              abs(ref_t["scalar"] - scalar_bilinear(p)),
                                              abs(ref_t["pseudoscalar"] - pseudoscalar_bilinear(p)))
        inv = rot.reverse
        back = sandwich(inv, psi_m)
        for mask in range(16):
            x = Multivector.blade(mask)
            x_inv = x * (x * x).scalar_value  # X^2 = +-1
            lhs = (sandwich(rot, x_inv) * psi_m).scalar_value
            rhs = (x_inv * back).scalar_value
            err["component_rule"] = max(err["component_rule"], abs(lhs - rhs))
    for k, v in err.items():
        rep.bound(k, v, tol)
    rep.counts["rotors"] = cfg.rotors

    planes = {"e1^e2": E[1] * E[2], "e2^e3": E[2] * E[3], "e3^e1": E[3] * E[1]}
    for label, plane in planes.items():
        full = rotation_rotor(math.pi, plane)
        double = rotation_rotor(2 * math.pi, plane)
        spin = represent(full.value) @ w
        rep.exact(f"full_turn_negates_w[{label}]",
                  _max_abs(spin + w) < 1e-12 and np.vdot(w, spin).real < 0)
        rep.exact(f"double_turn_fixes_w[{label}]", _max_abs(represent(double.value) @ w - w) < 1e-12)
        ok_two = ok_one = True
        for mask in range(16):
            x = Multivector.blade(mask)
            y = sandwich(full, x)
            ok_two &= y.allclose(x) and float(y.coeffs[mask]) > 0
            z = one_sided(full, x)
            ok_one &= z.allclose(-x) and float(z.coeffs[mask]) < 0
        rep.exact(f"full_turn_sandwich_fixes_all_blades[{label}]", ok_two)
        rep.exact(f"full_turn_one_sided_negates_all_blades[{label}]", ok_one)

    p = FieldPoint.random(rng)
    psi_m = p.to_multivector()
    rep.exact("identity_rotor_unchanged",
              sandwich(IDENTITY, psi_m) == psi_m and one_sided(IDENTITY, psi_m) == psi_m)
    return rep


# simulate ------------------------------------------------------------------

def _fmt(x: float) -> str:
    return repr(float(x))


def run_simulate(cfg: RunConfig, out: Optional[str | Path] = None) -> Report:
    # blow-ups are caught as NonFiniteStateError, so numpy's overflow warnings are noise
    with np.errstate(over="ignore", invalid="ignore"):
        return _simulate(cfg, out)


def _simulate(cfg: RunConfig, out: Optional[str | Path]) -> Report:
    rep = Report("simulate")
    grid = cfg.grid_spec()
    dt = float(cfg.dt) if cfg.dt is not None else cfg.cfl * grid.dx
    name = cfg.scenario.get("name", "plane_wave")
    params = dict(cfg.scenario.get("params", {}))
    try:
        state = init_state(grid, name, **params)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if abs(dt) > 0.5 * grid.dx * (1 + 1e-12):
        raise CFLViolation(f"dt = {dt} exceeds 0.5 * dx = {0.5 * grid.dx}")

    path = Path(out or cfg.output)
    path.parent.mkdir(parents=True, exist_ok=True)
    initial = conserved_totals(state)
    res_max = 0.0
    drift_q0 = 0.0
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        prev, cur = None, state
        totals = initial
        n = 0
        try:
            for n in range(cfg.steps + 1):
                nxt = step(cur, dt) if n < cfg.steps else None
                res = math.nan
                if prev is not None and nxt is not None:
                    res = float(second_order_residual([prev, cur, nxt], dt).max())
                    res_max = max(res_max, res)
                totals = conserved_totals(cur)
                writer.writerow([n, _fmt(cur.time), *map(_fmt, totals.as_row()), _fmt(res)])
                drift_q0 = max(drift_q0, _relative(totals.Q[0], initial.Q[0]))
                if nxt is None:
                    break
                prev, cur = cur, nxt
        except NonFiniteStateError as exc:
            writer.writerow(["ERROR", n + 1, str(exc)])
            fh.flush()
            rep.error = str(exc)
    rep.drift = {"Q0_relative": drift_q0,
                 **{f"Q{mu}_abs": abs(float(totals.Q[mu] - initial.Q[mu])) for mu in range(1, 4)},
                 "S_abs": abs(float(totals.S - initial.S)), "P_abs": abs(float(totals.P - initial.P))}
    rep.bound("Q0_relative_drift", drift_q0, cfg.tol("drift"))
    rep.max_errors["box_residual_max"] = res_max
    if rep.error is None and name in ANALYTIC_SCENARIOS:
        exact = init_state(grid, name, time=cur.time, **params)
        rep.bound("field_error_vs_analytic", _max_abs(cur.data - exact.data), cfg.tol("field_error"))
    rep.counts["steps"] = cfg.steps
    return rep


def _relative(value: float, reference: float) -> float:
    if reference == 0:
        return abs(float(value))
    return abs(float(value - reference)) / abs(float(reference))


# entry point ---------------------------------------------------------------

RUNNERS = {
    "check-algebra": run_check_algebra,
    "check-bilinears": run_check_bilinears,
    "check-lorentz": run_check_lorentz,
}


def run(cfg: RunConfig, out: Optional[str | Path] = None) -> Report:
    t0 = time.perf_counter()
    if cfg.mode == "simulate":
        rep = run_simulate(cfg, out)
    else:
        rep = RUNNERS[cfg.mode](cfg)
    rep.runtime_s = time.perf_counter() - t0
    rep.tolerance_overrides = dict(cfg.tolerances)
    return rep


def summary_path(cfg: RunConfig, out: Optional[str | Path]) -> Optional[Path]:
    if cfg.mode == "simulate":
        csv_path = Path(out or cfg.output)
        return csv_path.with_name(csv_path.stem + ".summary.json")
    return Path(out) if out else None


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="stadirac", description=__doc__.splitlines()[0])
    parser.add_argument("mode", choices=MODES)
    parser.add_argument("--config", help="JSON run configuration")
    parser.add_argument("--out", help="CSV path (simulate) or summary JSON path (checks)")
    parser.add_argument("--seed", type=int, help="override the config RNG seed")
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        raw = json.loads(Path(args.config).read_text()) if args.config else {}
        if "mode" in raw and raw["mode"] != args.mode:
            raise ConfigError(f"config mode {raw['mode']!r} contradicts command-line mode {args.mode!r}")
        raw["mode"] = args.mode
        if args.seed is not None:
            raw["seed"] = args.seed
        cfg = RunConfig.from_dict(raw)
        if cfg.tolerances:
            log.info("tolerance overrides: %s", cfg.tolerances)
        rep = run(cfg, args.out)
    except (ConfigError, CFLViolation, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    for c in rep.checks:
        if not c.passed or c.threshold:
            print(c.line())
    n_exact = sum(1 for c in rep.checks if not c.threshold)
    n_exact_ok = sum(1 for c in rep.checks if not c.threshold and c.passed)
    if n_exact:
        print(f"exact identities: {n_exact_ok}/{n_exact} passed")
    for k, v in rep.counts.items():
        print(f"{k}: {v}")
    if rep.error:
        print(f"error: {rep.error}", file=sys.stderr)
    print(f"{rep.mode}: {'PASSED' if rep.passed else 'FAILED'} in {rep.runtime_s:.2f} s")

    spath = summary_path(cfg, args.out)
    if spath is not None:
        spath.parent.mkdir(parents=True, exist_ok=True)
        spath.write_text(json.dumps(rep.summary(), indent=2, sort_keys=True) + "\n")
    if rep.error:
        return 3
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
