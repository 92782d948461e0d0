"""Spacetime-algebra form of the massless Dirac field: algebra, rotors, Dirac
matrix cross-checks, field bilinears and a periodic-grid field solver."""
from .sta_core import (E, E0, E1, E2, E3, I, ONE, Multivector, blade_mul, dual,
                       geometric_product, grade_part, hermitian_adjoint, inner_product,
                       outer_product, reverse, scalar_part)
from .rotors import (IDENTITY, Rotor, boost_rotor, compose, lorentz_rotor, one_sided,
                     rotation_about, rotation_rotor, sandwich)
from .dirac_rep import (dirac_adjoint, gamma, matrix_bilinear, project, projection_bispinor,
                        represent)
from .bilinears import (BilinearSet, FieldJet, FieldPoint, angular_momentum_density,
                        bilinear_via_grade_projection, bilinears, lagrangian_density,
                        momentum_density, pseudoscalar_bilinear, pseudovector_current,
                        scalar_bilinear, vector_current)
from .maxwell_solver import (ConservedTotals, FieldState, GridSpec, conserved_totals,
                             init_state, second_order_residual, step, time_derivative)

__version__ = "0.1.0"

__all__ = [
    "E",
    "E0",
    "E1",
    "E2",
    "E3",
    "I",
    "ONE",
    "Multivector",
    "blade_mul",
    "dual",
    "geometric_product",
    "grade_part",
    "hermitian_adjoint",
    "inner_product",
    "outer_product",
    "reverse",
    "scalar_part",
    "IDENTITY",
    "Rotor",
    "boost_rotor",
    "compose",
    "lorentz_rotor",
    "one_sided",
    "rotation_about",
    "rotation_rotor",
    "sandwich",
    "dirac_adjoint",
    "gamma",
    "matrix_bilinear",
    "project",
    "projection_bispinor",
    "represent",
    "BilinearSet",
    "FieldJet",
    "FieldPoint",
    "angular_momentum_density",
    "bilinear_via_grade_projection",
    "bilinears",
    "lagrangian_density",
    "momentum_density",
    "pseudoscalar_bilinear",
    "pseudovector_current",
    "scalar_bilinear",
    "vector_current",
    "ConservedTotals",
    "FieldState",
    "GridSpec",
    "conserved_totals",
    "init_state",
    "second_order_residual",
    "step",
    "time_derivative",
]
