"""Entanglement between an inertial observer and a uniformly accelerated one,
beyond the single-mode approximation, for bosonic and Grassman scalar fields."""

__version__ = "0.1.0"

from .experiments import (
    Acceleration,
    CreationReport,
    SweepRow,
    SweepSpec,
    acceleration_for_r,
    creation_report,
    figure_preset,
    find_peak,
    sweep_r,
)
from .family import StateParams, build_state, rho_AR, rho_ARbar
from .fock import (
    DensityMatrix,
    Mode,
    ModeRegistry,
    StateVector,
    apply_annihilation,
    apply_creation,
    density_from_pure,
    inner_product,
    partial_trace,
    tensor,
)
from .negativity import (
    NegativityResult,
    converged_negativity,
    converged_negativity_pair,
    hermitian_eigenvalues,
    negativity,
    partial_transpose_A,
)
from .rindler import (
    RindlerConfig,
    bosonic_excitation,
    bosonic_vacuum,
    fermionic_excitation,
    fermionic_vacuum,
    field_registry,
    r_from_acceleration,
    unruh_particle,
    unruh_vacuum,
)

__all__ = [
    "Acceleration",
    "CreationReport",
    "DensityMatrix",
    "Mode",
    "ModeRegistry",
    "NegativityResult",
    "RindlerConfig",
    "StateParams",
    "StateVector",
    "SweepRow",
    "SweepSpec",
    "acceleration_for_r",
    "apply_annihilation",
    "apply_creation",
    "bosonic_excitation",
    "bosonic_vacuum",
    "build_state",
    "converged_negativity",
    "converged_negativity_pair",
    "creation_report",
    "density_from_pure",
    "fermionic_excitation",
    "fermionic_vacuum",
    "field_registry",
    "figure_preset",
    "find_peak",
    "hermitian_eigenvalues",
    "inner_product",
    "negativity",
    "partial_trace",
    "partial_transpose_A",
    "r_from_acceleration",
    "rho_AR",
    "rho_ARbar",
    "sweep_r",
    "tensor",
    "unruh_particle",
    "unruh_vacuum",
]
