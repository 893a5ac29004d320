"""The bipartite state family shared by an inertial observer and an
accelerated one, and its two physically accessible reductions.

Alice holds an abstract two-level mode; the field side is a superposition of
the Unruh vacuum and the superposed one-particle excitation.  Tracing out the
wedge the accelerated observer cannot access yields rho_AR (observer in
wedge I) or rho_ARbar (observer in wedge IV).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import fock
from .fock import DensityMatrix, Mode, ModeRegistry, StateVector
from .rindler import RindlerConfig, unruh_particle, unruh_vacuum


@dataclass(frozen=True)
class StateParams:
    """Amplitudes of the family: P weights Alice's branches, alpha and beta
    weight the field excitation within each branch."""

    p: float
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        for name in ("p", "alpha", "beta"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")


def alice_registry() -> ModeRegistry:
    return ModeRegistry([Mode("A", "Alice", "qubit", "boson", 1)])


def build_state(sp: StateParams, rc: RindlerConfig) -> StateVector:
    """P |0>_A (alpha|1_w> + sqrt(1-alpha^2)|0_w>)
       + sqrt(1-P^2) |1>_A (beta|1_w> + sqrt(1-beta^2)|0_w>).

    Fermionic states come out exactly normalized (asserted); bosonic states
    are renormalized after truncation, keeping the truncation record in
    ``lost_norm``.
    """
    vac = unruh_vacuum(rc)
    one = unruh_particle(rc)
    field_a = fock.combine(
        [(sp.alpha, one), (math.sqrt(1.0 - sp.alpha**2), vac)]
    )
    field_b = fock.combine(
        [(sp.beta, one), (math.sqrt(1.0 - sp.beta**2), vac)]
    )
    alice = alice_registry()
    psi = fock.combine(
        [
            (sp.p, fock.tensor(fock.basis_state(alice, (0,)), field_a)),
            (
                math.sqrt(1.0 - sp.p**2),
                fock.tensor(fock.basis_state(alice, (1,)), field_b),
            ),
        ]
    )
    norm = psi.norm()
    if rc.statistics == "fermion":
        if abs(norm - 1.0) > 1e-12:
            raise AssertionError(f"fermionic state norm {norm} deviates from 1")
        return psi
    return fock.scale(psi, 1.0 / norm)


def _reduce(state: StateVector, keep_region: str) -> DensityMatrix:
    registry = state.registry
    alice = registry.indices_in_region("Alice")
    kept = registry.indices_in_region(keep_region)
    if not alice or not kept:
        raise ValueError(f"state has no Alice/{keep_region} modes to keep")
    return fock.reduced_from_pure(state, [alice, kept])


def rho_AR(state: StateVector) -> DensityMatrix:
    """Reduction to (Alice, wedge I): trace over every wedge-IV mode."""
    return _reduce(state, "I")


def rho_ARbar(state: StateVector) -> DensityMatrix:
    """Reduction to (Alice, wedge IV): trace over every wedge-I mode."""
    return _reduce(state, "IV")
