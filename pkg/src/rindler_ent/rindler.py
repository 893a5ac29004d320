"""Unruh-mode structures in the Rindler basis.

Builds the Minkowski vacuum and the one-particle Unruh excitations (L and R
kinds, and arbitrary real superpositions of both) as seen by a uniformly
accelerated observer, for a bosonic scalar and for a Grassman (fermionic)
scalar.  The acceleration enters through a single squeezing parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fock
from .fock import Mode, ModeRegistry, StateVector

C_LIGHT = 2.998e8  # m/s

FERMION_R_MAX = math.pi / 4


@dataclass(frozen=True)
class RindlerConfig:
    """Field statistics plus the acceleration and mode-superposition knobs.

    q_r and q_l are the real weights of the two Unruh kinds; q_l defaults to
    sqrt(1 - q_r^2).  The conventional sector has q_r >= q_l; building with
    the weights swapped is allowed only for region-swap symmetry checks, via
    ``allow_swapped_weights``.  ``n_max`` is the bosonic occupation cutoff
    (ignored for fermions).
    """

    statistics: str
    r_omega: float
    q_r: float
    q_l: float | None = None
    n_max: int = 64
    allow_swapped_weights: bool = False

    def __post_init__(self) -> None:
        if self.statistics not in ("boson", "fermion"):
            raise ValueError(f"unknown statistics {self.statistics!r}")
        if self.statistics == "fermion":
            if not 0.0 <= self.r_omega < FERMION_R_MAX:
                raise ValueError("fermionic r_omega must lie in [0, pi/4)")
        elif self.r_omega < 0.0:
            raise ValueError("bosonic r_omega must be >= 0")
        if not 0.0 <= self.q_r <= 1.0:
            raise ValueError("q_r must lie in [0, 1]")
        if self.q_l is None:
            object.__setattr__(self, "q_l", math.sqrt(max(0.0, 1.0 - self.q_r**2)))
        if not 0.0 <= self.q_l <= 1.0:
            raise ValueError("q_l must lie in [0, 1]")
        if abs(self.q_r**2 + self.q_l**2 - 1.0) > 1e-12:
            raise ValueError("Unruh weights must satisfy q_r^2 + q_l^2 = 1")
        if self.q_r < self.q_l - 1e-12 and not self.allow_swapped_weights:
            raise ValueError("Unruh weights must satisfy q_r >= q_l")
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")


def r_from_acceleration(omega_hz: float, acceleration: float, statistics: str) -> float:
    """Squeezing parameter of a mode of frequency omega for a given proper
    acceleration: arctan(e^(-pi c omega / a)) fermionic, arctanh bosonic."""
    if omega_hz <= 0.0 or acceleration <= 0.0:
        raise ValueError("frequency and acceleration must be positive")
    x = math.exp(-math.pi * C_LIGHT * omega_hz / acceleration)
    if statistics == "fermion":
        return math.atan(x)
    if statistics == "boson":
        return math.atanh(x)
    raise ValueError(f"unknown statistics {statistics!r}")


def field_registry(statistics: str, n_max: int = 64) -> ModeRegistry:
    """Single-frequency field modes with support in the two Rindler wedges.

    Bosons: one particle mode per wedge.  Fermions: particle and antiparticle
    modes per wedge, in the fixed order (c_I, d_IV, c_IV, d_I) that all
    fermionic signs refer to.
    """
    if statistics == "boson":
        return ModeRegistry(
            [
                Mode("a_I", "I", "particle", "boson", n_max),
                Mode("a_IV", "IV", "particle", "boson", n_max),
            ]
        )
    if statistics == "fermion":
        return ModeRegistry(
            [
                Mode("c_I", "I", "particle", "fermion", 1),
                Mode("d_IV", "IV", "antiparticle", "fermion", 1),
                Mode("c_IV", "IV", "particle", "fermion", 1),
                Mode("d_I", "I", "antiparticle", "fermion", 1),
            ]
        )
    raise ValueError(f"unknown statistics {statistics!r}")


def bosonic_tail_bound(r: float, n_max: int) -> float:
    """Exact lost norm of the vacuum's geometric tail beyond the cutoff."""
    return math.tanh(r) ** (2 * (n_max + 1))


def bosonic_vacuum(r: float, n_max: int) -> StateVector:
    """Two-mode squeezed vacuum sum_n tanh^n(r)/cosh(r) |n>_I |n>_IV,
    truncated at n_max with the exact tail weight recorded."""
    if r < 0.0:
        raise ValueError("r must be >= 0")
    registry = field_registry("boson", n_max)
    t, ch = math.tanh(r), math.cosh(r)
    amps = {(n, n): t**n / ch for n in range(n_max + 1)}
    return StateVector(registry, amps, lost_norm=bosonic_tail_bound(r, n_max))


def bosonic_excitation(r: float, n_max: int, kind: str) -> StateVector:
    """Normalized one-particle Unruh excitation of the given kind.

    Kind R puts the extra quantum in wedge I:
    (1/cosh^2 r) sum_n sqrt(n+1) tanh^n(r) |n+1>_I |n>_IV; kind L is the
    wedge-swapped mirror.  Truncation keeps tuples within the cutoff and
    records the exact lost weight.
    """
    if kind not in ("L", "R"):
        raise ValueError(f"unknown Unruh kind {kind!r}")
    if r < 0.0:
        raise ValueError("r must be >= 0")
    registry = field_registry("boson", n_max)
    t, ch = math.tanh(r), math.cosh(r)
    amps = {}
    kept = 0.0
    for n in range(n_max):
        coef = math.sqrt(n + 1) * t**n / ch**2
        occ = (n + 1, n) if kind == "R" else (n, n + 1)
        amps[occ] = coef
        kept += coef**2
    return StateVector(registry, amps, lost_norm=max(0.0, 1.0 - kept))


def fermionic_vacuum(r: float) -> StateVector:
    """Minkowski vacuum of the Grassman field in the Rindler basis.

    Closed form over (c_I, d_IV, c_IV, d_I): cos^2 r on |0000>, sin r cos r
    on the two particle-antiparticle pair states, sin^2 r on |1111>.  This is
    the unique joint kernel of the four Unruh annihilation operators (checked
    by the algebra tests, which rebuild it by a null-space solve).
    """
    if not 0.0 <= r < FERMION_R_MAX:
        raise ValueError("fermionic r must lie in [0, pi/4)")
    registry = field_registry("fermion")
    s, c = math.sin(r), math.cos(r)
    amps = {
        (0, 0, 0, 0): c * c,
        (1, 1, 0, 0): s * c,
        (0, 0, 1, 1): s * c,
        (1, 1, 1, 1): s * s,
    }
    return StateVector(registry, amps)


def fermionic_excitation(r: float, kind: str) -> StateVector:
    """One-particle Unruh excitation, built by applying the creation
    operator of the given kind to the fermionic vacuum."""
    if kind not in ("L", "R"):
        raise ValueError(f"unknown Unruh kind {kind!r}")
    vac = fermionic_vacuum(r)
    registry = vac.registry
    c, s = math.cos(r), math.sin(r)
    if kind == "R":
        # C_R^dag = cos(r) c_I^dag - sin(r) d_IV
        state = fock.combine(
            [
                (c, fock.apply_creation(vac, registry.index("c_I"))),
                (-s, fock.apply_annihilation(vac, registry.index("d_IV"))),
            ]
        )
    else:
        # C_L^dag = cos(r) c_IV^dag - sin(r) d_I
        state = fock.combine(
            [
                (c, fock.apply_creation(vac, registry.index("c_IV"))),
                (-s, fock.apply_annihilation(vac, registry.index("d_I"))),
            ]
        )
    norm = state.norm()
    if abs(norm - 1.0) > 1e-12:
        raise AssertionError(f"excitation norm {norm} deviates from 1")
    return state


def unruh_vacuum(config: RindlerConfig) -> StateVector:
    if config.statistics == "boson":
        return bosonic_vacuum(config.r_omega, config.n_max)
    return fermionic_vacuum(config.r_omega)


def unruh_excitation(config: RindlerConfig, kind: str) -> StateVector:
    if config.statistics == "boson":
        return bosonic_excitation(config.r_omega, config.n_max, kind)
    return fermionic_excitation(config.r_omega, kind)


def unruh_particle(config: RindlerConfig) -> StateVector:
    """q_R |1>_R + q_L |1>_L: the one-particle state of the superposed mode."""
    exc_r = unruh_excitation(config, "R")
    exc_l = unruh_excitation(config, "L")
    return fock.combine([(config.q_r, exc_r), (config.q_l, exc_l)])


def unruh_annihilation_matrix(
    statistics: str, r: float, kind: str, n_max: int = 64
) -> np.ndarray:
    """Dense matrix of the Unruh annihilation operator C_kind on the
    (truncated) field space; used by the algebra checks."""
    if kind not in ("L", "R"):
        raise ValueError(f"unknown Unruh kind {kind!r}")
    registry = field_registry(statistics, n_max)
    if statistics == "boson":
        ch, sh = math.cosh(r), math.sinh(r)
        a_i = fock.ladder_matrix(registry, registry.index("a_I"), dagger=False)
        a_iv = fock.ladder_matrix(registry, registry.index("a_IV"), dagger=False)
        if kind == "R":
            return ch * a_i - sh * a_iv.conj().T
        return ch * a_iv - sh * a_i.conj().T
    c, s = math.cos(r), math.sin(r)
    c_i = fock.ladder_matrix(registry, registry.index("c_I"), dagger=False)
    c_iv = fock.ladder_matrix(registry, registry.index("c_IV"), dagger=False)
    d_i = fock.ladder_matrix(registry, registry.index("d_I"), dagger=False)
    d_iv = fock.ladder_matrix(registry, registry.index("d_IV"), dagger=False)
    if kind == "R":
        return c * c_i - s * d_iv.conj().T
    return c * c_iv - s * d_i.conj().T


def fermionic_antiparticle_matrix(r: float, kind: str) -> np.ndarray:
    """Antiparticle-sector Unruh annihilation operators D_kind.

    These are the wedge-swapped analogs of the particle-sector operators; the
    relative sign of the creation term is fixed to +sin(r), the unique choice
    (under this registry's sign convention) for which the four operators
    share a one-dimensional kernel.
    """
    if kind not in ("L", "R"):
        raise ValueError(f"unknown Unruh kind {kind!r}")
    registry = field_registry("fermion")
    c, s = math.cos(r), math.sin(r)
    c_i = fock.ladder_matrix(registry, registry.index("c_I"), dagger=False)
    c_iv = fock.ladder_matrix(registry, registry.index("c_IV"), dagger=False)
    d_i = fock.ladder_matrix(registry, registry.index("d_I"), dagger=False)
    d_iv = fock.ladder_matrix(registry, registry.index("d_IV"), dagger=False)
    if kind == "R":
        return c * d_i + s * c_iv.conj().T
    return c * d_iv + s * c_i.conj().T
