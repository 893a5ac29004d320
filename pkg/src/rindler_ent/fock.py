"""Occupation-number (Fock) algebra for small labelled mode sets.

States are sparse maps from occupation tuples to complex amplitudes over an
immutable, ordered mode registry.  Fermionic operators carry Jordan-Wigner
phases defined relative to the registry order; reordering modes (needed to
group wedge factors before a partial trace) applies the corresponding
anticommutation signs.  Dense matrices appear only after reduction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

REGIONS = ("I", "IV", "Alice")
ROLES = ("particle", "antiparticle", "qubit")
STATISTICS = ("boson", "fermion")

# Amplitudes below this magnitude are dropped after each operator application.
PRUNE_TOL = 1e-16


@dataclass(frozen=True)
class Mode:
    """One field mode: where it lives, what it annihilates, how it counts."""

    name: str
    region: str
    role: str
    statistics: str
    cutoff: int

    def __post_init__(self) -> None:
        if self.region not in REGIONS:
            raise ValueError(f"unknown region {self.region!r}")
        if self.role not in ROLES:
            raise ValueError(f"unknown role {self.role!r}")
        if self.statistics not in STATISTICS:
            raise ValueError(f"unknown statistics {self.statistics!r}")
        if self.cutoff < 1:
            raise ValueError("cutoff must be >= 1")
        if self.statistics == "fermion" and self.cutoff != 1:
            raise ValueError("fermionic modes must have cutoff 1")

    @property
    def dim(self) -> int:
        return self.cutoff + 1


class ModeRegistry:
    """Ordered, immutable sequence of modes.

    The order is fixed at construction; all fermionic signs below are defined
    relative to it.  Mode names must be unique (they identify modes when two
    registries are concatenated by a tensor product).
    """

    def __init__(self, modes) -> None:
        self.modes: tuple[Mode, ...] = tuple(modes)
        if not self.modes:
            raise ValueError("registry needs at least one mode")
        names = [m.name for m in self.modes]
        if len(set(names)) != len(names):
            raise ValueError("mode names must be unique")
        self.dims: tuple[int, ...] = tuple(m.dim for m in self.modes)
        self._fermionic: tuple[bool, ...] = tuple(
            m.statistics == "fermion" for m in self.modes
        )

    def __len__(self) -> int:
        return len(self.modes)

    def __eq__(self, other) -> bool:
        return isinstance(other, ModeRegistry) and self.modes == other.modes

    def __hash__(self) -> int:
        return hash(self.modes)

    def __repr__(self) -> str:
        return f"ModeRegistry({', '.join(m.name for m in self.modes)})"

    def is_fermionic(self, index: int) -> bool:
        return self._fermionic[index]

    def index(self, name: str) -> int:
        for i, m in enumerate(self.modes):
            if m.name == name:
                return i
        raise KeyError(name)

    def indices_in_region(self, region: str) -> list[int]:
        return [i for i, m in enumerate(self.modes) if m.region == region]

    def size(self) -> int:
        return int(np.prod(self.dims))

    def basis(self):
        """Iterate over all occupation tuples in row-major order."""
        return itertools.product(*(range(d) for d in self.dims))

    def validate_tuple(self, occ: tuple[int, ...]) -> None:
        if len(occ) != len(self.modes):
            raise ValueError(f"occupation tuple has wrong length: {occ}")
        for n, mode in zip(occ, self.modes):
            if not 0 <= n <= mode.cutoff:
                raise ValueError(f"occupation {occ} violates cutoff of {mode.name}")


class StateVector:
    """Sparse ket: occupation tuple -> complex amplitude, over a registry.

    ``lost_norm`` accumulates the squared norm dropped at bosonic cutoffs
    (and, for states built from truncated series, the exact tail weight).
    Instances are treated as immutable; every operation returns a new state.
    """

    __slots__ = ("registry", "amps", "lost_norm")

    def __init__(self, registry: ModeRegistry, amps=None, lost_norm: float = 0.0):
        self.registry = registry
        self.amps: dict[tuple[int, ...], complex] = {}
        if amps:
            for occ, amp in dict(amps).items():
                occ = tuple(int(n) for n in occ)
                registry.validate_tuple(occ)
                if abs(amp) >= PRUNE_TOL:
                    self.amps[occ] = complex(amp)
        self.lost_norm = float(lost_norm)

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.amps.values()))

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return scale(self, 1.0 / n)

    def dense(self) -> np.ndarray:
        """Dense amplitude vector, row-major over the registry dims."""
        vec = np.zeros(self.registry.size(), dtype=complex)
        dims = self.registry.dims
        for occ, amp in self.amps.items():
            vec[int(np.ravel_multi_index(occ, dims))] = amp
        return vec

    def __repr__(self) -> str:
        return f"StateVector({len(self.amps)} terms on {self.registry!r})"


def basis_state(registry: ModeRegistry, occ) -> StateVector:
    """Ket |occ> with amplitude one."""
    return StateVector(registry, {tuple(occ): 1.0})


def vacuum_state(registry: ModeRegistry) -> StateVector:
    return basis_state(registry, (0,) * len(registry))


def scale(state: StateVector, factor: complex) -> StateVector:
    out = StateVector(state.registry, lost_norm=state.lost_norm)
    for occ, amp in state.amps.items():
        val = factor * amp
        if abs(val) >= PRUNE_TOL:
            out.amps[occ] = val
    return out


def combine(terms) -> StateVector:
    """Linear combination sum_k coef_k |state_k> over one registry.

    The combined ``lost_norm`` is the weight-averaged sum of the operands'
    lost norms, which is exact whenever the dropped tails are orthogonal
    (true for every construction in this package).
    """
    terms = list(terms)
    if not terms:
        raise ValueError("empty combination")
    registry = terms[0][1].registry
    out = StateVector(registry)
    lost = 0.0
    for coef, state in terms:
        if state.registry != registry:
            raise ValueError("registry mismatch in combination")
        lost += abs(coef) ** 2 * state.lost_norm
        for occ, amp in state.amps.items():
            out.amps[occ] = out.amps.get(occ, 0.0) + coef * amp
    out.amps = {occ: a for occ, a in out.amps.items() if abs(a) >= PRUNE_TOL}
    out.lost_norm = lost
    return out


def _jw_phase(registry: ModeRegistry, occ: tuple[int, ...], mode: int) -> int:
    """(-1)^(occupied fermionic modes strictly earlier in registry order)."""
    count = 0
    for i in range(mode):
        if registry.is_fermionic(i) and occ[i]:
            count += 1
    return -1 if count % 2 else 1


def apply_creation(state: StateVector, mode: int) -> StateVector:
    """Apply the creation operator of one mode.

    Bosonic: |..n..> -> sqrt(n+1)|..n+1..>, amplitudes pushed past the cutoff
    are dropped and their squared norm added to ``lost_norm``.  Fermionic:
    |..0..> -> (Jordan-Wigner phase)|..1..>, occupied modes map to zero.
    """
    registry = state.registry
    if not 0 <= mode < len(registry):
        raise ValueError(f"invalid mode index {mode}")
    cutoff = registry.modes[mode].cutoff
    fermionic = registry.is_fermionic(mode)
    out = StateVector(registry, lost_norm=state.lost_norm)
    for occ, amp in state.amps.items():
        n = occ[mode]
        if fermionic:
            if n == 1:
                continue  # Pauli exclusion
            val = _jw_phase(registry, occ, mode) * amp
        else:
            val = math.sqrt(n + 1) * amp
            if n + 1 > cutoff:
                out.lost_norm += abs(val) ** 2
                continue
        if abs(val) < PRUNE_TOL:
            continue
        new = list(occ)
        new[mode] = n + 1
        key = tuple(new)
        out.amps[key] = out.amps.get(key, 0.0) + val
    return out


def apply_annihilation(state: StateVector, mode: int) -> StateVector:
    """Apply the annihilation operator of one mode (adjoint of creation)."""
    registry = state.registry
    if not 0 <= mode < len(registry):
        raise ValueError(f"invalid mode index {mode}")
    fermionic = registry.is_fermionic(mode)
    out = StateVector(registry, lost_norm=state.lost_norm)
    for occ, amp in state.amps.items():
        n = occ[mode]
        if n == 0:
            continue
        if fermionic:
            val = _jw_phase(registry, occ, mode) * amp
        else:
            val = math.sqrt(n) * amp
        if abs(val) < PRUNE_TOL:
            continue
        new = list(occ)
        new[mode] = n - 1
        key = tuple(new)
        out.amps[key] = out.amps.get(key, 0.0) + val
    return out


def inner_product(bra: StateVector, ket: StateVector) -> complex:
    """<bra|ket>, conjugate-linear in the bra."""
    if bra.registry != ket.registry:
        raise ValueError("inner product requires matching registries")
    small, large = (bra, ket) if len(bra.amps) <= len(ket.amps) else (ket, bra)
    total = 0.0 + 0.0j
    for occ in small.amps:
        other = large.amps.get(occ)
        if other is not None:
            total += bra.amps[occ].conjugate() * ket.amps[occ]
    return total


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """Tensor product; a's modes come first in the concatenated registry."""
    names_a = {m.name for m in a.registry.modes}
    if names_a & {m.name for m in b.registry.modes}:
        raise ValueError("tensor factors must have disjoint mode names")
    registry = ModeRegistry(a.registry.modes + b.registry.modes)
    out = StateVector(registry, lost_norm=a.lost_norm + b.lost_norm)
    for occ_a, amp_a in a.amps.items():
        for occ_b, amp_b in b.amps.items():
            val = amp_a * amp_b
            if abs(val) >= PRUNE_TOL:
                out.amps[occ_a + occ_b] = val
    return out


def reorder(state: StateVector, order) -> StateVector:
    """Permute the registry order, applying fermionic exchange signs.

    ``order`` lists old mode indices in their new positions.  The sign of
    each basis tuple is the parity of inversions among its occupied
    fermionic modes (bosonic and qubit modes commute with everything).
    """
    registry = state.registry
    order = list(order)
    if sorted(order) != list(range(len(registry))):
        raise ValueError("order must be a permutation of the mode indices")
    new_registry = ModeRegistry([registry.modes[i] for i in order])
    new_pos = {old: new for new, old in enumerate(order)}
    out = StateVector(new_registry, lost_norm=state.lost_norm)
    for occ, amp in state.amps.items():
        positions = [
            new_pos[i]
            for i in range(len(occ))
            if occ[i] and registry.is_fermionic(i)
        ]
        inversions = sum(
            1
            for x in range(len(positions))
            for y in range(x + 1, len(positions))
            if positions[x] > positions[y]
        )
        sign = -1 if inversions % 2 else 1
        out.amps[tuple(occ[i] for i in order)] = sign * amp
    return out


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Dense Hermitian matrix with an ordered subsystem factorization.

    ``dims`` lists the dimension of each factor; rows/columns are indexed
    row-major over the factor indices in that order.
    """

    dims: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        size = int(np.prod(self.dims))
        if self.matrix.shape != (size, size):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match dims {self.dims}"
            )

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))


def _check_partition(registry: ModeRegistry, groups) -> list[list[int]]:
    groups = [list(g) for g in groups]
    flat = [i for g in groups for i in g]
    if sorted(flat) != list(range(len(registry))):
        raise ValueError("mode groups must partition the registry")
    return groups


def density_from_pure(state: StateVector, groups) -> DensityMatrix:
    """Rank-1 projector |psi><psi| with one factor per mode group.

    Groups must partition the registry; modes are reordered (with fermionic
    signs) so each group is contiguous.  Intended for small registries --
    the matrix is dense over the full space.
    """
    groups = _check_partition(state.registry, groups)
    if abs(state.norm() - 1.0) > 1e-6:
        raise ValueError("density_from_pure expects a normalized state")
    ordered = reorder(state, [i for g in groups for i in g])
    psi = ordered.dense()
    dims = []
    pos = 0
    for g in groups:
        dims.append(int(np.prod([state.registry.dims[i] for i in g])))
        pos += len(g)
    return DensityMatrix(tuple(dims), np.outer(psi, psi.conj()))


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Trace out all factors not listed in ``keep`` (kept order preserved)."""
    keep = sorted(set(int(k) for k in keep))
    n = len(rho.dims)
    if not keep:
        raise ValueError("keep set must be non-empty")
    if any(k < 0 or k >= n for k in keep):
        raise ValueError(f"keep indices out of range: {keep}")
    traced = [i for i in range(n) if i not in keep]
    dims = list(rho.dims)
    tensor_form = rho.matrix.reshape(dims + dims)
    for idx in sorted(traced, reverse=True):
        tensor_form = np.trace(tensor_form, axis1=idx, axis2=idx + len(dims))
        dims.pop(idx)
    size = int(np.prod(dims))
    return DensityMatrix(tuple(dims), tensor_form.reshape(size, size))


def reduced_from_pure(state: StateVector, keep_groups) -> DensityMatrix:
    """Partial trace of |psi><psi| over every mode not in ``keep_groups``.

    Equivalent to density_from_pure followed by partial_trace but never
    materializes the full projector: the state is reshaped into a matrix
    over (kept, traced) indices and contracted as M M^dagger.
    """
    keep_groups = [list(g) for g in keep_groups]
    kept_flat = [i for g in keep_groups for i in g]
    if len(set(kept_flat)) != len(kept_flat):
        raise ValueError("keep groups overlap")
    registry = state.registry
    traced = [i for i in range(len(registry)) if i not in kept_flat]
    ordered = reorder(state, kept_flat + traced)

    kept_dims = [registry.dims[i] for i in kept_flat]
    traced_dims = [registry.dims[i] for i in traced]
    kept_size = int(np.prod(kept_dims)) if kept_dims else 1
    traced_size = int(np.prod(traced_dims)) if traced_dims else 1

    m = np.zeros((kept_size, traced_size), dtype=complex)
    nk = len(kept_flat)
    for occ, amp in ordered.amps.items():
        row = int(np.ravel_multi_index(occ[:nk], kept_dims)) if nk else 0
        col = (
            int(np.ravel_multi_index(occ[nk:], traced_dims)) if traced else 0
        )
        m[row, col] += amp
    group_dims = tuple(
        int(np.prod([registry.dims[i] for i in g])) for g in keep_groups
    )
    return DensityMatrix(group_dims, m @ m.conj().T)


def ladder_matrix(registry: ModeRegistry, mode: int, dagger: bool) -> np.ndarray:
    """Dense matrix of a creation/annihilation operator on the full basis.

    Only sensible for small registries; used by algebra checks.
    """
    size = registry.size()
    op = np.zeros((size, size), dtype=complex)
    for occ in registry.basis():
        st = basis_state(registry, occ)
        res = apply_creation(st, mode) if dagger else apply_annihilation(st, mode)
        col = int(np.ravel_multi_index(occ, registry.dims))
        for occ2, amp in res.amps.items():
            op[int(np.ravel_multi_index(occ2, registry.dims)), col] = amp
    return op
