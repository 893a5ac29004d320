"""Entanglement quantification via the partial transpose.

Negativity is the absolute sum of negative eigenvalues of the density matrix
partially transposed over Alice's factor.  Every evaluation is cross-checked
against the trace-norm form (||rho^T_A||_1 - 1)/2 computed from singular
values, an independent route through LAPACK.  For bosons a convergence loop
raises the occupation cutoff until the value stabilizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .family import StateParams, build_state, rho_AR, rho_ARbar
from .fock import DensityMatrix
from .rindler import RindlerConfig, bosonic_tail_bound

# Eigenvalues of the partial transpose in (-NEGATIVE_EIG_FLOOR, 0) are
# numerical noise and treated as zero.
NEGATIVE_EIG_FLOOR = 1e-10
CROSS_CHECK_TOL = 1e-10
CUTOFF_SCHEDULE = (8, 16, 32, 64, 128, 256, 512)


class NumericsError(RuntimeError):
    """Internal consistency check of the eigenvalue pipeline failed."""


@dataclass(frozen=True)
class NegativityResult:
    value: float
    min_eigenvalue: float
    n_max_used: int | None
    tail_bound: float
    converged: bool


def partial_transpose_A(rho: DensityMatrix) -> np.ndarray:
    """Transpose the first factor's indices: ((a,i),(a',i')) -> ((a',i),(a,i'))."""
    if len(rho.dims) < 2:
        raise ValueError("partial transpose needs at least two factors")
    d_a = rho.dims[0]
    d_rest = int(np.prod(rho.dims[1:]))
    blocks = rho.matrix.reshape(d_a, d_rest, d_a, d_rest)
    return blocks.transpose(2, 1, 0, 3).reshape(d_a * d_rest, d_a * d_rest)


def hermitian_eigenvalues(m: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending.

    Rejects inputs whose Hermiticity defect exceeds 1e-10 and verifies that
    the eigenvalue sum reproduces the trace within ``tol`` (scaled by size).
    """
    m = np.asarray(m)
    defect = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if defect > 1e-10:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
    vals = np.linalg.eigvalsh(m)
    trace = float(np.trace(m).real)
    scale = max(1.0, float(np.sum(np.abs(vals))))
    if abs(float(vals.sum()) - trace) > tol * scale * m.shape[0]:
        raise NumericsError("eigenvalue sum does not match the trace")
    return vals


def negativity(
    rho: DensityMatrix,
    *,
    n_max_used: int | None = None,
    tail_bound: float = 0.0,
    converged: bool = True,
) -> NegativityResult:
    """Sum of |negative eigenvalues| of the partial transpose over Alice.

    Computed from the eigenvalue sum and cross-checked against the
    trace-norm form via singular values; disagreement beyond 1e-10 raises.
    """
    trace = rho.trace()
    if abs(trace - 1.0) > 1e-8:
        raise ValueError(f"density matrix trace {trace} deviates from 1")
    pt = partial_transpose_A(rho)
    vals = hermitian_eigenvalues(pt)
    raw_sum = float(-vals[vals < 0.0].sum())
    singular = np.linalg.svd(pt, compute_uv=False)
    trace_norm_value = (float(singular.sum()) - 1.0) / 2.0
    if abs(raw_sum - trace_norm_value) > CROSS_CHECK_TOL:
        raise NumericsError(
            f"negativity routes disagree: {raw_sum} vs {trace_norm_value}"
        )
    # eigenvalues inside the noise floor are dropped from the reported value
    value = float(-vals[vals <= -NEGATIVE_EIG_FLOOR].sum())
    return NegativityResult(
        value=value,
        min_eigenvalue=float(vals[0]),
        n_max_used=n_max_used,
        tail_bound=tail_bound,
        converged=converged,
    )


def _negativity_pair_at(
    sp: StateParams, rc: RindlerConfig, n_max: int | None
) -> tuple[NegativityResult, NegativityResult]:
    if n_max is not None:
        rc = replace(rc, n_max=n_max)
    state = build_state(sp, rc)
    tail = (
        bosonic_tail_bound(rc.r_omega, rc.n_max)
        if rc.statistics == "boson"
        else 0.0
    )
    kwargs = dict(n_max_used=n_max, tail_bound=tail, converged=True)
    return (
        negativity(rho_AR(state), **kwargs),
        negativity(rho_ARbar(state), **kwargs),
    )


def converged_negativity_pair(
    sp: StateParams, rc: RindlerConfig, epsilon: float
) -> tuple[NegativityResult, NegativityResult]:
    """(N_AR, N_ARbar) with bosonic truncation control.

    Fermions are exact in one pass.  For bosons the cutoff is doubled along
    CUTOFF_SCHEDULE until both negativities move by less than epsilon and
    the vacuum tail bound drops below epsilon; if the schedule runs out the
    last values are returned flagged as unconverged.
    """
    if epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    if rc.statistics == "fermion":
        return _negativity_pair_at(sp, rc, None)

    prev: tuple[NegativityResult, NegativityResult] | None = None
    for n_max in CUTOFF_SCHEDULE:
        cur = _negativity_pair_at(sp, rc, n_max)
        if prev is not None:
            moved = max(
                abs(cur[0].value - prev[0].value),
                abs(cur[1].value - prev[1].value),
            )
            if moved < epsilon and cur[0].tail_bound < epsilon:
                return cur
        prev = cur
    assert prev is not None
    return (
        replace(prev[0], converged=False),
        replace(prev[1], converged=False),
    )


def converged_negativity(
    sp: StateParams, rc: RindlerConfig, epsilon: float, side: str = "AR"
) -> NegativityResult:
    """Negativity of one reduction (side "AR" or "ARbar"), converged in the
    bosonic cutoff; deterministic for identical inputs."""
    if side not in ("AR", "ARbar"):
        raise ValueError(f"unknown side {side!r}")
    pair = converged_negativity_pair(sp, rc, epsilon)
    return pair[0] if side == "AR" else pair[1]
