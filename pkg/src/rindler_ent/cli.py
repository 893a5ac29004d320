"""Command-line front end: state/sweep specs in, CSV/JSON artifacts out.

Exit codes: 0 success, 1 validation error, 2 convergence failure (partial
results are still written).  Identical inputs produce byte-identical files;
floats are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__, fock
from .experiments import (
    INV_SQRT2,
    CreationReport,
    SweepRow,
    SweepSpec,
    acceleration_for_r,
    creation_report,
    figure_preset,
    find_peak,
    sweep_r,
)
from .family import StateParams, build_state, rho_AR
from .negativity import (
    converged_negativity,
    converged_negativity_pair,
    hermitian_eigenvalues,
    negativity,
    partial_transpose_A,
)
from .rindler import (
    RindlerConfig,
    bosonic_tail_bound,
    bosonic_vacuum,
    fermionic_antiparticle_matrix,
    fermionic_vacuum,
    field_registry,
    r_from_acceleration,
    unruh_annihilation_matrix,
)

SWEEP_HEADER = "r_omega,N_AR,N_ARbar,n_max,tail_bound,converged"
CREATION_HEADER = "inertial_N,N_at_r,absolute,relative_percent,unbounded"
PEAK_HEADER = "r_star,N_star"


@dataclass
class RunConfig:
    command: str
    statistics: str = "fermion"
    p: float = 0.4
    alpha: float = 0.0
    beta: float = 1.0
    q_r: float = INV_SQRT2
    r: float | None = None
    r_lo: float | None = None
    r_hi: float | None = None
    r_count: int = 200
    epsilon: float = 1e-6
    tol: float = 1e-4
    omega_hz: float | None = None
    figure_id: str | None = None
    out: str | None = None
    fmt: str | None = None


def parse_q_r(text) -> float:
    """Decimal value, or the literal token 1/sqrt2 for the extremal weight."""
    if isinstance(text, (int, float)):
        return float(text)
    token = text.strip().lower().replace(" ", "")
    if token in ("1/sqrt2", "1/sqrt(2)"):
        return INV_SQRT2
    return float(token)


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _fmt_bool(flag: bool) -> str:
    return "true" if flag else "false"


def _sweep_row_record(row: SweepRow) -> dict:
    return {
        "r_omega": row.r_omega,
        "N_AR": row.n_ar,
        "N_ARbar": row.n_arbar,
        "n_max": row.n_max_used if row.n_max_used is not None else 0,
        "tail_bound": row.tail_bound,
        "converged": row.converged,
    }


def _creation_record(rep: CreationReport) -> dict:
    return {
        "inertial_N": rep.inertial_n,
        "N_at_r": rep.n_at_r,
        "absolute": rep.absolute_creation,
        "relative_percent": rep.relative_percent,
        "unbounded": rep.unbounded,
    }


def _sweep_csv(rows: list[SweepRow]) -> str:
    lines = [SWEEP_HEADER]
    for row in rows:
        rec = _sweep_row_record(row)
        lines.append(
            ",".join(
                [
                    _fmt(rec["r_omega"]),
                    _fmt(rec["N_AR"]),
                    _fmt(rec["N_ARbar"]),
                    str(rec["n_max"]),
                    _fmt(rec["tail_bound"]),
                    _fmt_bool(rec["converged"]),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _creation_csv(rows: list[CreationReport]) -> str:
    lines = [CREATION_HEADER]
    for rep in rows:
        rel = rep.relative_percent
        lines.append(
            ",".join(
                [
                    _fmt(rep.inertial_n),
                    _fmt(rep.n_at_r),
                    _fmt(rep.absolute_creation),
                    "" if rel is None else _fmt(rel),
                    _fmt_bool(rep.unbounded),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _artifact_text(cfg: RunConfig, records: list[dict], csv_text: str) -> str:
    if _resolved_format(cfg) == "json":
        doc = {
            "meta": {"config": asdict(cfg), "version": __version__},
            "rows": records,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    return csv_text


def _resolved_format(cfg: RunConfig) -> str:
    if cfg.fmt:
        return cfg.fmt
    if cfg.out and cfg.out.lower().endswith(".json"):
        return "json"
    return "csv"


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
        return
    with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _state_params(cfg: RunConfig) -> StateParams:
    return StateParams(p=cfg.p, alpha=cfg.alpha, beta=cfg.beta)


def _template(cfg: RunConfig) -> RindlerConfig:
    return RindlerConfig(cfg.statistics, 0.0, cfg.q_r)


def _require(cfg: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(cfg, name) is None:
            raise ValueError(f"command {cfg.command!r} requires --{name.replace('_', '-')}")


def cmd_negativity(cfg: RunConfig) -> int:
    _require(cfg, "r")
    sp = _state_params(cfg)
    rc = RindlerConfig(cfg.statistics, cfg.r, cfg.q_r)
    res_ar, res_arbar = converged_negativity_pair(sp, rc, cfg.epsilon)
    print(f"N_AR = {_fmt(res_ar.value)}")
    print(f"N_ARbar = {_fmt(res_arbar.value)}")
    row = SweepRow(
        r_omega=cfg.r,
        n_ar=res_ar.value,
        n_arbar=res_arbar.value,
        n_max_used=res_ar.n_max_used,
        tail_bound=res_ar.tail_bound,
        converged=res_ar.converged and res_arbar.converged,
    )
    if cfg.out:
        _emit(cfg, _artifact_text(cfg, [_sweep_row_record(row)], _sweep_csv([row])))
    return 0 if row.converged else 2


def cmd_sweep(cfg: RunConfig) -> int:
    _require(cfg, "r_lo", "r_hi")
    grid = tuple(np.linspace(cfg.r_lo, cfg.r_hi, cfg.r_count))
    spec = SweepSpec(_state_params(cfg), _template(cfg), grid, cfg.epsilon)
    rows = sweep_r(spec)
    _emit(cfg, _artifact_text(cfg, [_sweep_row_record(r) for r in rows], _sweep_csv(rows)))
    return 0 if all(r.converged for r in rows) else 2


def cmd_peak(cfg: RunConfig) -> int:
    _require(cfg, "r_lo", "r_hi")
    r_star, n_star = find_peak(
        _state_params(cfg), _template(cfg), cfg.r_lo, cfg.r_hi, cfg.tol, cfg.epsilon
    )
    print(f"r_star = {_fmt(r_star)}")
    print(f"N_star = {_fmt(n_star)}")
    if cfg.out:
        csv_text = PEAK_HEADER + "\n" + _fmt(r_star) + "," + _fmt(n_star) + "\n"
        _emit(cfg, _artifact_text(cfg, [{"r_star": r_star, "N_star": n_star}], csv_text))
    return 0


def cmd_creation(cfg: RunConfig) -> int:
    _require(cfg, "r")
    rep = creation_report(_state_params(cfg), _template(cfg), cfg.r, cfg.epsilon)
    print(f"inertial_N = {_fmt(rep.inertial_n)}")
    print(f"N_at_r = {_fmt(rep.n_at_r)}")
    print(f"absolute = {_fmt(rep.absolute_creation)}")
    rel = "n/a" if rep.relative_percent is None else _fmt(rep.relative_percent)
    print(f"relative_percent = {rel}")
    print(f"unbounded = {_fmt_bool(rep.unbounded)}")
    if cfg.out:
        _emit(cfg, _artifact_text(cfg, [_creation_record(rep)], _creation_csv([rep])))
    return 0


def cmd_figure(cfg: RunConfig) -> int:
    rows = figure_preset(cfg.figure_id, q_r=cfg.q_r, epsilon=cfg.epsilon)
    if cfg.figure_id == "fig4":
        _emit(cfg, _artifact_text(cfg, [_creation_record(r) for r in rows], _creation_csv(rows)))
        return 0
    _emit(cfg, _artifact_text(cfg, [_sweep_row_record(r) for r in rows], _sweep_csv(rows)))
    return 0 if all(r.converged for r in rows) else 2


def cmd_convert(cfg: RunConfig) -> int:
    _require(cfg, "r", "omega_hz")
    acc = acceleration_for_r(cfg.r, cfg.omega_hz, cfg.statistics)
    print(f"a = {_fmt(acc.m_per_s2)} m/s^2")
    print(f"a = {_fmt(acc.g)} g")
    return 0


# ---------------------------------------------------------------------------
# selfcheck: fast invariant suite, one pass/fail line per check.

def _max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def _check_fermion_anticommutators(inject_sign_error: bool) -> bool:
    reg = field_registry("fermion")
    ann = [fock.ladder_matrix(reg, i, dagger=False) for i in range(len(reg))]
    if inject_sign_error:
        ann[2] = np.abs(ann[2])  # strip the Jordan-Wigner string on one mode
    identity = np.eye(reg.size())
    worst = 0.0
    for i, a_i in enumerate(ann):
        for j, a_j in enumerate(ann):
            cre_j = a_j.conj().T
            anti = a_i @ cre_j + cre_j @ a_i
            target = identity if i == j else 0.0
            worst = max(worst, _max_abs(anti - target))
            worst = max(worst, _max_abs(a_i @ a_j + a_j @ a_i))
    return worst < 1e-12


def _check_boson_commutator() -> bool:
    n_max = 6
    reg = field_registry("boson", n_max)
    for mode in range(len(reg)):
        a = fock.ladder_matrix(reg, mode, dagger=False)
        ad = fock.ladder_matrix(reg, mode, dagger=True)
        comm = a @ ad - ad @ a
        for occ in reg.basis():
            col = int(np.ravel_multi_index(occ, reg.dims))
            expected = np.zeros(reg.size())
            # top of the truncated ladder is exempt: there [a, a+] = -n
            expected[col] = 1.0 if occ[mode] < n_max else -float(n_max)
            if _max_abs(comm[:, col] - expected) >= 1e-12:
                return False
    return True


def _check_ladder_adjointness() -> bool:
    for reg in (field_registry("fermion"), field_registry("boson", 5)):
        for mode in range(len(reg)):
            a = fock.ladder_matrix(reg, mode, dagger=False)
            ad = fock.ladder_matrix(reg, mode, dagger=True)
            if _max_abs(ad - a.conj().T) >= 1e-12:
                return False
    return True


def _fermion_unruh_ops(r: float) -> list[np.ndarray]:
    return [
        unruh_annihilation_matrix("fermion", r, "R"),
        unruh_annihilation_matrix("fermion", r, "L"),
        fermionic_antiparticle_matrix(r, "R"),
        fermionic_antiparticle_matrix(r, "L"),
    ]


def _check_fermion_residuals() -> bool:
    for r in (0.0, 0.1, 0.35, math.pi / 4 - 1e-4):
        vac = fermionic_vacuum(r).dense()
        for op in _fermion_unruh_ops(r):
            if float(np.linalg.norm(op @ vac)) >= 1e-12:
                return False
    return True


def _check_fermion_bogoliubov() -> bool:
    identity = np.eye(16)
    for r in (0.1, 0.35, 0.7):
        ops = _fermion_unruh_ops(r)
        for i, x in enumerate(ops):
            for j, y in enumerate(ops):
                anti = x @ y.conj().T + y.conj().T @ x
                target = identity if i == j else 0.0
                if _max_abs(anti - target) >= 1e-12:
                    return False
                if _max_abs(x @ y + y @ x) >= 1e-12:
                    return False
    return True


def _check_boson_residuals() -> bool:
    n_max = 12
    for r in (0.0, 0.05, 0.3, 0.8):
        vac = bosonic_vacuum(r, n_max).dense()
        bound = 2.0 * bosonic_tail_bound(r, n_max)
        for kind in ("R", "L"):
            op = unruh_annihilation_matrix("boson", r, kind, n_max)
            if float(np.linalg.norm(op @ vac)) > bound + 1e-13:
                return False
    return True


def _sample_reductions() -> list:
    rhos = []
    for stat, r in (("fermion", 0.3), ("fermion", 0.7), ("boson", 0.4)):
        rc = RindlerConfig(stat, r, 0.85, n_max=12)
        state = build_state(StateParams(0.4, 0.2, 0.9), rc)
        rhos.append(rho_AR(state))
    return rhos


def _check_negativity_routes() -> bool:
    for rho in _sample_reductions():
        pt = partial_transpose_A(rho)
        vals = hermitian_eigenvalues(pt)
        eig_route = float(-vals[vals < 0.0].sum())
        trace_route = (float(np.linalg.svd(pt, compute_uv=False).sum()) - 1.0) / 2.0
        if abs(eig_route - trace_route) >= 1e-10:
            return False
    return True


def _check_local_unitary_invariance() -> bool:
    rng = np.random.default_rng(7)
    for rho in _sample_reductions():
        base = negativity(rho).value
        for _ in range(3):
            z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            u, _r = np.linalg.qr(z)
            d = rho.dims[1]
            big = np.kron(u, np.eye(d))
            rotated = fock.DensityMatrix(rho.dims, big @ rho.matrix @ big.conj().T)
            if abs(negativity(rotated).value - base) >= 1e-10:
                return False
    return True


def _check_separable_zero() -> bool:
    rng = np.random.default_rng(11)
    for k in range(100):
        stat = "fermion" if k % 2 == 0 else "boson"
        r = float(rng.uniform(0.0, math.pi / 4 - 1e-3 if stat == "fermion" else 1.2))
        common = float(rng.uniform(0.0, 1.0))
        sp = StateParams(float(rng.uniform(0.0, 1.0)), common, common)
        q_r = float(rng.uniform(INV_SQRT2, 1.0))
        rc = RindlerConfig(stat, r, q_r)
        if converged_negativity(sp, rc, 1e-6, "AR").value >= 1e-10:
            return False
    return True


def _check_round_trip() -> bool:
    for stat, r in (("fermion", 0.15), ("fermion", 0.6), ("boson", 0.191), ("boson", 1.4)):
        for omega in (1e6, 1e9):
            acc = acceleration_for_r(r, omega, stat)
            back = r_from_acceleration(omega, acc.m_per_s2, stat)
            if abs(back - r) >= 1e-10 * r:
                return False
    return True


def _check_inertial_oracle() -> bool:
    sp = StateParams(0.4, 0.0, 1.0)
    rc = RindlerConfig("fermion", 0.0, INV_SQRT2)
    value = converged_negativity(sp, rc, 1e-6, "AR").value
    c = 0.4 * math.sqrt(0.84) * INV_SQRT2
    d = 0.84 * 0.5
    closed = (math.sqrt(d * d + 4 * c * c) - d) / 2.0
    return abs(value - closed) < 1e-10


def selfcheck(inject_sign_error: bool = False) -> int:
    """Run the invariant suite; print one pass/fail line per check."""
    checks = [
        ("fermionic anticommutators", lambda: _check_fermion_anticommutators(inject_sign_error)),
        ("bosonic commutator below cutoff", _check_boson_commutator),
        ("ladder adjointness", _check_ladder_adjointness),
        ("fermionic Unruh vacuum residuals", _check_fermion_residuals),
        ("fermionic Bogoliubov anticommutators", _check_fermion_bogoliubov),
        ("bosonic vacuum residuals within tail bound", _check_boson_residuals),
        ("negativity eigen-sum vs trace-norm", _check_negativity_routes),
        ("negativity local-unitary invariance", _check_local_unitary_invariance),
        ("separable family gives zero negativity", _check_separable_zero),
        ("acceleration round trip", _check_round_trip),
        ("inertial closed-form oracle", _check_inertial_oracle),
    ]
    start = time.perf_counter()
    failures = 0
    for name, fn in checks:
        ok = fn()
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        if not ok:
            failures += 1
    elapsed = time.perf_counter() - start
    print(f"{len(checks) - failures}/{len(checks)} checks passed in {elapsed:.2f} s")
    return 0 if failures == 0 else 1


def cmd_selfcheck(cfg: RunConfig) -> int:
    return selfcheck(inject_sign_error=getattr(cfg, "_inject_sign_error", False))


# ---------------------------------------------------------------------------
# argument parsing

_DEFAULTS = {
    "statistics": "fermion",
    "p": 0.4,
    "alpha": 0.0,
    "beta": 1.0,
    "q_r": "1/sqrt2",
    "epsilon": 1e-6,
    "tol": 1e-4,
    "r_count": 200,
}

_FILE_KEYS = {
    "statistics": "stat",
    "p": "P",
    "q_r": "qR",
    "omega_hz": "omega",
    "fmt": "format",
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with defaults; flags override it")
    common.add_argument("--stat", dest="statistics", choices=("fermion", "boson"))
    common.add_argument("--P", dest="p", type=float)
    common.add_argument("--alpha", type=float)
    common.add_argument("--beta", type=float)
    common.add_argument("--qR", dest="q_r", help="decimal or the token 1/sqrt2")
    common.add_argument("--epsilon", type=float)
    common.add_argument("--out", help="artifact path (stdout when omitted)")
    common.add_argument("--format", dest="fmt", choices=("csv", "json"))

    parser = argparse.ArgumentParser(
        prog="rindler-ent",
        description="Entanglement between an inertial and an accelerated observer.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_neg = sub.add_parser("negativity", parents=[common], help="N_AR and N_ARbar at one r")
    p_neg.add_argument("--r", type=float)

    p_sweep = sub.add_parser("sweep", parents=[common], help="negativity over an r grid")
    p_sweep.add_argument("--r-lo", dest="r_lo", type=float)
    p_sweep.add_argument("--r-hi", dest="r_hi", type=float)
    p_sweep.add_argument("--r-count", dest="r_count", type=int)

    p_peak = sub.add_parser("peak", parents=[common], help="locate the maximum of N_AR(r)")
    p_peak.add_argument("--r-lo", dest="r_lo", type=float)
    p_peak.add_argument("--r-hi", dest="r_hi", type=float)
    p_peak.add_argument("--tol", type=float)

    p_crea = sub.add_parser("creation", parents=[common], help="creation report at one r")
    p_crea.add_argument("--r", type=float)

    p_fig = sub.add_parser("figure", parents=[common], help="canonical figure datasets")
    p_fig.add_argument("figure_id", choices=("fig2", "fig3", "fig4"))

    p_conv = sub.add_parser("convert", parents=[common], help="r to proper acceleration")
    p_conv.add_argument("--r", type=float)
    p_conv.add_argument("--omega", dest="omega_hz", type=float, help="mode frequency in Hz")

    p_self = sub.add_parser("selfcheck", parents=[common], help="run the invariant suite")
    p_self.add_argument(
        "--inject-sign-error",
        dest="inject_sign_error",
        action="store_true",
        help=argparse.SUPPRESS,
    )
    return parser


def _resolve(args: argparse.Namespace) -> RunConfig:
    file_cfg = {}
    config_path = getattr(args, "config", None)
    if config_path:
        with open(config_path, "r", encoding="utf-8") as fh:
            file_cfg = json.load(fh)
        if not isinstance(file_cfg, dict):
            raise ValueError("config file must hold a JSON object")

    def pick(name, default=None):
        value = getattr(args, name, None)
        if value is not None:
            return value
        file_key = _FILE_KEYS.get(name, name)
        if file_key in file_cfg and file_cfg[file_key] is not None:
            return file_cfg[file_key]
        return _DEFAULTS.get(name, default)

    cfg = RunConfig(
        command=args.command,
        statistics=pick("statistics"),
        p=float(pick("p")),
        alpha=float(pick("alpha")),
        beta=float(pick("beta")),
        q_r=parse_q_r(pick("q_r")),
        r=None if pick("r") is None else float(pick("r")),
        r_lo=None if pick("r_lo") is None else float(pick("r_lo")),
        r_hi=None if pick("r_hi") is None else float(pick("r_hi")),
        r_count=int(pick("r_count")),
        epsilon=float(pick("epsilon")),
        tol=float(pick("tol")),
        omega_hz=None if pick("omega_hz") is None else float(pick("omega_hz")),
        figure_id=getattr(args, "figure_id", None),
        out=pick("out"),
        fmt=pick("fmt"),
    )
    if cfg.statistics not in ("fermion", "boson"):
        raise ValueError(f"unknown statistics {cfg.statistics!r}")
    if getattr(args, "inject_sign_error", False):
        cfg._inject_sign_error = True
    return cfg


_COMMANDS = {
    "negativity": cmd_negativity,
    "sweep": cmd_sweep,
    "peak": cmd_peak,
    "creation": cmd_creation,
    "figure": cmd_figure,
    "convert": cmd_convert,
    "selfcheck": cmd_selfcheck,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _resolve(args)
        return _COMMANDS[cfg.command](cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
