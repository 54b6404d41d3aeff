"""Command-line scans and CSV reports.

Five subcommands: ``lambda`` tabulates the pair witness over a time
grid, ``bound`` tabulates mutual information against the averaged
entanglement bound, ``ppt23`` scans the mixed-atom/number-state verdict,
``validate`` runs the internal cross-check suite, and ``demo`` prints
the two-qubit pure-vs-mixed example.  Output is data-only CSV with 12
significant digits, LF line endings, and deterministic row order
(tau-major, then n), so identical configurations produce byte-identical
files.  Exit codes: 0 success, 1 domain/config error, 2 numeric or
validation failure, 3 I/O error.
"""

import argparse
import dataclasses
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, NumericError
from .fock_thermal import thermal_distribution
from .jcm_dynamics import JcmParams, assemble_dense, evolve, joint_spectrum
from .measures import (
    concurrence_general,
    concurrence_xstate,
    ppt_verdict,
    qubit_qubit_demo,
    von_neumann_entropy,
)
from .oracle_sim import propagate, thermal_excited_state, trace_distance, truncated_hamiltonian
from .witness_bound import (
    atom_thermal_scenario,
    correlation_record,
    inseparability_condition,
    lambda_curve,
    lambda_witness,
    project_pair,
)

__all__ = ["ScanConfig", "tau_grid", "cmd_lambda", "cmd_bound", "cmd_ppt23", "cmd_validate", "cmd_demo", "main"]


@dataclass
class ScanConfig:
    """Validated scan parameters shared by the subcommands."""

    command: str
    nbar: float = 10.0
    n_list: tuple = (0, 10, 100)
    tau_max: float = 25.0
    steps: int = 2000
    tail_eps: float = 1e-12
    g: float = 1.0
    out_path: str = ""
    lambda_e: float = 0.5
    n: int = 1
    perturb: Optional[float] = None

    def __post_init__(self):
        if self.steps < 2:
            raise DomainError(f"steps must be >= 2, got {self.steps}")
        if not (math.isfinite(self.tau_max) and self.tau_max > 0.0):
            raise DomainError(f"tau-max must be finite and > 0, got {self.tau_max}")
        if not (0.0 < self.tail_eps < 1.0):
            raise DomainError(f"tail-eps must lie in (0, 1), got {self.tail_eps}")
        if not (math.isfinite(self.g) and self.g > 0.0):
            raise DomainError(f"g must be finite and > 0, got {self.g}")
        if not (math.isfinite(self.nbar) and self.nbar >= 0.0):
            raise DomainError(f"nbar must be finite and >= 0, got {self.nbar}")
        if not self.n_list:
            raise DomainError("n-list must not be empty")
        if any(n < 0 for n in self.n_list):
            raise DomainError(f"n-list entries must be >= 0, got {self.n_list}")
        if not 0.0 <= self.lambda_e <= 1.0:
            raise DomainError(f"lambda-e must lie in [0, 1], got {self.lambda_e}")
        if self.n < 0:
            raise DomainError(f"n must be >= 0, got {self.n}")


def tau_grid(tau_max: float, steps: int) -> np.ndarray:
    """Uniform inclusive grid: spacing tau_max/(steps-1)."""
    return np.linspace(0.0, float(tau_max), int(steps))


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _write_csv(path: str, header: str, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def cmd_lambda(cfg: ScanConfig) -> int:
    """Witness values on the tau grid, one row per (tau, n)."""
    taus = tau_grid(cfg.tau_max, cfg.steps)
    curves = {n: lambda_curve(n, taus) for n in cfg.n_list}
    rows = (
        [_fmt(tau), str(n), _fmt(curves[n][i])]
        for i, tau in enumerate(taus)
        for n in cfg.n_list
    )
    _write_csv(cfg.out_path, "tau,n,lambda_n", rows)
    return 0


def cmd_bound(cfg: ScanConfig) -> int:
    """Mutual information and entanglement bound rows on the tau grid."""
    dist = thermal_distribution(cfg.nbar, cfg.tail_eps)
    rows = []
    for tau in tau_grid(cfg.tau_max, cfg.steps):
        rec = correlation_record(evolve(dist, JcmParams.from_tau(tau, cfg.g)))
        rows.append(
            [
                _fmt(rec.tau),
                _fmt(rec.mutual_info),
                _fmt(rec.eof_bound_even),
                _fmt(rec.eof_bound_odd),
                _fmt(rec.eof_bound),
                _fmt(rec.s_atom),
                _fmt(rec.s_field),
                _fmt(rec.s_joint),
            ]
        )
    _write_csv(
        cfg.out_path,
        "tau,mutual_info,eof_bound_even,eof_bound_odd,eof_bound,s_atom,s_field,s_joint",
        rows,
    )
    return 0


def cmd_ppt23(cfg: ScanConfig) -> int:
    """Exact verdict scan for the mixed atom against the number state |n>."""
    rows = []
    for tau in tau_grid(cfg.tau_max, cfg.steps):
        v = atom_thermal_scenario(cfg.lambda_e, cfg.n, tau, g=cfg.g)
        rows.append(
            [
                _fmt(tau),
                _fmt(v.min_pt_eigenvalue),
                _fmt(v.negativity),
                "true" if v.is_ppt else "false",
            ]
        )
    _write_csv(cfg.out_path, "tau,min_pt_eigenvalue,negativity,is_ppt", rows)
    return 0


def _perturbed(state, eps: float):
    """Shift every block angle by eps (negative control for validate)."""
    c, s = state.cos_amp, state.sin_amp
    ce, se = math.cos(eps), math.sin(eps)
    return dataclasses.replace(state, cos_amp=c * ce - s * se, sin_amp=s * ce + c * se)


def _check_oracle_equivalence(perturb: Optional[float]):
    worst = 0.0
    for nbar in (0.0, 0.5, 1.0):
        dist = thermal_distribution(nbar, 1e-12)
        n_cut = dist.cutoff + 2
        h = truncated_hamiltonian(n_cut)
        rho0 = thermal_excited_state(dist, n_cut)
        for tau in np.linspace(0.0, 10.0, 11):
            state = evolve(dist, JcmParams.from_tau(tau))
            if perturb:
                state = _perturbed(state, perturb)
            analytic = assemble_dense(state, n_levels=n_cut + 1)
            numeric = propagate(h, rho0, tau)
            worst = max(worst, trace_distance(analytic, numeric))
    return worst


def _check_witness_vs_ppt():
    dist = thermal_distribution(1.0, 1e-12)
    mismatches = 0
    taus = np.linspace(0.0, 10.0, 41)
    for tau in taus:
        state = evolve(dist, JcmParams.from_tau(tau))
        for n in range(1, 21):
            lam = lambda_witness(n, tau)
            if abs(lam) > 1e-12 and inseparability_condition(dist, n, tau) != (lam > 0.0):
                mismatches += 1
            verdict = ppt_verdict(project_pair(state, n).rho)
            if abs(verdict.min_pt_eigenvalue) > 1e-9 and verdict.entangled != (lam > 0.0):
                mismatches += 1
    return float(mismatches)


def _check_concurrence_battery():
    rng = np.random.default_rng(20240811)
    worst = 0.0
    for _ in range(500):
        d = rng.uniform(0.01, 1.0, size=4)
        d /= d.sum()
        mag = rng.uniform(0.0, 0.999) * math.sqrt(d[1] * d[2])
        coh = mag * np.exp(2j * math.pi * rng.uniform())
        rho = np.diag(d).astype(complex)
        rho[1, 2] = coh
        rho[2, 1] = np.conj(coh)
        worst = max(worst, abs(concurrence_general(rho) - concurrence_xstate(d, coh)))
    return worst


def _check_entropy_conservation():
    rng = np.random.default_rng(77)
    worst = 0.0
    for _ in range(40):
        a = rng.uniform(0.05, 1.0, size=3)
        a /= a.sum()
        b = rng.uniform(0.05, 1.0, size=4)
        b /= b.sum()
        joint = np.kron(a, b)
        worst = max(
            worst,
            abs(von_neumann_entropy(joint) - von_neumann_entropy(a) - von_neumann_entropy(b)),
        )
    # Spectrum of the joint state must stay pinned to the thermal weights.
    dist = thermal_distribution(2.0, 1e-12)
    for tau in (0.0, 1.3, 7.9):
        spec = joint_spectrum(evolve(dist, JcmParams.from_tau(tau)))
        worst = max(worst, float(np.max(np.abs(spec - dist.probs))))
    return worst


def cmd_validate(cfg: ScanConfig) -> int:
    """Cross-check suite; any failed line flips the exit code to 2."""
    checks = [
        ("oracle equivalence (max trace distance)", _check_oracle_equivalence(cfg.perturb), 1e-8),
        ("witness vs verdict sign mismatches", _check_witness_vs_ppt(), 0.0),
        ("x-state vs general concurrence (max |diff|)", _check_concurrence_battery(), 1e-10),
        ("entropy conservation (max |diff|)", _check_entropy_conservation(), 1e-10),
    ]
    all_ok = True
    for name, err, tol in checks:
        ok = err <= tol
        all_ok = all_ok and ok
        print(f"{name}: measured {err:.3e} vs tolerance {tol:.3e} -> {'ok' if ok else 'FAIL'}")
    print("validation " + ("passed" if all_ok else "FAILED"))
    return 0 if all_ok else 2


def cmd_demo(cfg: ScanConfig) -> int:
    """Print the pure-qubit/mixed-qubit example and its verdict."""
    dm, verdict = qubit_qubit_demo()
    print("output state (real part):")
    for row in dm.entries.real:
        print("  [" + "  ".join(f"{x:7.4f}" for x in row) + "]")
    print(f"concurrence: {_fmt(verdict.concurrence)}")
    print(f"entanglement of formation: {_fmt(verdict.eof)} bits")
    print(f"min partial-transpose eigenvalue: {_fmt(verdict.min_pt_eigenvalue)}")
    print(f"negativity: {_fmt(verdict.negativity)}")
    print("verdict: " + ("entangled" if verdict.entangled else "separable"))
    return 0


class _Parser(argparse.ArgumentParser):
    # Route argparse failures through the domain-error exit code instead
    # of argparse's default SystemExit(2), which is reserved here for
    # numeric failures.
    def error(self, message):
        raise DomainError(message)


def _int_list(text: str):
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError as exc:
        raise DomainError(f"bad integer list {text!r}") from exc


def _build_parser() -> _Parser:
    parser = _Parser(prog="jcm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_lambda = sub.add_parser("lambda", help="witness scan over tau")
    p_lambda.add_argument("--n-list", type=_int_list, default=(0, 10, 100))
    p_lambda.add_argument("--tau-max", type=float, default=25.0)
    p_lambda.add_argument("--steps", type=int, default=2000)
    p_lambda.add_argument("--out", required=True)

    p_bound = sub.add_parser("bound", help="mutual information vs entanglement bound")
    p_bound.add_argument("--nbar", type=float, default=10.0)
    p_bound.add_argument("--tau-max", type=float, default=25.0)
    p_bound.add_argument("--steps", type=int, default=500)
    p_bound.add_argument("--tail-eps", type=float, default=1e-12)
    p_bound.add_argument("--g", type=float, default=1.0)
    p_bound.add_argument("--out", required=True)

    p_ppt = sub.add_parser("ppt23", help="mixed atom vs number state verdicts")
    p_ppt.add_argument("--lambda-e", type=float, default=0.5)
    p_ppt.add_argument("--n", type=int, default=1)
    p_ppt.add_argument("--tau-max", type=float, default=25.0)
    p_ppt.add_argument("--steps", type=int, default=500)
    p_ppt.add_argument("--out", required=True)

    p_val = sub.add_parser("validate", help="run the cross-check suite")
    p_val.add_argument("--perturb", type=float, default=None)

    sub.add_parser("demo", help="two-qubit pure-vs-mixed example")
    return parser


def main(argv=None) -> int:
    try:
        ns = _build_parser().parse_args(argv)
        cfg = ScanConfig(
            command=ns.command,
            nbar=getattr(ns, "nbar", 10.0),
            n_list=getattr(ns, "n_list", (0, 10, 100)),
            tau_max=getattr(ns, "tau_max", 25.0),
            steps=getattr(ns, "steps", 2000),
            tail_eps=getattr(ns, "tail_eps", 1e-12),
            g=getattr(ns, "g", 1.0),
            out_path=getattr(ns, "out", ""),
            lambda_e=getattr(ns, "lambda_e", 0.5),
            n=getattr(ns, "n", 1),
            perturb=getattr(ns, "perturb", None),
        )
        handler = {
            "lambda": cmd_lambda,
            "bound": cmd_bound,
            "ppt23": cmd_ppt23,
            "validate": cmd_validate,
            "demo": cmd_demo,
        }[cfg.command]
        return handler(cfg)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 1
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
