"""Brute-force dense propagation used to cross-check the closed form.

This path deliberately knows nothing about the block solution: it
builds the full coupling Hamiltonian on a truncated number space and
propagates with a generic dense matrix exponential.  Agreement with the
assembled analytic state is therefore evidence, not tautology.  Being
infrastructure rather than result, it is allowed to lean on scipy/numpy
for the exponential and for eigenvalues of large matrices.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import DomainError, NumericError
from .fock_thermal import ThermalDistribution, thermal_distribution
from .measures import DensityMatrix

__all__ = [
    "TruncatedHamiltonian",
    "truncated_hamiltonian",
    "thermal_excited_state",
    "propagate",
    "trace_distance",
    "extract_pair_submatrix",
    "distribution_for_cutoff",
]

# Guard band between the thermal truncation and the propagation space:
# the interaction moves exactly one excitation, so two spare levels keep
# every retained block away from the reflecting boundary.
GUARD_LEVELS = 2


@dataclass(frozen=True)
class TruncatedHamiltonian:
    """Resonant coupling g sqrt(n+1) between |e,n> and |g,n+1>.

    The matrix acts on atom x field with field levels 0..n_cut, ordered
    atom-major with the ground row first (matching assemble_dense).
    """

    n_cut: int
    g: float
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return 2 * (self.n_cut + 1)


def truncated_hamiltonian(n_cut: int, g: float = 1.0) -> TruncatedHamiltonian:
    """Build the coupling matrix on field levels 0..n_cut."""
    n_cut = int(n_cut)
    if n_cut < 1:
        raise DomainError(f"n_cut must be >= 1, got {n_cut}")
    if not (math.isfinite(g) and g > 0.0):
        raise DomainError(f"coupling g must be finite and > 0, got {g}")
    levels = n_cut + 1
    h = np.zeros((2 * levels, 2 * levels))
    for n in range(n_cut):
        e_n = levels + n
        g_n1 = n + 1
        h[e_n, g_n1] = g * math.sqrt(n + 1.0)
        h[g_n1, e_n] = h[e_n, g_n1]
    h.flags.writeable = False
    return TruncatedHamiltonian(n_cut=n_cut, g=float(g), matrix=h)


def thermal_excited_state(dist: ThermalDistribution, n_cut: int) -> DensityMatrix:
    """Excited atom with the truncated thermal field, on the oracle space.

    Raises:
        DomainError: n_cut leaves no guard band above the truncation.
    """
    n_cut = int(n_cut)
    if n_cut < dist.cutoff + GUARD_LEVELS:
        raise DomainError(
            f"n_cut must be >= cutoff + {GUARD_LEVELS} = {dist.cutoff + GUARD_LEVELS}, got {n_cut}"
        )
    levels = n_cut + 1
    diag = np.zeros(2 * levels)
    diag[levels : levels + dist.cutoff + 1] = dist.probs
    return DensityMatrix.build(np.diag(diag), subsystem_dims=(2, levels), normalize=True)


def propagate(h: TruncatedHamiltonian, rho0: DensityMatrix, t: float) -> DensityMatrix:
    """U rho0 U+ with U = expm(-i H t); unitarity is verified to 1e-10.

    Raises:
        DomainError: dimension mismatch or negative time.
        NumericError: the computed propagator fails the unitarity check.
    """
    t = float(t)
    if not (math.isfinite(t) and t >= 0.0):
        raise DomainError(f"time must be finite and >= 0, got {t}")
    if rho0.dim != h.dim:
        raise DomainError(f"state dim {rho0.dim} does not match Hamiltonian dim {h.dim}")
    u = expm(-1j * t * h.matrix)
    drift = float(np.max(np.abs(u @ u.conj().T - np.eye(h.dim))))
    if drift > 1e-10:
        raise NumericError(f"propagator unitarity drift {drift} exceeds 1e-10")
    rho = u @ rho0.entries @ u.conj().T
    rho = (rho + rho.conj().T) / 2.0
    return DensityMatrix(entries=rho, subsystem_dims=rho0.subsystem_dims)


def trace_distance(a, b) -> float:
    """Half the sum of absolute eigenvalues of the difference.

    Raises:
        DomainError: operands have different dimensions.
    """
    ma = a.entries if isinstance(a, DensityMatrix) else np.asarray(a, dtype=complex)
    mb = b.entries if isinstance(b, DensityMatrix) else np.asarray(b, dtype=complex)
    if ma.shape != mb.shape:
        raise DomainError(f"shape mismatch: {ma.shape} vs {mb.shape}")
    diff = ma - mb
    diff = (diff + diff.conj().T) / 2.0
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(diff))))


def extract_pair_submatrix(rho: DensityMatrix, n: int) -> np.ndarray:
    """Unnormalized 4x4 block on {|g,n>, |g,n+1>, |e,n>, |e,n+1>}.

    The trace of the result is the probability of the pair projection,
    so callers can normalize and compare against the analytic outcome.

    Raises:
        DomainError: missing/incompatible subsystem split or n out of range.
    """
    if rho.subsystem_dims is None or rho.subsystem_dims[0] != 2:
        raise DomainError("state must carry subsystem_dims (2, levels)")
    levels = rho.subsystem_dims[1]
    n = int(n)
    if n < 0 or n + 1 >= levels:
        raise DomainError(f"pair ({n}, {n + 1}) outside field levels 0..{levels - 1}")
    idx = np.array([n, n + 1, levels + n, levels + n + 1])
    return rho.entries[np.ix_(idx, idx)].copy()


def distribution_for_cutoff(
    nbar: float, n_cut: int, tail_eps: float = 1e-12
) -> ThermalDistribution:
    """Thermal distribution whose truncation fits under a propagation cap.

    Returns the tail_eps distribution when it already fits below
    n_cut - GUARD_LEVELS; otherwise the tail allowance is raised to
    whatever mass actually sits beyond that level, so the oracle can
    hold the whole retained state.  Both evolution routes then start
    from the identical truncated state and the comparison stays exact.
    """
    n_cut = int(n_cut)
    target = n_cut - GUARD_LEVELS
    if target < 2:
        raise DomainError(f"n_cut must leave room for 3 levels plus guard, got {n_cut}")
    dist = thermal_distribution(nbar, tail_eps)
    eps = tail_eps
    while dist.cutoff > target:
        r = nbar / (1.0 + nbar)
        head = np.cumprod(np.full(target, r))
        mass = (1.0 + float(np.sum(head))) / (1.0 + nbar)
        eps = max(eps * 2.0, (1.0 - mass) * (1.0 + 1e-9))
        dist = thermal_distribution(nbar, eps)
    return dist
