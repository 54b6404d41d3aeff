"""Closed-form resonant atom-field evolution in two-level blocks.

With the atom starting excited and the field diagonal in the number
basis, the joint state stays block diagonal forever: the n-th block is
the pure two-amplitude state spanning {|e,n>, |g,n+1>} rotated by the
angle theta_n = g t sqrt(n+1), carried with thermal weight P_n.  All
reduced quantities and spectra follow from the amplitude arrays without
ever forming the dense joint matrix; the dense assembly exists solely
so an independent propagator can be checked against it.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .fock_thermal import ThermalDistribution
from .measures import DensityMatrix

__all__ = [
    "JcmParams",
    "JcmState",
    "evolve",
    "reduced_atom",
    "reduced_field",
    "joint_spectrum",
    "assemble_dense",
]


@dataclass(frozen=True)
class JcmParams:
    """Coupling constant g > 0 and elapsed time t >= 0."""

    g: float = 1.0
    t: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.g) and self.g > 0.0):
            raise DomainError(f"coupling g must be finite and > 0, got {self.g}")
        if not (math.isfinite(self.t) and self.t >= 0.0):
            raise DomainError(f"time t must be finite and >= 0, got {self.t}")

    @property
    def tau(self) -> float:
        """Dimensionless time g*t used by all scans."""
        return self.g * self.t

    @classmethod
    def from_tau(cls, tau: float, g: float = 1.0) -> "JcmParams":
        if not (math.isfinite(g) and g > 0.0):
            raise DomainError(f"coupling g must be finite and > 0, got {g}")
        return cls(g=g, t=float(tau) / g)


@dataclass(frozen=True)
class JcmState:
    """Joint state as weighted pure blocks.

    Block n holds amplitude cos_amp[n] on |e,n> and an amplitude of
    magnitude sin_amp[n] on |g,n+1> with fixed relative phase -i (the
    sign produced by exp(-iHt)); every downstream measure consumes only
    the coherence magnitude, so the phase convention never leaks out.
    """

    dist: ThermalDistribution
    params: JcmParams
    cos_amp: np.ndarray
    sin_amp: np.ndarray

    @property
    def blocks(self):
        """List of (weight P_n, (c_n, s_n)) for n = 0..cutoff."""
        return [
            (float(self.dist.probs[n]), (float(self.cos_amp[n]), float(self.sin_amp[n])))
            for n in range(self.dist.cutoff + 1)
        ]


def evolve(dist: ThermalDistribution, params: JcmParams) -> JcmState:
    """Rotate every block by its own angle theta_n = g t sqrt(n+1)."""
    theta = params.g * params.t * np.sqrt(np.arange(1, dist.cutoff + 2, dtype=float))
    return JcmState(dist=dist, params=params, cos_amp=np.cos(theta), sin_amp=np.sin(theta))


def reduced_atom(state: JcmState) -> tuple:
    """(p_e, p_g): the atom marginal is diagonal in {|e>, |g>}."""
    probs = state.dist.probs
    p_e = float(np.sum(probs * state.cos_amp**2))
    p_g = float(np.sum(probs * state.sin_amp**2))
    return p_e, p_g


def reduced_field(state: JcmState) -> np.ndarray:
    """Diagonal field occupations q_k for k = 0..cutoff+1.

    q_0 = P_0 c_0^2 and q_k = P_k c_k^2 + P_{k-1} s_{k-1}^2; the top
    entry k = cutoff+1 holds only the emission out of the last block.
    """
    probs = state.dist.probs
    q = np.zeros(state.dist.cutoff + 2)
    q[: state.dist.cutoff + 1] = probs * state.cos_amp**2
    q[1:] += probs * state.sin_amp**2
    return q


def joint_spectrum(state: JcmState) -> np.ndarray:
    """Eigenvalues of the joint state: exactly the thermal weights.

    Each block is pure and distinct blocks occupy orthogonal subspaces,
    so the spectrum is {P_n} at every time.
    """
    return state.dist.probs.copy()


def assemble_dense(state: JcmState, n_levels: int = None, normalize: bool = True) -> DensityMatrix:
    """Assemble the dense joint matrix (validation path only).

    Basis ordering is atom-major with the ground row first: index
    k encodes |g,k> and index n_levels + k encodes |e,k>.  n_levels
    defaults to cutoff+2, the smallest field space holding every block;
    larger values zero-pad, which the independent propagator needs for
    its guard band.  With normalize=False the trace equals the retained
    thermal mass instead of 1.
    """
    cutoff = state.dist.cutoff
    levels = cutoff + 2 if n_levels is None else int(n_levels)
    if levels < cutoff + 2:
        raise DomainError(f"need at least {cutoff + 2} field levels, got {levels}")
    probs = state.dist.probs
    dim = 2 * levels
    rho = np.zeros((dim, dim), dtype=complex)
    for n in range(cutoff + 1):
        p = probs[n]
        c = state.cos_amp[n]
        s = state.sin_amp[n]
        e_n = levels + n
        g_n1 = n + 1
        rho[e_n, e_n] += p * c * c
        rho[g_n1, g_n1] += p * s * s
        coh = 1j * p * c * s
        rho[e_n, g_n1] += coh
        rho[g_n1, e_n] -= coh
    return DensityMatrix.build(rho, subsystem_dims=(2, levels), normalize=normalize)
