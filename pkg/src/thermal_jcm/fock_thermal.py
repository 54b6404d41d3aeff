"""Thermal photon-number statistics with explicit truncation.

A single bosonic mode in thermal equilibrium carries the geometric
number distribution P_n = (1/(1+nbar)) * (nbar/(1+nbar))**n, where nbar
is the mean photon number.  Downstream consumers index the neighbours
P_{n-1} and P_{n+1} of every level they touch, so the truncation always
keeps at least three levels and guarantees that the discarded tail mass
stays below ``tail_eps``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericError

__all__ = [
    "ThermalDistribution",
    "thermal_distribution",
    "nbar_from_temperature",
]


@dataclass(frozen=True)
class ThermalDistribution:
    """Truncated geometric distribution over photon numbers 0..cutoff.

    Attributes:
        nbar: mean photon number, >= 0.
        probs: probs[n] = P_n for 0 <= n <= cutoff.
        cutoff: largest retained photon number (>= 2).
        tail_eps: admissible probability mass beyond the cutoff.
    """

    nbar: float
    probs: np.ndarray
    cutoff: int
    tail_eps: float

    def prob(self, n: int) -> float:
        """P_n, with the convention P_n = 0 for n < 0 or n > cutoff."""
        if 0 <= n <= self.cutoff:
            return float(self.probs[n])
        return 0.0

    @property
    def ratio(self) -> float:
        """Geometric ratio P_{n+1}/P_n = nbar/(1+nbar)."""
        return self.nbar / (1.0 + self.nbar)

    @property
    def tail_mass(self) -> float:
        """Probability mass beyond the cutoff; bounded by tail_eps."""
        return max(0.0, 1.0 - float(np.sum(self.probs)))


def thermal_distribution(
    nbar: float, tail_eps: float = 1e-12, min_cutoff: int = 2
) -> ThermalDistribution:
    """Build the truncated thermal distribution for mean photon number nbar.

    The cutoff N is the smallest integer whose cumulative mass reaches
    1 - tail_eps, floored at max(2, min_cutoff).  Probabilities are
    generated by the recurrence P_{n+1} = P_n * nbar/(1+nbar), which
    keeps the geometric ratio (and the identity P_n^2 = P_{n-1} P_{n+1})
    exact to machine precision.  The cumulative-mass condition is
    verified on the float-summed array and the cutoff is bumped upward
    if summation round-off left it short.

    Raises:
        DomainError: nbar negative or not finite, or tail_eps not in (0, 1).
        NumericError: tail_eps is below what float summation can resolve.
    """
    nbar = float(nbar)
    tail_eps = float(tail_eps)
    if not math.isfinite(nbar) or nbar < 0.0:
        raise DomainError(f"nbar must be finite and >= 0, got {nbar}")
    if not (0.0 < tail_eps < 1.0):
        raise DomainError(f"tail_eps must lie in (0, 1), got {tail_eps}")
    floor = max(2, int(min_cutoff))

    if nbar == 0.0:
        probs = np.zeros(floor + 1)
        probs[0] = 1.0
        return ThermalDistribution(nbar=0.0, probs=probs, cutoff=floor, tail_eps=tail_eps)

    r = nbar / (1.0 + nbar)
    p0 = 1.0 / (1.0 + nbar)
    # Analytic candidate: mass beyond N is r^(N+1), so solve r^(N+1) <= tail_eps.
    n_candidate = max(floor, math.ceil(math.log(tail_eps) / math.log(r)) - 1)

    probs = np.empty(n_candidate + 1)
    probs[0] = p0
    probs[1:] = p0 * np.cumprod(np.full(n_candidate, r))
    total = float(np.sum(probs))

    # Round-off in the float sum can leave the analytic candidate short
    # of the mass target; extend one level at a time until it holds.
    extra = []
    p = float(probs[-1])
    while 1.0 - total > tail_eps:
        p_next = p * r
        total_next = total + p_next
        if p_next == 0.0 or total_next == total:
            raise NumericError(
                f"tail_eps={tail_eps} is below float summation resolution for nbar={nbar}"
            )
        extra.append(p_next)
        p = p_next
        total = total_next
    if extra:
        probs = np.concatenate([probs, np.array(extra)])

    return ThermalDistribution(
        nbar=nbar, probs=probs, cutoff=len(probs) - 1, tail_eps=tail_eps
    )


def nbar_from_temperature(beta_hbar_omega: float) -> float:
    """Mean photon number 1/(exp(beta*hbar*omega) - 1) of a thermal mode.

    The argument is the mode quantum divided by the thermal energy, so
    large values are the cold limit (nbar -> 0) and small positive
    values the hot limit.  The infinite-temperature case must be
    requested through nbar directly, not through this map.

    Raises:
        DomainError: argument not finite or not strictly positive.
    """
    x = float(beta_hbar_omega)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"beta_hbar_omega must be finite and > 0, got {x}")
    return 1.0 / math.expm1(x)
