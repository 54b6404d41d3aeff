"""Entanglement and correlation measures for small density matrices.

Everything here is self-contained: the Hermitian eigensolver is a cyclic
Jacobi iteration with complex phase-absorbing rotations, so witness and
measure evaluations do not depend on an external linear-algebra backend.
Entropies are reported in bits (log base 2) throughout, which makes the
maximally entangled two-qubit state carry exactly 1 unit of entanglement.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, NumericError

__all__ = [
    "DensityMatrix",
    "EntanglementVerdict",
    "hermitian_eigenvalues",
    "von_neumann_entropy",
    "mutual_information",
    "partial_transpose",
    "ppt_verdict",
    "concurrence_general",
    "concurrence_xstate",
    "eof_from_concurrence",
    "qubit_qubit_demo",
]

_PPT_TOL = 1e-10
# Dimensions at which a positive partial transpose certifies separability.
_CONCLUSIVE_DIMS = ((2, 2), (2, 3))


def _as_matrix(m) -> np.ndarray:
    if isinstance(m, DensityMatrix):
        return m.entries
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    return a


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Dense Hermitian matrix with unit trace, optionally bipartite.

    Attributes:
        entries: dim x dim complex array (read-only after construction).
        subsystem_dims: optional (d_A, d_B) with d_A * d_B = dim.
    """

    entries: np.ndarray
    subsystem_dims: Optional[tuple] = None

    def __post_init__(self):
        a = np.array(self.entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DomainError(f"density matrix must be square, got shape {a.shape}")
        scale = max(1.0, float(np.max(np.abs(a))) if a.size else 1.0)
        if float(np.max(np.abs(a - a.conj().T))) > 1e-12 * scale:
            raise DomainError("density matrix is not Hermitian within 1e-12")
        tr = float(np.trace(a).real)
        if abs(tr - 1.0) > 1e-10:
            raise DomainError(f"density matrix trace {tr} deviates from 1 beyond 1e-10")
        if self.subsystem_dims is not None:
            d_a, d_b = self.subsystem_dims
            if int(d_a) * int(d_b) != a.shape[0]:
                raise DomainError(
                    f"subsystem dims {self.subsystem_dims} incompatible with dim {a.shape[0]}"
                )
            object.__setattr__(self, "subsystem_dims", (int(d_a), int(d_b)))
        a.flags.writeable = False
        object.__setattr__(self, "entries", a)

    @classmethod
    def build(cls, entries, subsystem_dims=None, normalize: bool = False) -> "DensityMatrix":
        """Construct, optionally rescaling the entries to unit trace."""
        a = np.array(entries, dtype=complex)
        if normalize:
            tr = float(np.trace(a).real)
            if tr <= 0.0 or not math.isfinite(tr):
                raise DomainError(f"cannot normalize matrix with trace {tr}")
            a = a / tr
        return cls(entries=a, subsystem_dims=subsystem_dims)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def min_eigenvalue(self) -> float:
        return float(hermitian_eigenvalues(self.entries)[0])

    def assert_psd(self, tol: float = _PPT_TOL) -> None:
        """Raise DomainError if the smallest eigenvalue is below -tol."""
        lo = self.min_eigenvalue()
        if lo < -tol:
            raise DomainError(f"matrix is not positive semidefinite: min eigenvalue {lo}")


@dataclass(frozen=True)
class EntanglementVerdict:
    """Partial-transpose test outcome, optionally with concurrence data.

    ppt_conclusive is True only at dimensions where a positive partial
    transpose also certifies separability (2x2 and 2x3); elsewhere a
    negative eigenvalue still certifies entanglement but a positive
    spectrum decides nothing.
    """

    min_pt_eigenvalue: float
    is_ppt: bool
    ppt_conclusive: bool
    negativity: float
    concurrence: Optional[float] = None
    eof: Optional[float] = None

    @property
    def entangled(self) -> bool:
        return not self.is_ppt


def _jacobi_eigensystem(matrix: np.ndarray, want_vectors: bool):
    """Cyclic Jacobi diagonalization of a complex Hermitian matrix.

    Each rotation absorbs the phase of the pivot entry so the 2x2
    subproblem reduces to the real symmetric case.  Convergence is
    declared when the off-diagonal Frobenius mass drops below 1e-14
    of the matrix norm; pivots too small to affect that budget are
    zeroed outright, which also keeps subnormal entries out of the
    phase division.
    """
    a = np.array(matrix, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex) if want_vectors else None
    fro = float(np.linalg.norm(a))
    if fro == 0.0:
        return np.zeros(n), v
    thresh = 1e-14 * fro
    skip_floor = 1e-3 * thresh / (n * n)
    for _sweep in range(100):
        off = a.copy()
        np.fill_diagonal(off, 0.0)
        if float(np.linalg.norm(off)) <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g0 = float(abs(a[p, q]))
                if g0 <= skip_floor:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                phase = complex(float(a[p, q].real) / g0, float(a[p, q].imag) / g0)
                theta = (float(a[q, q].real) - float(a[p, p].real)) / (2.0 * g0)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * np.conj(phase) * colq
                a[:, q] = s * phase * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * phase * rowq
                a[q, :] = s * np.conj(phase) * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if want_vectors:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * np.conj(phase) * vq
                    v[:, q] = s * phase * vp + c * vq
    else:
        raise NumericError("Jacobi iteration did not converge within 100 sweeps")
    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    if want_vectors:
        return w[order], v[:, order]
    return w[order], None


def hermitian_eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending.

    Raises:
        DomainError: input deviates from Hermitian beyond 1e-10.
        NumericError: iteration cap reached without convergence.
    """
    a = _as_matrix(m)
    scale = max(1.0, float(np.max(np.abs(a))) if a.size else 1.0)
    if float(np.max(np.abs(a - a.conj().T))) > 1e-10 * scale:
        raise DomainError("matrix is not Hermitian within 1e-10")
    a = (a + a.conj().T) / 2.0
    w, _ = _jacobi_eigensystem(a, want_vectors=False)
    return w


def von_neumann_entropy(spectrum) -> float:
    """-sum(p log2 p) over a probability spectrum, with 0 log 0 = 0.

    Entries in [-1e-10, 0) are treated as round-off and clamped to 0.

    Raises:
        DomainError: an entry is below -1e-10, or the spectrum mass
            deviates from 1 by more than 1e-6.
    """
    w = np.asarray(spectrum, dtype=float).ravel()
    if w.size == 0:
        raise DomainError("empty spectrum")
    if float(np.min(w)) < -1e-10:
        raise DomainError(f"spectrum entry {float(np.min(w))} below -1e-10")
    total = float(np.sum(w))
    if abs(total - 1.0) > 1e-6:
        raise DomainError(f"spectrum mass {total} deviates from 1 beyond 1e-6")
    w = np.where(w < 0.0, 0.0, w)
    nz = w[w > 0.0]
    return float(-np.sum(nz * np.log2(nz)))


def mutual_information(s_a: float, s_f: float, s_af: float) -> float:
    """I = S_A + S_B - S_AB in bits, clamped to 0 within round-off.

    Raises:
        DomainError: a negative entropy was passed in.
        NumericError: the combination is below -1e-6, which signals
            inconsistent inputs rather than round-off.
    """
    if s_a < 0.0 or s_f < 0.0 or s_af < 0.0:
        raise DomainError("entropies must be nonnegative")
    value = s_a + s_f - s_af
    if value < -1e-6:
        raise NumericError(f"mutual information {value} below -1e-6")
    if -1e-9 <= value < 0.0:
        return 0.0
    return value


def partial_transpose(rho: DensityMatrix) -> np.ndarray:
    """Transpose the second subsystem; Hermitian and trace preserving.

    Raises:
        DomainError: rho carries no subsystem_dims.
    """
    if rho.subsystem_dims is None:
        raise DomainError("partial transpose requires subsystem_dims")
    d_a, d_b = rho.subsystem_dims
    dim = rho.dim
    blocked = rho.entries.reshape(d_a, d_b, d_a, d_b)
    return np.ascontiguousarray(blocked.transpose(0, 3, 2, 1).reshape(dim, dim))


def ppt_verdict(rho: DensityMatrix, d_a: Optional[int] = None, d_b: Optional[int] = None) -> EntanglementVerdict:
    """Run the partial-transpose test on a bipartite state.

    Dimensions are taken from the arguments or from rho.subsystem_dims.
    The sufficiency flag is granted only at 2x2 and 2x3; at any other
    split the eigenvalue data is still computed but a positive spectrum
    remains inconclusive.  For 2x2 inputs the concurrence and the
    entanglement of formation are filled in as well.
    """
    if d_a is not None or d_b is not None:
        if d_a is None or d_b is None:
            raise DomainError("pass both subsystem dimensions or neither")
        dims = (int(d_a), int(d_b))
        if rho.subsystem_dims is not None and rho.subsystem_dims != dims:
            raise DomainError(
                f"requested dims {dims} disagree with state dims {rho.subsystem_dims}"
            )
        if dims[0] * dims[1] != rho.dim:
            raise DomainError(f"dims {dims} incompatible with matrix dim {rho.dim}")
        if rho.subsystem_dims is None:
            rho = DensityMatrix(entries=rho.entries, subsystem_dims=dims)
    elif rho.subsystem_dims is None:
        raise DomainError("state carries no subsystem_dims")

    eigs = hermitian_eigenvalues(partial_transpose(rho))
    min_pt = float(eigs[0])
    negativity = float(-np.sum(eigs[eigs < 0.0]))
    conc = None
    eof = None
    if rho.subsystem_dims == (2, 2):
        conc = concurrence_general(rho)
        eof = eof_from_concurrence(conc)
    return EntanglementVerdict(
        min_pt_eigenvalue=min_pt,
        is_ppt=min_pt >= -_PPT_TOL,
        ppt_conclusive=rho.subsystem_dims in _CONCLUSIVE_DIMS,
        negativity=negativity,
        concurrence=conc,
        eof=eof,
    )


# Spin-flip matrix sigma_y (x) sigma_y in the computational basis.
_SPIN_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


def _clamp_spectrum(w: np.ndarray) -> np.ndarray:
    # Relative clamp before sqrt: rank-deficient states otherwise leak
    # O(sqrt(eps)) noise into the concurrence.
    cut = 64.0 * np.finfo(float).eps * max(float(w[-1]), 0.0)
    return np.where(w < cut, 0.0, w)


def concurrence_general(rho) -> float:
    """Two-qubit concurrence by the spin-flip construction.

    C = max(0, l1 - l2 - l3 - l4) where the l_i are the descending
    square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho).

    Raises:
        DomainError: input is not 4x4 or violates positivity beyond 1e-10.
    """
    a = _as_matrix(rho)
    if a.shape != (4, 4):
        raise DomainError(f"concurrence needs a 4x4 matrix, got {a.shape}")
    a = (a + a.conj().T) / 2.0
    w, v = _jacobi_eigensystem(a, want_vectors=True)
    if float(w[0]) < -_PPT_TOL:
        raise DomainError(f"state is not positive semidefinite: min eigenvalue {w[0]}")
    root = (v * np.sqrt(_clamp_spectrum(w))) @ v.conj().T
    flipped = _SPIN_FLIP @ a.conj() @ _SPIN_FLIP
    m = root @ flipped @ root
    m = (m + m.conj().T) / 2.0
    w2, _ = _jacobi_eigensystem(m, want_vectors=False)
    lam = np.sqrt(_clamp_spectrum(w2))[::-1]
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence_xstate(diag, coherence: complex) -> float:
    """Closed-form concurrence for a state with one inner coherence pair.

    The matrix is diagonal except for the (2,3)/(3,2) entries (1-based),
    i.e. the coherence couples basis states 1 and 2 in 0-based indexing:
    C = 2 max(0, |coherence| - sqrt(diag[0] diag[3])).

    Raises:
        DomainError: wrong diagonal length, negative populations beyond
            round-off, or mass deviating from 1 beyond 1e-6.
    """
    d = np.asarray(diag, dtype=float).ravel()
    if d.size != 4:
        raise DomainError(f"expected 4 diagonal entries, got {d.size}")
    if float(np.min(d)) < -1e-12:
        raise DomainError("negative population beyond round-off")
    if abs(float(np.sum(d)) - 1.0) > 1e-6:
        raise DomainError(f"populations sum to {float(np.sum(d))}, expected 1")
    d = np.where(d < 0.0, 0.0, d)
    return 2.0 * max(0.0, abs(complex(coherence)) - math.sqrt(d[0] * d[3]))


def _binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation in bits from a two-qubit concurrence."""
    c = float(c)
    if not -1e-12 <= c <= 1.0 + 1e-12:
        raise DomainError(f"concurrence must lie in [0, 1], got {c}")
    c = min(1.0, max(0.0, c))
    return _binary_entropy((1.0 + math.sqrt(1.0 - c * c)) / 2.0)


def qubit_qubit_demo():
    """Entangle one pure qubit with one maximally mixed qubit.

    A control-style unitary sends |01> to the symmetric Bell state
    (|01>+|10>)/sqrt(2) and leaves |00> alone, so the input
    |0><0| (x) I/2 becomes an even mixture of |00><00| and the Bell
    projector.  Returns the output state and its verdict; the state is
    entangled with concurrence exactly 1/2.
    """
    inv = 1.0 / math.sqrt(2.0)
    u = np.array(
        [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, inv, inv, 0.0],
            [0.0, inv, -inv, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
        dtype=complex,
    )
    rho_in = np.diag([0.5, 0.5, 0.0, 0.0]).astype(complex)
    rho_out = u @ rho_in @ u.conj().T
    dm = DensityMatrix.build(rho_out, subsystem_dims=(2, 2))
    return dm, ppt_verdict(dm)
