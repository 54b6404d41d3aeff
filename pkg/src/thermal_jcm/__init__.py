"""Resonant two-level-atom / thermal-field dynamics and entanglement analysis.

The closed-form block evolution lives in jcm_dynamics on top of the
truncated thermal statistics from fock_thermal.  Entanglement and
correlation measures (self-contained eigensolver included) live in
measures, the pair witness and averaged lower bound in witness_bound,
and an independent dense propagator for cross-checks in oracle_sim.
The ``jcm`` console script in cli_reports turns all of it into CSV
scans.
"""

from .errors import DegenerateOutcomeError, DomainError, NumericError
from .fock_thermal import ThermalDistribution, nbar_from_temperature, thermal_distribution
from .jcm_dynamics import (
    JcmParams,
    JcmState,
    assemble_dense,
    evolve,
    joint_spectrum,
    reduced_atom,
    reduced_field,
)
from .measures import (
    DensityMatrix,
    EntanglementVerdict,
    concurrence_general,
    concurrence_xstate,
    eof_from_concurrence,
    hermitian_eigenvalues,
    mutual_information,
    partial_transpose,
    ppt_verdict,
    qubit_qubit_demo,
    von_neumann_entropy,
)
from .oracle_sim import (
    TruncatedHamiltonian,
    distribution_for_cutoff,
    extract_pair_submatrix,
    propagate,
    thermal_excited_state,
    trace_distance,
    truncated_hamiltonian,
)
from .witness_bound import (
    WITNESS_THRESHOLD,
    CorrelationRecord,
    ProjectedState,
    WitnessScan,
    atom_thermal_scenario,
    correlation_record,
    eof_lower_bound,
    inseparability_condition,
    lambda_curve,
    lambda_witness,
    project_pair,
    witness_scan,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateOutcomeError",
    "DomainError",
    "NumericError",
    "ThermalDistribution",
    "nbar_from_temperature",
    "thermal_distribution",
    "JcmParams",
    "JcmState",
    "assemble_dense",
    "evolve",
    "joint_spectrum",
    "reduced_atom",
    "reduced_field",
    "DensityMatrix",
    "EntanglementVerdict",
    "concurrence_general",
    "concurrence_xstate",
    "eof_from_concurrence",
    "hermitian_eigenvalues",
    "mutual_information",
    "partial_transpose",
    "ppt_verdict",
    "qubit_qubit_demo",
    "von_neumann_entropy",
    "TruncatedHamiltonian",
    "distribution_for_cutoff",
    "extract_pair_submatrix",
    "propagate",
    "thermal_excited_state",
    "trace_distance",
    "truncated_hamiltonian",
    "WITNESS_THRESHOLD",
    "CorrelationRecord",
    "ProjectedState",
    "WitnessScan",
    "atom_thermal_scenario",
    "correlation_record",
    "eof_lower_bound",
    "inseparability_condition",
    "lambda_curve",
    "lambda_witness",
    "project_pair",
    "witness_scan",
    "__version__",
]
