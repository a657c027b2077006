"""Verification toolkit for q-deformed oscillator algebra and deformed qubit gates.

The library layers are importable on their own: qnum (scalar brackets), fock
(truncated modes and tensor plumbing), qdeform (deformed ladder operators and
algebra residuals), schwinger (two-modes-per-qubit encoding and deformed
states), gates (truth tables, matrices and deformed dyad builds), constraints
(identity residuals and the grid sweep that audits claimed parameter
restrictions).  report and suites feed the qgatelab command-line driver.
"""

from .constraints import (
    CLAIMS,
    ConstraintClaim,
    ConstraintReport,
    discover_constraints,
    hadamard_closure_ratio,
    identity_residual,
)
from .fock import (
    ModeOperators,
    MultiModeState,
    basis_state,
    index_occupation,
    lift,
    make_mode_ops,
    occupation_index,
    vacuum,
)
from .gates import (
    DeformedGateOperator,
    GateKind,
    GateSpec,
    GateTerm,
    deformed_gate_matrix,
    gate_action,
    gate_action_traced,
    gate_matrix,
    toffoli_literal_matrix,
)
from .qdeform import (
    AlgebraResiduals,
    DeformedModeOperators,
    OperatorConvention,
    algebra_residuals,
    deformed_number_op,
    make_deformed_ops,
)
from .qnum import (
    DeformationParams,
    NegativeRadicandError,
    q_bracket,
    q_factorial,
    psi_bracket,
)
from .report import (
    CSV_COLUMNS,
    RELATION_TAGS,
    VERSION,
    CheckRecord,
    VerificationReport,
    canonical_json,
    serialize_report,
)
from .schwinger import (
    DeformedQubitSpec,
    ExponentConvention,
    QubitEmbedding,
    closing_params,
    decode,
    deformed_qubit_state,
    encode_basis,
    jm_state,
    qubit_amplitude,
)
from .suites import RunConfig, SUITE_NAMES, run_suites

__version__ = VERSION

__all__ = [
    "AlgebraResiduals",
    "CLAIMS",
    "CSV_COLUMNS",
    "CheckRecord",
    "ConstraintClaim",
    "ConstraintReport",
    "DeformationParams",
    "DeformedGateOperator",
    "DeformedModeOperators",
    "DeformedQubitSpec",
    "ExponentConvention",
    "GateKind",
    "GateSpec",
    "GateTerm",
    "ModeOperators",
    "MultiModeState",
    "NegativeRadicandError",
    "OperatorConvention",
    "QubitEmbedding",
    "RELATION_TAGS",
    "RunConfig",
    "SUITE_NAMES",
    "VERSION",
    "VerificationReport",
    "algebra_residuals",
    "basis_state",
    "canonical_json",
    "closing_params",
    "decode",
    "deformed_gate_matrix",
    "deformed_number_op",
    "deformed_qubit_state",
    "discover_constraints",
    "encode_basis",
    "gate_action",
    "gate_action_traced",
    "gate_matrix",
    "hadamard_closure_ratio",
    "identity_residual",
    "index_occupation",
    "jm_state",
    "lift",
    "make_deformed_ops",
    "make_mode_ops",
    "occupation_index",
    "psi_bracket",
    "q_bracket",
    "q_factorial",
    "qubit_amplitude",
    "run_suites",
    "serialize_report",
    "toffoli_literal_matrix",
    "vacuum",
]
