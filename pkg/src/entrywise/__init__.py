"""Entrywise positivity calculus for fixed-dimension PSD matrices.

Sharp threshold constants for polynomial positivity preservers, exact
Schur-polynomial determinantal identities for Hadamard powers, generalized
Rayleigh quotients, and G-orbit stratification of the PSD cone.
"""

from .backends import Backend, GaussianRational, approx_eq, det_exact, solve_exact
from .hadamard import (
    PencilSpec,
    cauchy_binet_lhs,
    cauchy_binet_rhs,
    decomposition_residual,
    entrywise_poly,
    h_matrix,
    hadamard_decomposition,
    hadamard_power,
    pencil_det_closed_form,
    pencil_det_direct,
    vandermonde_solve_moments,
)
from .partitions import (
    Partition,
    StrictTuple,
    hook_dimension,
    hook_partition,
    staircase_complement,
)
from .psd import (
    DiscontinuityProbe,
    RayleighResult,
    discontinuity_probe,
    moore_penrose_sqrt,
    psd_check,
    rayleigh_constant,
    rayleigh_rank_one,
    rayleigh_variational,
)
from .schur import principal_specialization, schur_eval, schur_eval_ssyt_oracle, ssyt_count
from .strata import (
    GroupTag,
    IndexPartition,
    SubspaceBasis,
    closure_probe,
    generate_in_stratum,
    kernel_for_partition,
    rank_bound_check,
    simultaneous_kernel,
    stratify,
    subspace_max_angle,
    verify_offdiagonal_structure,
)
from .threshold import (
    CoefficientTuple,
    admissible,
    admissible_verdict,
    cross_dim_inequality_check,
    empirical_sharpness,
    horn_necessity_witness,
    lmi_check,
    partial_constants,
    pd_refinement_check,
    preserves_positivity_check,
    threshold_constant,
)

__version__ = "0.1.0"

__all__ = [
    "Backend",
    "GaussianRational",
    "approx_eq",
    "det_exact",
    "solve_exact",
    "Partition",
    "StrictTuple",
    "hook_partition",
    "hook_dimension",
    "staircase_complement",
    "schur_eval",
    "schur_eval_ssyt_oracle",
    "ssyt_count",
    "principal_specialization",
    "PencilSpec",
    "hadamard_power",
    "entrywise_poly",
    "h_matrix",
    "pencil_det_direct",
    "pencil_det_closed_form",
    "cauchy_binet_lhs",
    "cauchy_binet_rhs",
    "hadamard_decomposition",
    "decomposition_residual",
    "vandermonde_solve_moments",
    "CoefficientTuple",
    "threshold_constant",
    "partial_constants",
    "admissible",
    "admissible_verdict",
    "preserves_positivity_check",
    "empirical_sharpness",
    "horn_necessity_witness",
    "cross_dim_inequality_check",
    "lmi_check",
    "pd_refinement_check",
    "psd_check",
    "moore_penrose_sqrt",
    "RayleighResult",
    "rayleigh_constant",
    "rayleigh_rank_one",
    "rayleigh_variational",
    "DiscontinuityProbe",
    "discontinuity_probe",
    "GroupTag",
    "IndexPartition",
    "SubspaceBasis",
    "stratify",
    "verify_offdiagonal_structure",
    "simultaneous_kernel",
    "kernel_for_partition",
    "subspace_max_angle",
    "rank_bound_check",
    "generate_in_stratum",
    "closure_probe",
    "__version__",
]
