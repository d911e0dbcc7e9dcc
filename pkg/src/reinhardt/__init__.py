"""Exact Bergman kernels of elementary Reinhardt domains.

Construct the closed-form kernel of ``H(k)`` for signature-one exponent
vectors, compute monomial norms on model domains and (by exact iterated
integration) on arbitrary ``H(k)``, expand kernels into exact Laurent
coefficient windows, and verify everything through independent routes —
shadow integrals, annihilating operators, branch sums, and Monte-Carlo.
"""

from .counting import IndexSetG, coefficient_C, index_set, pair_count, pair_count_bruteforce
from .domains import (
    DomainSpec,
    MultiIndex,
    NormValue,
    domain_contains,
    lcm_data,
    model_spec,
    normalize_spec,
    shadow_contains,
    standard_proper_map_exponents,
)
from .exact import (
    DivergentIntegral,
    FracExpSum,
    LaurentChunk,
    OutsideWindow,
    SparsePoly,
    integrate_one_var,
)
from .kernels import (
    RationalKernel,
    SingularEvaluation,
    kernel_fat_hartogs,
    kernel_model_sig1,
    kernel_signature_one,
    kernel_thin_hartogs,
)
from .norms import RSPair, beta_star, build_RS, is_norm_finite, monomial_norm_model
from .sampling import (
    DivergenceProbe,
    McNormEstimate,
    ReproducingCheck,
    bell_residuals,
    check_bell_identity,
    check_reproducing,
    mc_divergence_probe,
    mc_norm_estimate,
)
from .series import (
    apply_annihilating_operator,
    expand_closed_form,
    rationality_diagnostic,
    series_coefficients_model,
    series_coefficients_oracle,
    slice_coefficients,
)
from .shadow import monomial_norm_oracle, shadow_integral_exact
from .verify import run_suites

__version__ = "0.1.0"

__all__ = [
    "DivergenceProbe",
    "DivergentIntegral",
    "DomainSpec",
    "FracExpSum",
    "IndexSetG",
    "LaurentChunk",
    "McNormEstimate",
    "MultiIndex",
    "NormValue",
    "OutsideWindow",
    "RSPair",
    "RationalKernel",
    "ReproducingCheck",
    "SingularEvaluation",
    "SparsePoly",
    "apply_annihilating_operator",
    "bell_residuals",
    "beta_star",
    "build_RS",
    "check_bell_identity",
    "check_reproducing",
    "coefficient_C",
    "domain_contains",
    "expand_closed_form",
    "index_set",
    "integrate_one_var",
    "is_norm_finite",
    "kernel_fat_hartogs",
    "kernel_model_sig1",
    "kernel_signature_one",
    "kernel_thin_hartogs",
    "lcm_data",
    "mc_divergence_probe",
    "mc_norm_estimate",
    "model_spec",
    "monomial_norm_model",
    "monomial_norm_oracle",
    "normalize_spec",
    "pair_count",
    "pair_count_bruteforce",
    "rationality_diagnostic",
    "run_suites",
    "series_coefficients_model",
    "series_coefficients_oracle",
    "shadow_contains",
    "shadow_integral_exact",
    "slice_coefficients",
    "standard_proper_map_exponents",
]
