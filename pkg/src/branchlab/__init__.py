"""branchlab: exact branching laws for symmetric subalgebras.

Builds complex semisimple Lie algebras over Gaussian rationals, realizes
involutions and their Iwasawa data, and computes restriction
multiplicities to the fixed-point subalgebra two independent ways: from
the generators of the annihilator of the highest weight vector, and by
brute-force decomposition.
"""

from .branching import (BranchingReport, KStructure, KType, branch_kostant,
                        branch_oracle, build_k_structure, build_k_type,
                        z_lambda_space)
from .chevalley import LieAlgebra, build_lie_algebra, killing_form
from .errors import (BranchlabError, CartanSearchFailure, IdentityViolation,
                     InconsistentSigns, InvalidLabel, NormalizationFailure,
                     NotDominant, NotFiniteType, NotIntegral, NotInvolution,
                     NotMaximallySplit, ParseError, ResourceLimit,
                     StructureViolation)
from .hwmodule import (HWModule, build_irrep, verify_prv_annihilation,
                       weight_multiplicities)
from .ideal import (GeneratorSet, QPolynomial, generator_set, q_polynomial,
                    verify_annihilator, z_vector)
from .mstruct import (FiberLabel, MStructureData, fiber_enumerate,
                      fiber_label, is_spherical, lambda_Me_membership,
                      m_structure, m_trivial, minimal_fiber_element)
from .psembed import (PrincipalSeriesParams, dual_weight, ps_ktype_bound,
                      ps_params, verify_borel_weil_annihilation)
from .realform import (RealFormData, ThetaSpec, build_real_form,
                       classify_simple_restricted, h_m_basis_153,
                       lowest_weights, preset_names, preset_theta_spec,
                       restricted_root_module)
from .rootsys import (CartanMatrix, RootSystem, build_root_system,
                      named_cartan_matrix)
from .scalars import GQ, qq

__all__ = [
    "GQ", "qq",
    "CartanMatrix", "RootSystem", "build_root_system", "named_cartan_matrix",
    "LieAlgebra", "build_lie_algebra", "killing_form",
    "HWModule", "build_irrep", "weight_multiplicities",
    "verify_prv_annihilation",
    "ThetaSpec", "RealFormData", "build_real_form", "preset_names",
    "preset_theta_spec", "restricted_root_module", "lowest_weights",
    "classify_simple_restricted", "h_m_basis_153",
    "QPolynomial", "GeneratorSet", "q_polynomial", "z_vector",
    "generator_set", "verify_annihilator",
    "KStructure", "KType", "BranchingReport", "build_k_structure",
    "build_k_type", "z_lambda_space", "branch_kostant", "branch_oracle",
    "MStructureData", "FiberLabel", "m_structure", "m_trivial",
    "lambda_Me_membership", "fiber_label", "is_spherical",
    "minimal_fiber_element", "fiber_enumerate",
    "PrincipalSeriesParams", "dual_weight", "ps_params",
    "verify_borel_weil_annihilation", "ps_ktype_bound",
    "BranchlabError", "CartanSearchFailure", "IdentityViolation",
    "InconsistentSigns", "InvalidLabel", "NormalizationFailure",
    "NotDominant", "NotFiniteType", "NotIntegral", "NotInvolution",
    "NotMaximallySplit", "ParseError", "ResourceLimit", "StructureViolation",
]

__version__ = "0.1.0"
