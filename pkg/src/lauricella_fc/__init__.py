"""Lauricella F_C: series evaluation, local solution bases, twisted
intersection numbers, and verified quadratic period relations."""

from .basis import (LocalSolutionSpec, dual_c_vector, dual_parameters,
                    enumerate_basis, eval_local_solution, transform_parameters)
from .core import (EvaluationPoint, ExponentialParameters, GenericityViolation,
                   ParameterSet, SubsetIndex, ValidationResult, as_point,
                   distance_to_integers, exponential_parameters,
                   singular_locus_value, validate_parameters)
from .errors import (ConvergenceConditionError, DegenerateParameterError,
                     DomainError, FCError, GammaPoleError,
                     MalformedParameterError, PrefactorSingularityError)
from .intersection import (HomologyIntersectionMatrix, enumerate_flags,
                           flag_denominator_sum, ic_phi_phi, ic_phi_phiprime,
                           ih_matrix, ih_self)
from .pde import TruncatedPolynomial, apply_ec_operator, fc_truncation, pde_residual
from .quadrature import euler_integral_m1, verify_integral_identity
from .relations import RelationReport, tpr1_raw, tpr1_reduced, tpr2_reduced
from .series import (DEFAULT_CAP, DEFAULT_REL_TOL, SeriesValue,
                     direct_sum_oracle, eval_fc, term_ratio)
from .special import gamma, log_gamma, pairing_g, pairing_g_dual, prefactor_F

__version__ = "0.1.0"
