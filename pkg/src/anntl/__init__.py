"""Exact annular Temperley-Lieb diagram calculus.

Diagram algebras on the disc and the annulus, Jones-Wenzl idempotents,
annular modules with exact Gram matrices, dimension series and their
multiplicity transform, principal-graph screens, and the null-vector and
obstruction verifications at the index-below-4 special values.
"""

from .scalars import (CycloNumber, Rat, ScalarContext, chebyshev, cyclo,
                      format_scalar, sign, sin_pi_multiple, two_cos_pi_over)
from .tl import (TLDiagram, TLElement, enumerate_tl_basis, jones_wenzl,
                 jw_chain_coefficient, multiply, star, tl_dim, tl_dim_at_root)
from .annular import (AnnularDiagram, WeightedDiagram, compose,
                      enumerate_annular, enumerate_th, enumerate_th_pm,
                      generator, rank)
from .modules import (GramResult, ModuleSpec, ModuleVector, act, ad_rho_half,
                      gram, inner_product, low_weight, lowest_weight_test,
                      lowest_weight_vector, module_basis, mu_module,
                      positivity_profile, zero_module)
from .series import (IntSeries, annular_multiplicities, catalan_series,
                     module_dim_series, sqrt_inv_series, theta_transform)
from .graphs import (PointedBipartiteGraph, all_starts_dims, builtin_graph,
                     loop_counts, rotation_census, screen_principal_graph,
                     spectral_data)
from .ade import (AdeCase, ade_case, biunitary_check, closed_form_norm,
                  degenerate_dims, e7_obstruction, euler_bound, euler_counts,
                  null_norm, null_summary, null_vector,
                  psi_square_coefficients, skein_relation_audit, star_equation,
                  transfer_eigenvalue)

__version__ = "0.1.0"
