"""Bound quivers, McKay quivers of finite groups, cones of n-complete algebras,
and mechanical truncation checks between them."""
from .quiver import (Arrow, BoundQuiver, Connecting, Coord, Level, Leveled, Path, PathCombo,
                     Quiver, QuiverIsoWitness, Returning, compose, identity_witness,
                     match_arrows, quiver_equal_under, render, trivial_path)
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, root_of_unity
from .character import (CharacterTable, abelian_table, inner_product, load_fixture,
                        product_with_cyclic, sl_embed, tensor_decompose, weights_character)
from .mckay import AbelianMcKaySpec, abelian_bound_mckay, mckay_quiver, nakayama_from_det
from .pathalg import (GradedDims, QuotientEngine, normal_form, quadratic_orthocheck,
                      quotient_dims, stable_translation_check)
from .constructions import (cone, cyclic_cover, linear_a, mckay_returning_arrows_rho,
                            mckay_returning_arrows_theta, t_algebra, twisted_trivial_extension)
from .truncation import (QuiverEmbedding, TruncationReport, is_truncation,
                         cone_cover_pipeline, mckay_truncation_check, idempotent_quotient_check,
                         t_algebra_chain)

__version__ = "0.1.0"
