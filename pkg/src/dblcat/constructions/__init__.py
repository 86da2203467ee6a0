"""Standard shapes and constructions on finite double categories and 2-categories."""
from .basic import (combine, coproduct, coproduct_functor, coproduct_injection,
                    copairing, dualize, empty, initial_functor, one, product,
                    product_functor, projection, terminal_functor, transpose,
                    transpose_functor, transpose_square_names, underlying,
                    underlying_functor, vop, vop_functor)
from .companion2cat import (companion_2cat, companion_2cat_functor,
                            companion_2cat_keys, companion_1cell_name,
                            compose_companions, sq_unit)
from .embed import (compose_adjoint_equivalences, embed, embed_functor,
                    homotopical_embedding, identity_adjoint_equivalence,
                    sq_square_name, square_category)
from .hom import (HomData, Modification, Transformation, hom_2category,
                  strict_hom, strict_hom_data, strict_hom_functor,
                  vertical_endpoints)
from .shapes import (PARALLEL_COPY, SEED_NAMES, SHAPE_NAMES, WALKING_SQUARE,
                     from_category, seed, shape)
from .twocat import (AdjointEquivalenceData, EquivalenceData,
                     all_adjoint_equivalences, core_2gpd,
                     enumerate_adjoint_equivalences, equivalence_data,
                     equivalences, invertible_cells, is_invertible_cell,
                     is_isomorphic_1cells, promote_to_adjoint,
                     triangle_identities, vertical_inverse)
