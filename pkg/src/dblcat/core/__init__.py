"""Finite double categories, functors and the primitive square calculus."""
from .companions import (CompanionWitness, ConjointWitness, all_companions,
                         all_conjoints, companions_of, conjoints_of,
                         companion_comparisons, identity_companion,
                         is_companion, is_conjoint)
from .model import (HORIZONTAL, VERTICAL, DoubleCategory, DoubleFunctor,
                    Naming, SquareBoundary, TwoCategory, as_two_category,
                    assemble, box_name, check_axioms, check_functor,
                    compose_squares, diagnose_double_category,
                    double_category_from_document, functor_from_maps,
                    functor_to_document, h_identity_name, invert_square,
                    is_vertically_invertible, paste_grid, plain,
                    squares_with_boundary, to_document,
                    validate_double_category, validate_double_functor,
                    validate_two_category)
from .search import (count_functors, enumerate_functors, find_isomorphism,
                     is_isomorphic)
