"""Finite double categories: companions, lifting problems, model-structure fibrancy and pushouts."""
from . import classifiers, colimits, constructions, core, equivalences, errors, lifting
from .classifiers import audit_recipe, classify, property_check
from .colimits import (attach_object, attach_square_presentation, congruence_closure,
                       free_edge_extension, identify_parallel_squares, quotient)
from .constructions import embed, seed, shape, transpose
from .core import (DoubleCategory, DoubleFunctor, TwoCategory, validate_double_category,
                   validate_double_functor, validate_two_category)
from .equivalences import (four_tuple_witness, is_biequivalence, is_equifibration,
                           is_gregarious_equivalence, is_gregarious_fibration,
                           is_trivial_fibration)
from .lifting import generating_set, is_naive_fibrant, solve_lifting

__version__ = "0.1.0"
