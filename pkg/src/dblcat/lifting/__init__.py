"""Generating cells, the lifting engine and companion-style searches."""
from ..core import CompanionWitness, ConjointWitness
from .engine import (FibrancyResult, LiftingResult, enumerate_instances,
                     is_naive_fibrant, lifts_against_all, solve_lifting)
from .search import (GregariousAdjEquivWitness,
                     all_gregarious_adjoint_equivalences, find_companionship,
                     find_gregarious_adjoint_equivalence, gregarious_equivalent)
from .shapes import (CATALOG, SET_NAMES, CellShape, cell_shape, generating_set,
                     is_certified, transposed_shape)
