"""Cyclically regular and regularly closed semigroup varieties.

Word combinatorics (cycles, canonical decompositions, similarity), finite
semigroups as Cayley tables, and decision procedures that work from a
finite identity basis.
"""
from .words import (Identity, ParseError, Word, apply_letter_map, blocking_letters,
                    canonical_decomposition, cycle_intervals, cyclic_characteristic,
                    cyclic_number, e_u_related, is_covered_by_cycles, is_homogeneous,
                    is_regular_word, is_similar, leq_u, letter, letter_name, parse_identity,
                    parse_word)
from .semigroup import (CayleyTable, ClosureError, Presentation, builtin, check_identities_1_2,
                        close_presentation, counterexample, evaluate_word, idempotents,
                        is_cyclically_regular, is_regularly_closed, principal_ideal,
                        regular_elements, satisfies_identity)
from .enumeration import enumerate_semigroups
from .variety import (Basis, Verdict, a0_holds, classify_nonsimilarity,
                      cross_check_regular_closedness, decide_cyclic_regularity,
                      decide_regular_closedness, derive_yx_identity, parse_basis)

__version__ = "0.1.0"
