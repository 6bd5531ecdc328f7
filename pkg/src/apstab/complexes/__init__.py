"""Simplicial complexes, finite posets, matching complexes and the RBS dictionary."""

from .poset import FinitePoset, PosetError, chain_poset, order_complex, x_poset
from .rbs import (boundary_rbs, is_rbs_list, merge, partial_sums, rbs_le, rbs_lists, rbs_poset,
                  rbs_to_sdx, sdx_to_rbs)
from .simplicial import SimplicialComplex, boundary_of_simplex, matching_complex, simplex
from .textio import complex_to_text, parse_complex, parse_poset, poset_to_text
