"""The algebra A_P, graded modules over it, and Tor via bar complexes."""

from .algebra import UNIT, APAlgebra, ap_multiply, rewrite_monomial
from .bar import (HNumber, TorTable, bar_tor_module, bar_tor_trivial, compositions, h_number,
                  module_bar_complex, trivial_bar_complex)
from .group import FiniteAbelianGroup, parse_group
from .module import (GradedModulePresentation, PresentationError, RealizedModule, Relation,
                     direct_sum, example_module, free_module, parse_presentation,
                     quotient_by_element)
from .checks import (random_presentation, verify_regularity_lemma,
                     verify_stabilization_surjectivity)

realize_module = RealizedModule
