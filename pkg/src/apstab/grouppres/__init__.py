"""Finitely presented groups, abelianization, and the rank-2 examples over Z[sqrt(-5)]."""

from .builtin import (E_MATRIX, FGT_E_ACTION, FGT_MATRICES, SWAN_E_ACTION, SWAN_MATRICES, ActionReport,
                      MatrixGroupPresentation, RelatorReport, TableEntry, builtin_fgt_sl, builtin_swan_sl2,
                      derive_conjugation_action, gl_extension, paper_table, semidirect_z2, verify_relators)
from .quadratic import W, Matrix2, QuadInt, evaluate
from .words import (AbelianGroupResult, GroupPresentation, PresentationSyntaxError, Word, abelianize,
                    commutator, parse_presentation, parse_relator, parse_word)
