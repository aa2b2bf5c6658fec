"""String combinatorics and exact linear algebra for biserial algebras.

The package pairs a combinatorial calculus (string words, translation by
hook surgery, brick systems, node splitting, presentation normalization)
with an exact linear-algebra oracle over the rationals or prime fields,
so that every combinatorial formula can be cross-checked on explicit
module representations.
"""

from .core import (AlgebraElement, AlgebraPresentation, AlgebraTable, Arrow,
                   EqualityRelation, InconsistentRelations, NonAdmissible,
                   Path, Quiver, SocleDeformation, UnsupportedRelation,
                   ZeroRelation, build_table, check_selfinjective_symmetric,
                   multiply, opposite_presentation)
from .fields import Field, QQ
from .presentations import (format_presentation, load_presentation,
                            parse_presentation)
from .strings import (EMPTY, Letter, StringWord, canonical_form,
                      enumerate_strings, is_band, maximal_directed_extensions,
                      string_module, validate_string)
from .translate import (ar_sequence, canonical_map_to_tau_inv,
                        check_tau_period_one_exclusions,
                        cone_of_canonical_map, tau, tau_inv)

__all__ = [
    "AlgebraElement", "AlgebraPresentation", "AlgebraTable", "Arrow",
    "EqualityRelation", "Field", "InconsistentRelations", "Letter",
    "NonAdmissible", "Path", "QQ", "Quiver", "SocleDeformation", "StringWord",
    "UnsupportedRelation", "ZeroRelation", "EMPTY", "ar_sequence",
    "build_table", "canonical_form", "canonical_map_to_tau_inv",
    "check_selfinjective_symmetric", "check_tau_period_one_exclusions",
    "cone_of_canonical_map", "enumerate_strings", "format_presentation",
    "is_band", "load_presentation", "maximal_directed_extensions", "multiply",
    "opposite_presentation", "parse_presentation", "string_module", "tau",
    "tau_inv", "validate_string",
]

__version__ = "0.1.0"
