"""Symbolic verification engine for the divided-power word calculus.

The package normalizes formal compositions of divided-power raising and
lowering generators between the weights of an sl2-string into canonical
direct sums with exact q-graded multiplicities, verifies every
decomposition against the matrix oracle on the tensor-power module,
checks the nil affine Hecke relations in their polynomial representation,
and mechanizes the graded Hom vanishing and simplicity certificates.
"""

from .qcoeff import BigradedLaurent, ExactDivisionError, poincare_proj, qbinom, qfact, qint
from .words import (E, F, ZERO, FormalSum, Generator, WeightConfig, Word, Zero,
                    adjoint, make_word)
from .rewrite import NormalizationBudgetError, is_canonical, merge_step, normalize, straighten_step
from .ktheory import (KMatrix, WeightBasis, formalsum_matrix, generator_matrix,
                      verify_relations, word_matrix)
from .nilhecke import MPoly, apply_nh_word, demazure, idempotent_check, verify_nilhecke
from .homdim import (Certificate, certify_ef_end, certify_end_simple,
                     classify_e2_degree2, transfer_to_identity)

__version__ = "0.1.0"

__all__ = [
    "BigradedLaurent", "ExactDivisionError", "poincare_proj", "qbinom", "qfact",
    "qint", "E", "F", "ZERO", "FormalSum", "Generator", "WeightConfig", "Word",
    "Zero", "adjoint", "make_word", "NormalizationBudgetError", "is_canonical",
    "merge_step", "normalize", "straighten_step", "KMatrix", "WeightBasis",
    "formalsum_matrix", "generator_matrix", "verify_relations", "word_matrix",
    "MPoly", "apply_nh_word", "demazure", "idempotent_check", "verify_nilhecke",
    "Certificate", "certify_ef_end", "certify_end_simple", "classify_e2_degree2",
    "transfer_to_identity",
]
